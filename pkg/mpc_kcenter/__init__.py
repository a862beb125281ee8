# Copyright 2026 The mpc-kcenter Authors. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

__version__ = '0.1.0'
from . import dkcenter  # noqa: F401  registers the distributed solvers
from .dkcenter import run_algorithm2, run_baseline4
from .metric import MetricInstance, Ordering, build_instance, load_points_csv
from .solvers import Solution, classic_parametric_pruning, exact_kcenter, get_solver, gonzalez

__all__ = [
    'MetricInstance',
    'Ordering',
    'Solution',
    'build_instance',
    'classic_parametric_pruning',
    'exact_kcenter',
    'get_solver',
    'gonzalez',
    'load_points_csv',
    'run_algorithm2',
    'run_baseline4',
]
