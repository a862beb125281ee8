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

from .algorithm2 import Round2Family, round1_local_coreset, round2_family, run_algorithm2, select_solution
from .baseline import run_baseline4
from .result import DistributedRun, SelectionResult, communication_bound
from .solvers import Algorithm2, Baseline4, DistributedSolver

__all__ = [
    'Algorithm2',
    'Baseline4',
    'DistributedRun',
    'DistributedSolver',
    'Round2Family',
    'SelectionResult',
    'communication_bound',
    'round1_local_coreset',
    'round2_family',
    'run_algorithm2',
    'run_baseline4',
    'select_solution',
]
