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

from .base import K_SCHEMA, SOLVER_REGISTRY, BaseSolver, Solution, get_solver, register_solver
from .clusters import assign_clusters, representatives_cover
from .exact import ExactKCenter, exact_kcenter
from .gonzalez import Gonzalez, gonzalez
from .greedy import greedy_cover
from .pruning import (CoverRecord, ParametricPruning, SelectionRule, WRecord, candidate_radii,
                      classic_parametric_pruning, permutation_stable_pruning)

__all__ = [
    'BaseSolver',
    'K_SCHEMA',
    'CoverRecord',
    'ExactKCenter',
    'Gonzalez',
    'ParametricPruning',
    'SOLVER_REGISTRY',
    'SelectionRule',
    'Solution',
    'WRecord',
    'assign_clusters',
    'candidate_radii',
    'classic_parametric_pruning',
    'exact_kcenter',
    'get_solver',
    'gonzalez',
    'greedy_cover',
    'permutation_stable_pruning',
    'register_solver',
    'representatives_cover',
]
