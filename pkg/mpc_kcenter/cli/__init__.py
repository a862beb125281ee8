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

from .compare import CompareSummary, compare
from .generate import GeneratorParams, generate, generate_file
from .report import AlgorithmReport, ExperimentReport, ratio_vs_oracle, within_bound
from .runner import RunDescriptor, load_descriptor, solve

__all__ = [
    'AlgorithmReport',
    'CompareSummary',
    'ExperimentReport',
    'GeneratorParams',
    'RunDescriptor',
    'compare',
    'generate',
    'generate_file',
    'load_descriptor',
    'ratio_vs_oracle',
    'solve',
    'within_bound',
]
