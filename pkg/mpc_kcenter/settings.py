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

import os
from typing import Literal, Optional

# Settings for metric ingestion
SYMMETRY_TOLERANCE: float = float(os.getenv('MPC_KCENTER_SYMMETRY_TOL', 1e-9))
TRIANGLE_EXHAUSTIVE_MAX_N: int = int(os.getenv(
    'MPC_KCENTER_TRIANGLE_EXHAUSTIVE_MAX_N', 64))  # Above this size the triangle check samples 3n^2 triples
TRIANGLE_SAMPLE_SEED: int = int(os.getenv('MPC_KCENTER_TRIANGLE_SAMPLE_SEED', 0))

# Settings for the exact oracle
ORACLE_MAX_N: int = int(os.getenv('MPC_KCENTER_ORACLE_MAX_N', 20))
ORACLE_MAX_SUBSETS: int = int(os.getenv('MPC_KCENTER_ORACLE_MAX_SUBSETS', 10**6))

# Settings for the MPC simulator
DEFAULT_ROUND_LIMIT: int = int(os.getenv('MPC_KCENTER_ROUND_LIMIT', 4))
DEFAULT_MEMORY: Optional[int] = int(os.environ['MPC_KCENTER_MEMORY']) if os.getenv(
    'MPC_KCENTER_MEMORY') else None  # None means the budget is derived from the run (see ClusterConfig.auto)
DEFAULT_EXECUTOR: Literal['serial', 'thread'] = os.getenv('MPC_KCENTER_EXECUTOR', 'serial')

# Settings for the command line
DEFAULT_WORKSPACE: str = os.getenv('MPC_KCENTER_WORKSPACE', 'workspace')
RATIO_SLACK: float = float(os.getenv('MPC_KCENTER_RATIO_SLACK', 1e-12))
