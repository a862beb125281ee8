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

from .cluster import (ClusterConfig, ClusterState, Machine, MachineId, MachineStep, Message, auto_memory, broadcast,
                      gather, run_round, scatter)
from .partition import PartitionStrategy, from_file, make_partition, part_sizes, round_robin, seeded_random
from .trace import MachineCounters, RoundTrace, total_entries, total_points

__all__ = [
    'ClusterConfig',
    'ClusterState',
    'Machine',
    'MachineCounters',
    'MachineId',
    'MachineStep',
    'Message',
    'PartitionStrategy',
    'RoundTrace',
    'auto_memory',
    'broadcast',
    'from_file',
    'gather',
    'make_partition',
    'part_sizes',
    'round_robin',
    'run_round',
    'scatter',
    'seeded_random',
    'total_entries',
    'total_points',
]
