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

from typing import Dict, List, Literal, Mapping, Optional

import numpy as np

from mpc_kcenter.errors import InvalidParams
from mpc_kcenter.metric import PointId
from mpc_kcenter.utils.utils import json_loads, read_text_from_file

PartitionStrategy = Literal['round-robin', 'seeded-random', 'by-file']


def round_robin(n: int, L: int) -> Dict[PointId, int]:
    return {p: p % L + 1 for p in range(n)}


def seeded_random(n: int, L: int, seed: int) -> Dict[PointId, int]:
    """Shuffle with `seed`, then deal the points out round-robin so part sizes differ by at most one."""
    perm = np.random.default_rng(seed).permutation(n)
    return {int(p): position % L + 1 for position, p in enumerate(perm)}


def from_file(path: str) -> Dict[PointId, int]:
    """Read an explicit map, either a JSON object {"point": machine} or a list indexed by point id."""
    data = json_loads(read_text_from_file(path))
    if isinstance(data, list):
        return {p: int(i) for p, i in enumerate(data)}
    if isinstance(data, dict):
        return {int(p): int(i) for p, i in data.items()}
    raise InvalidParams(message=f'Partition file {path} must hold a JSON list or object.')


def make_partition(strategy: PartitionStrategy,
                   n: int,
                   L: int,
                   seed: int = 0,
                   path: Optional[str] = None) -> Dict[PointId, int]:
    if L < 1:
        raise InvalidParams(message=f'L must be positive, got {L}.')
    if strategy == 'round-robin':
        return round_robin(n, L)
    if strategy == 'seeded-random':
        return seeded_random(n, L, seed)
    if strategy == 'by-file':
        if not path:
            raise InvalidParams(message='The by-file partition needs a partition file.')
        return from_file(path)
    raise InvalidParams(message=f'Unknown partition strategy `{strategy}`.')


def part_sizes(partition: Mapping[PointId, int], L: int) -> List[int]:
    sizes = [0] * L
    for i in partition.values():
        if 1 <= i <= L:
            sizes[i - 1] += 1
    return sizes
