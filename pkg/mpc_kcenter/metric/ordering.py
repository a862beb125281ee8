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

from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from mpc_kcenter.errors import InvalidParams, UnknownPointId
from mpc_kcenter.metric.instance import PointId


class Ordering(BaseModel):
    """A total order phi on the ids 0..n-1, stored as rank[p] in 1..n."""
    model_config = ConfigDict(frozen=True)

    rank: Tuple[int, ...]

    @field_validator('rank')
    def rank_is_bijection(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if sorted(value) != list(range(1, len(value) + 1)):
            raise ValueError('Ordering ranks must use every value in 1..n exactly once.')
        return value

    @classmethod
    def identity(cls, n: int) -> 'Ordering':
        return cls(rank=tuple(range(1, n + 1)))

    @classmethod
    def from_sequence(cls, ids: Sequence[PointId]) -> 'Ordering':
        """Build the ordering whose first element is ids[0], second ids[1], and so on."""
        n = len(ids)
        if sorted(ids) != list(range(n)):
            raise InvalidParams(message='A sequence ordering must list every id 0..n-1 exactly once.')
        rank = [0] * n
        for position, p in enumerate(ids, start=1):
            rank[p] = position
        return cls(rank=tuple(rank))

    @classmethod
    def random(cls, n: int, seed: int) -> 'Ordering':
        rng = np.random.default_rng(seed)
        return cls.from_sequence([int(x) for x in rng.permutation(n)])

    @property
    def n(self) -> int:
        return len(self.rank)

    def key(self, p: PointId) -> int:
        return self.rank[p]

    def sequence(self) -> List[PointId]:
        return sorted(range(self.n), key=self.key)

    def sort(self, ids: Iterable[PointId]) -> List[PointId]:
        return sorted(ids, key=self.key)

    def first(self, ids: Iterable[PointId]) -> Optional[PointId]:
        return min(ids, key=self.key, default=None)

    def check_ids(self, ids: Iterable[PointId]) -> None:
        for p in ids:
            if not isinstance(p, (int, np.integer)) or p < 0 or p >= self.n:
                raise UnknownPointId(message=f'Point id {p!r} is not ranked by this ordering.', extra={'point': p})


def reorder_prioritizing(phi: Ordering, priority: Sequence[PointId]) -> Ordering:
    """Move the `priority` points to the front of phi.

    Priority points come first, among themselves in their old phi order; every other point keeps its old
    relative order behind them.
    """
    phi.check_ids(priority)
    chosen = set(priority)
    if len(chosen) != len(priority):
        raise InvalidParams(message='Priority ids must be distinct.')
    head = phi.sort(chosen)
    tail = [p for p in phi.sequence() if p not in chosen]
    return Ordering.from_sequence(head + tail)
