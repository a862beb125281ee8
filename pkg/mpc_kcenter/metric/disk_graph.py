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

from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Set, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from mpc_kcenter.errors import InvalidParams
from mpc_kcenter.metric.instance import MetricInstance, PointId


class DiskGraph(BaseModel):
    """H(r, S): an edge between distinct points at distance <= radius."""
    model_config = ConfigDict(frozen=True)

    radius: float
    vertices: Tuple[PointId, ...]
    adjacency: Tuple[Tuple[PointId, FrozenSet[PointId]], ...]

    @cached_property
    def adjacency_map(self) -> Dict[PointId, FrozenSet[PointId]]:
        return dict(self.adjacency)

    def neighbors(self, p: PointId) -> FrozenSet[PointId]:
        return self.adjacency_map[p]

    def edges(self) -> Set[Tuple[PointId, PointId]]:
        return {(p, q) for p, adj in self.adjacency for q in adj if p < q}

    def is_independent(self, ids: Iterable[PointId]) -> bool:
        ids = list(ids)
        adj = self.adjacency_map
        return all(q not in adj[p] for i, p in enumerate(ids) for q in ids[i + 1:])

    def is_dominating(self, ids: Iterable[PointId]) -> bool:
        chosen = set(ids)
        adj = self.adjacency_map
        return all(p in chosen or adj[p] & chosen for p in self.vertices)


def disk_graph(instance: MetricInstance, r: float, subset: Optional[Sequence[PointId]] = None) -> DiskGraph:
    """Build the disk graph of closed balls of radius r, optionally restricted to `subset`."""
    if r < 0:
        raise InvalidParams(message=f'Disk graph radius must be non-negative, got {r}.')
    ids = instance.point_ids if subset is None else sorted(set(subset))
    instance.check_ids(ids)
    sub = instance.submatrix(ids)
    close = sub <= r
    np.fill_diagonal(close, False)
    adjacency = tuple((p, frozenset(ids[j] for j in np.flatnonzero(close[i]))) for i, p in enumerate(ids))
    return DiskGraph(radius=float(r), vertices=tuple(ids), adjacency=adjacency)


def center_covers(centers: Iterable[PointId], instance: MetricInstance, targets: Iterable[PointId],
                  r: float) -> bool:
    """True iff every target is within distance r of some center."""
    centers, targets = list(centers), list(targets)
    if not targets:
        return True
    if not centers:
        return False
    instance.check_ids(centers)
    instance.check_ids(targets)
    nearest = instance.submatrix(targets, centers).min(axis=1)
    return bool(np.all(nearest <= r))


def covering_radius(centers: Iterable[PointId], instance: MetricInstance, targets: Iterable[PointId]) -> float:
    """The k-center objective: max over targets of the distance to the nearest center."""
    centers, targets = list(centers), list(targets)
    if not targets:
        return 0.0
    if not centers:
        return float('inf')
    return float(instance.submatrix(targets, centers).min(axis=1).max())
