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

from typing import Dict, Iterable, List, Literal, Optional, Union

import numpy as np
from pydantic import BaseModel

from mpc_kcenter.errors import InvalidParams, KTooLarge
from mpc_kcenter.log import logger
from mpc_kcenter.metric import MetricInstance, Ordering, PointId
from mpc_kcenter.solvers.base import K_SCHEMA, BaseSolver, Solution, register_solver
from mpc_kcenter.solvers.greedy import greedy_cover

SelectionRule = Literal['fewest', 'literal-max']


class CoverRecord(BaseModel):
    """One (rho, C) pair: C center-covers the input set at rho, in selection order."""
    rho: float
    centers: List[PointId]

    @property
    def kappa(self) -> int:
        return len(self.centers)


class WRecord(BaseModel):
    """Every cover recorded by one permutation-stable pruning sweep, keyed by its size."""
    source_set: Optional[Union[int, str]] = None
    entries: Dict[int, CoverRecord] = {}

    def kappas(self) -> List[int]:
        return sorted(self.entries)

    def best(self) -> CoverRecord:
        """The recorded cover with the smallest radius."""
        if not self.entries:
            raise InvalidParams(message='Empty WRecord has no best entry.')
        return min(self.entries.values(), key=lambda e: (e.rho, -e.kappa))

    def qualifying(self, rho: float, rule: SelectionRule = 'fewest') -> Optional[CoverRecord]:
        """The entry a machine contributes at threshold rho, or None if no entry has radius <= rho.

        `fewest` picks the fewest-centers entry valid at rho; `literal-max` picks the most-centers one.
        """
        valid = [e for e in self.entries.values() if e.rho <= rho]
        if not valid:
            return None
        if rule == 'fewest':
            return min(valid, key=lambda e: e.kappa)
        return max(valid, key=lambda e: e.kappa)


def candidate_radii(instance: MetricInstance, subset: Iterable[PointId]) -> np.ndarray:
    """0 followed by the sorted distinct pairwise distances of the subset."""
    values = instance.pairwise_values(list(subset))
    return np.unique(np.concatenate([[0.0], values]))


def permutation_stable_pruning(instance: MetricInstance,
                               subset: Iterable[PointId],
                               phi: Ordering,
                               k: int,
                               literal: bool = False,
                               source_set: Optional[Union[int, str]] = None) -> WRecord:
    """Sweep the candidate radii upward and record a greedy cover per achieved size.

    A size is recorded the first time it appears, provided it is at most k and below every size recorded
    so far; the sweep stops once a single center covers the set. In `literal` mode the greedy is capped at
    k centers and a cover is recorded only when its size equals a counter that starts at k and decreases
    after each recording.
    """
    subset = sorted(set(subset))
    instance.check_ids(subset)
    if k < 1:
        raise InvalidParams(message=f'k must be positive, got {k}.')
    if k > len(subset):
        raise KTooLarge(message=f'k={k} exceeds the {len(subset)} points of the set.', extra={'k': k})

    record = WRecord(source_set=source_set)
    kappa = k
    smallest = k + 1
    for rho in candidate_radii(instance, subset):
        rho = float(rho)
        if literal:
            centers = greedy_cover(instance, subset, phi, rho, cap=k)
            if len(centers) == kappa:
                record.entries[kappa] = CoverRecord(rho=rho, centers=centers)
                kappa -= 1
                if kappa == 0:
                    break
            continue

        centers = greedy_cover(instance, subset, phi, rho)
        size = len(centers)
        if size < smallest:
            record.entries[size] = CoverRecord(rho=rho, centers=centers)
            smallest = size
        if size == 1:
            break
    logger.debug(f'Pruning on set {source_set} (|S|={len(subset)}, k={k}) recorded sizes {record.kappas()}.')
    return record


def classic_parametric_pruning(instance: MetricInstance,
                               k: int,
                               phi: Optional[Ordering] = None,
                               subset: Optional[Iterable[PointId]] = None) -> Solution:
    """Smallest radius at which the phi-ordered greedy cover uses at most k centers."""
    phi = phi or Ordering.identity(instance.n)
    subset = instance.point_ids if subset is None else list(subset)
    entry = permutation_stable_pruning(instance, subset, phi, k).best()
    return Solution(algorithm='pruning', k=k, centers=sorted(entry.centers), radius=entry.rho)


@register_solver('pruning')
class ParametricPruning(BaseSolver):
    description = 'Parametric pruning over all pairwise distances with a phi-ordered greedy cover.'

    def call(self, params, instance: MetricInstance, phi: Optional[Ordering] = None, **kwargs) -> Solution:
        params = self._verify_json_format_args(params)
        return classic_parametric_pruning(instance, params['k'], phi=phi)

