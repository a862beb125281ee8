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

from typing import List, Optional, Sequence, Union

from pydantic import BaseModel

from mpc_kcenter.log import logger
from mpc_kcenter.metric import MetricInstance, Ordering, PointId
from mpc_kcenter.solvers import WRecord, exact_kcenter, gonzalez, permutation_stable_pruning


class CoresetPart(BaseModel):
    """g(S_i): the points one machine contributes, optionally with its pruning record."""
    source_set: Union[int, str]
    points: List[PointId]
    payload: Optional[WRecord] = None


class OrderedCoreset(BaseModel):
    """The deduplicated union of the parts, sorted by increasing phi-rank."""
    parts: List[CoresetPart]
    merged: List[PointId]

    def to_json_dict(self, phi: Ordering) -> dict:
        return {
            'size': len(self.merged),
            'points': [{'id': p, 'rank': phi.key(p)} for p in self.merged],
            'parts': {str(part.source_set): sorted(part.points) for part in self.parts},
        }


def assemble(parts: Sequence[CoresetPart], phi: Ordering) -> OrderedCoreset:
    """Merge per-machine parts; the result only depends on the set of parts and phi."""
    union = set()
    for part in parts:
        phi.check_ids(part.points)
        union.update(part.points)
    # Parts are kept in source-set order so arrival order never shows in the output.
    ordered_parts = sorted(parts, key=lambda part: str(part.source_set))
    ordered_parts = [part.model_copy(update={'points': phi.sort(set(part.points))}) for part in ordered_parts]
    return OrderedCoreset(parts=ordered_parts, merged=phi.sort(union))


def composition_ratio(instance: MetricInstance, coreset: OrderedCoreset, k: int, oracle_radius: float) -> float:
    """f(union of coresets) / f(S) with f the exact k-center cost.

    Two zero costs give 1.0; a positive cost over a zero optimum gives inf.
    """
    k = min(k, len(coreset.merged))
    radius = exact_kcenter(instance, coreset.merged, k).radius
    return _ratio(radius, oracle_radius)


def constrained_radius(instance: MetricInstance, coreset: OrderedCoreset, k: int) -> float:
    """Best covering radius over ALL points using at most k centers drawn from the coreset."""
    k = min(k, len(coreset.merged))
    return exact_kcenter(instance, coreset.merged, k, targets=instance.point_ids).radius


def pruning_coreset(instance: MetricInstance, subset: Sequence[PointId], phi: Ordering, k: int,
                    source_set: Union[int, str]) -> CoresetPart:
    """The smallest-radius pruning cover of one set with at most k centers."""
    record = permutation_stable_pruning(instance, subset, phi, min(k, len(set(subset))), source_set=source_set)
    return CoresetPart(source_set=source_set, points=record.best().centers, payload=record)


def gonzalez_coreset(instance: MetricInstance, subset: Sequence[PointId], phi: Ordering, k: int,
                     source_set: Union[int, str]) -> CoresetPart:
    solution = gonzalez(instance, subset, min(k, len(set(subset))), phi=phi)
    return CoresetPart(source_set=source_set, points=solution.centers)


def _ratio(radius: float, oracle_radius: float) -> float:
    if oracle_radius > 0:
        return radius / oracle_radius
    if radius == 0:
        return 1.0
    logger.warning(f'Radius {radius} over a zero optimum.')
    return float('inf')
