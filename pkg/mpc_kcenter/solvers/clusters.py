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

from typing import Dict, Iterable, List, Optional

import numpy as np

from mpc_kcenter.errors import InvalidParams
from mpc_kcenter.metric import MetricInstance, Ordering, PointId, center_covers


def assign_clusters(instance: MetricInstance,
                    centers: Iterable[PointId],
                    phi: Optional[Ordering] = None,
                    targets: Optional[Iterable[PointId]] = None) -> Dict[PointId, List[PointId]]:
    """Map each center to the targets whose nearest center it is (ties go to the lower phi-rank center)."""
    phi = phi or Ordering.identity(instance.n)
    centers = phi.sort(set(centers))
    targets = instance.point_ids if targets is None else sorted(set(targets))
    if not centers:
        raise InvalidParams(message='Cannot cluster around an empty center set.')
    nearest = np.argmin(instance.submatrix(targets, centers), axis=1)
    clusters = {c: [] for c in centers}
    for p, j in zip(targets, nearest):
        clusters[centers[j]].append(p)
    return clusters


def representatives_cover(instance: MetricInstance,
                          centers: Iterable[PointId],
                          radius: float,
                          representatives: Iterable[PointId],
                          phi: Optional[Ordering] = None) -> bool:
    """Check that one point per non-empty cluster of a radius-r solution center-covers everything at 2r."""
    clusters = assign_clusters(instance, centers, phi)
    representatives = set(representatives)
    for center, members in clusters.items():
        if not members:
            continue
        if len(representatives.intersection(members)) != 1:
            raise InvalidParams(message=f'Cluster of center {center} needs exactly one representative.')
    return center_covers(representatives, instance, instance.point_ids, 2 * radius)
