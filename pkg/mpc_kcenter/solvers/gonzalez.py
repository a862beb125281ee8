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

from typing import Iterable, Optional

import numpy as np

from mpc_kcenter.errors import InvalidParams, KTooLarge
from mpc_kcenter.metric import MetricInstance, Ordering, PointId
from mpc_kcenter.solvers.base import K_SCHEMA, BaseSolver, Solution, register_solver


def gonzalez(instance: MetricInstance,
             subset: Optional[Iterable[PointId]],
             k: int,
             phi: Optional[Ordering] = None,
             first_point: Optional[PointId] = None) -> Solution:
    """Farthest-first traversal.

    Starts from `first_point`, or the phi-first point of the subset, and repeatedly adds the point farthest
    from the chosen centers, breaking ties by lowest phi-rank. Stops early once every point is a center or
    coincides with one.
    """
    phi = phi or Ordering.identity(instance.n)
    ids = instance.point_ids if subset is None else list(set(subset))
    instance.check_ids(ids)
    if k < 1:
        raise InvalidParams(message=f'k must be positive, got {k}.')
    if k > len(ids):
        raise KTooLarge(message=f'k={k} exceeds the {len(ids)} points of the set.', extra={'k': k})

    # phi-sorted, so argmax returns the lowest-rank point among ties
    order = phi.sort(ids)
    if first_point is None:
        first_point = order[0]
    elif first_point not in ids:
        raise InvalidParams(message=f'First point {first_point} is not in the subset.')
    sub = instance.submatrix(order)

    centers = [first_point]
    nearest = sub[order.index(first_point)].copy()
    while len(centers) < k:
        i = int(np.argmax(nearest))
        if nearest[i] == 0:
            break
        centers.append(order[i])
        np.minimum(nearest, sub[i], out=nearest)
    return Solution(algorithm='gonzalez', k=k, centers=sorted(centers), radius=float(nearest.max()))


@register_solver('gonzalez')
class Gonzalez(BaseSolver):
    description = 'Greedy farthest-point traversal; a 2-approximation for metric k-center.'
    parameters = {
        'type': 'object',
        'properties': {
            'k': K_SCHEMA,
            'first_point': {
                'type': 'integer',
                'minimum': 0,
                'description': 'Explicit first center; defaults to the lowest phi-rank point.',
            },
        },
        'required': ['k'],
    }

    def call(self, params, instance: MetricInstance, phi: Optional[Ordering] = None, **kwargs) -> Solution:
        params = self._verify_json_format_args(params)
        return gonzalez(instance, None, params['k'], phi=phi, first_point=params.get('first_point'))
