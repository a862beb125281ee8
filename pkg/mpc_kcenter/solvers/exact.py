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

import itertools
from math import comb
from typing import Iterable, Optional

import numpy as np

from mpc_kcenter.errors import InstanceTooLarge, InvalidParams, KTooLarge
from mpc_kcenter.metric import MetricInstance, Ordering, PointId
from mpc_kcenter.settings import ORACLE_MAX_N, ORACLE_MAX_SUBSETS
from mpc_kcenter.solvers.base import BaseSolver, Solution, register_solver

BATCH_SIZE = 20000


def exact_kcenter(instance: MetricInstance,
                  subset: Optional[Iterable[PointId]],
                  k: int,
                  targets: Optional[Iterable[PointId]] = None,
                  max_n: int = ORACLE_MAX_N,
                  max_subsets: int = ORACLE_MAX_SUBSETS) -> Solution:
    """Brute force over every k-subset of centers; returns r* and the first optimal set in id order.

    Centers are drawn from `subset`; the radius is measured over `targets` (the subset itself by default).
    """
    ids = instance.point_ids if subset is None else sorted(set(subset))
    instance.check_ids(ids)
    if k < 1:
        raise InvalidParams(message=f'k must be positive, got {k}.')
    if k > len(ids):
        raise KTooLarge(message=f'k={k} exceeds the {len(ids)} points of the set.', extra={'k': k})
    n_subsets = comb(len(ids), k)
    if len(ids) > max_n or n_subsets > max_subsets:
        raise InstanceTooLarge(message=f'Exact oracle refuses n={len(ids)}, k={k} ({n_subsets} center sets).',
                               extra={'n': len(ids), 'k': k, 'subsets': n_subsets})

    targets = ids if targets is None else sorted(set(targets))
    instance.check_ids(targets)
    sub = instance.submatrix(targets, ids)
    best_radius, best_combo = float('inf'), None
    combos = itertools.combinations(range(len(ids)), k)
    while True:
        batch = np.array(list(itertools.islice(combos, BATCH_SIZE)), dtype=int)
        if batch.size == 0:
            break
        # (points, combos, k) -> nearest center per point -> worst point per combo
        radii = sub[:, batch].min(axis=2).max(axis=0)
        i = int(np.argmin(radii))
        if radii[i] < best_radius:
            best_radius, best_combo = float(radii[i]), batch[i]
    centers = [ids[j] for j in best_combo]
    return Solution(algorithm='exact', k=k, centers=centers, radius=best_radius)


@register_solver('exact')
class ExactKCenter(BaseSolver):
    description = 'Exact k-center by enumerating every k-subset; desk-scale oracle.'

    def call(self, params, instance: MetricInstance, phi: Optional[Ordering] = None, **kwargs) -> Solution:
        params = self._verify_json_format_args(params)
        return exact_kcenter(instance, None, params['k'])
