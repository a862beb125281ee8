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

from typing import Iterable, List, Optional

import numpy as np

from mpc_kcenter.errors import InvalidParams
from mpc_kcenter.metric import MetricInstance, Ordering, PointId


def greedy_cover(instance: MetricInstance,
                 subset: Iterable[PointId],
                 phi: Ordering,
                 rho: float,
                 cap: Optional[int] = None) -> List[PointId]:
    """Scan `subset` in increasing phi-rank and keep every point not within rho of a kept point.

    The result is the phi-first maximal independent set of H(rho, subset), hence a dominating set that
    center-covers the subset at rho. With `cap`, at most `cap` points are kept (literal compatibility mode),
    in which case coverage is no longer guaranteed.
    """
    order = phi.sort(set(subset))
    if not order:
        raise InvalidParams(message='greedy_cover needs a non-empty subset.')
    if rho < 0:
        raise InvalidParams(message=f'Radius must be non-negative, got {rho}.')
    sub = instance.submatrix(order)
    covered = np.zeros(len(order), dtype=bool)
    chosen = []
    for i, p in enumerate(order):
        if covered[i]:
            continue
        if cap is not None and len(chosen) >= cap:
            continue
        chosen.append(p)
        covered |= sub[i] <= rho
    return chosen
