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

import numpy as np
import pytest

from mpc_kcenter.errors import InvalidParams
from mpc_kcenter.metric import Ordering, center_covers, disk_graph
from mpc_kcenter.solvers import greedy_cover


def reference_first_mis(instance, subset, phi, rho):
    """Scan phi and keep a vertex iff it has no edge to a kept vertex in the explicit disk graph."""
    graph = disk_graph(instance, rho, subset=subset)
    kept = []
    for p in phi.sort(subset):
        if not (graph.neighbors(p) & set(kept)):
            kept.append(p)
    return kept


def test_line_rho1(line_013):
    assert greedy_cover(line_013, [0, 1, 2], Ordering.identity(3), 1) == [0, 2]


def test_rho0_distinct_points(line_0_1_10_11):
    phi = Ordering.from_sequence([3, 1, 0, 2])
    assert greedy_cover(line_0_1_10_11, [0, 1, 2, 3], phi, 0) == [3, 1, 0, 2]


def test_rho_diameter(line_0_1_10_11):
    phi = Ordering.from_sequence([2, 0, 1, 3])
    assert greedy_cover(line_0_1_10_11, [0, 1, 2, 3], phi, 11) == [2]


def test_empty_subset(line_013):
    with pytest.raises(InvalidParams):
        greedy_cover(line_013, [], Ordering.identity(3), 1)


def test_negative_rho(line_013):
    with pytest.raises(InvalidParams):
        greedy_cover(line_013, [0], Ordering.identity(3), -1)


def test_cap_limits_size(line_0_1_10_11):
    assert greedy_cover(line_0_1_10_11, [0, 1, 2, 3], Ordering.identity(4), 0, cap=2) == [0, 1]


def test_greedy_equals_reference_mis(random_case):
    for seed in range(100):
        case = random_case(seed)
        instance = case['instance']
        rng = np.random.default_rng(seed)
        size = int(rng.integers(1, instance.n + 1))
        subset = sorted(int(p) for p in rng.choice(instance.n, size=size, replace=False))
        phi = Ordering.random(instance.n, seed)
        rho = float(rng.choice(np.concatenate([[0.0], instance.pairwise_values(subset)])))
        chosen = greedy_cover(instance, subset, phi, rho)
        assert set(chosen) == set(reference_first_mis(instance, subset, phi, rho))
        graph = disk_graph(instance, rho, subset=subset)
        assert graph.is_independent(chosen)
        assert graph.is_dominating(chosen)
        assert center_covers(chosen, instance, subset, rho)
