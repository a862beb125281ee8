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

import pytest

from mpc_kcenter.coreset import (CoresetPart, assemble, composition_ratio, constrained_radius, gonzalez_coreset,
                                 pruning_coreset)
from mpc_kcenter.dkcenter import round1_local_coreset
from mpc_kcenter.errors import UnknownPointId
from mpc_kcenter.metric import Ordering, build_instance
from mpc_kcenter.mpcsim import seeded_random
from mpc_kcenter.settings import RATIO_SLACK
from mpc_kcenter.solvers import exact_kcenter


def test_assemble_dedups_and_sorts():
    phi = Ordering.identity(6)
    coreset = assemble([CoresetPart(source_set=1, points=[0, 3]), CoresetPart(source_set=2, points=[3, 5])], phi)
    assert coreset.merged == [0, 3, 5]


def test_single_part_is_phi_sorted():
    phi = Ordering.from_sequence([4, 2, 0, 1, 3])
    coreset = assemble([CoresetPart(source_set=1, points=[0, 2, 4])], phi)
    assert coreset.merged == [4, 2, 0]


def test_arrival_order_does_not_matter():
    phi = Ordering.random(8, seed=1)
    parts = [
        CoresetPart(source_set=1, points=[7, 1]),
        CoresetPart(source_set=2, points=[3, 1, 5]),
        CoresetPart(source_set=3, points=[0])
    ]
    shuffled = [parts[2], parts[0].model_copy(update={'points': [1, 7]}), parts[1]]
    assert assemble(parts, phi) == assemble(shuffled, phi)


def test_unknown_point():
    with pytest.raises(UnknownPointId):
        assemble([CoresetPart(source_set=1, points=[9])], Ordering.identity(3))


def test_to_json_dict():
    phi = Ordering.from_sequence([2, 0, 1])
    coreset = assemble([CoresetPart(source_set=1, points=[0, 2])], phi)
    assert coreset.to_json_dict(phi) == {
        'size': 2,
        'points': [{
            'id': 2,
            'rank': 1
        }, {
            'id': 0,
            'rank': 2
        }],
        'parts': {
            '1': [0, 2]
        },
    }


def test_whole_set_has_ratio_one(line_0_1_10_11):
    coreset = assemble([CoresetPart(source_set=1, points=line_0_1_10_11.point_ids)], Ordering.identity(4))
    r_star = exact_kcenter(line_0_1_10_11, None, 2).radius
    assert composition_ratio(line_0_1_10_11, coreset, 2, r_star) == 1.0


def test_one_point_per_duplicate_cluster():
    instance = build_instance([[0.0], [0.0], [0.0], [50.0], [50.0]])
    coreset = assemble([CoresetPart(source_set=1, points=[1]), CoresetPart(source_set=2, points=[4])],
                       Ordering.identity(5))
    assert composition_ratio(instance, coreset, 2, 0.0) == 1.0
    assert constrained_radius(instance, coreset, 2) == 0.0


def test_positive_radius_over_zero_optimum(line_0_1_10_11):
    coreset = assemble([CoresetPart(source_set=1, points=[0, 3])], Ordering.identity(4))
    assert composition_ratio(line_0_1_10_11, coreset, 1, 0.0) == float('inf')


def test_pruning_coreset_composition(random_case):
    for seed in range(60):
        case = random_case(seed)
        instance, k, L = case['instance'], case['k'], case['L']
        phi = Ordering.random(instance.n, seed)
        partition = seeded_random(instance.n, L, seed)
        parts = []
        for i in range(1, L + 1):
            points = [p for p, machine in partition.items() if machine == i]
            if points:
                parts.append(pruning_coreset(instance, points, phi, k, source_set=i))
        coreset = assemble(parts, phi)
        r_star = exact_kcenter(instance, None, k).radius
        # centers restricted to the coreset can never beat the unrestricted optimum
        assert constrained_radius(instance, coreset, k) >= r_star - RATIO_SLACK
        for part in parts:
            assert len(part.points) <= k
            assert part.payload.best().centers == part.points


def test_gonzalez_coreset_size(line_0_1_10_11):
    part = gonzalez_coreset(line_0_1_10_11, [0, 1, 2], Ordering.identity(4), 2, source_set='a')
    assert part.points == [0, 2]
    assert part.payload is None
    assert gonzalez_coreset(line_0_1_10_11, [0, 1, 2], Ordering.identity(4), 5, source_set='a').points == [0, 1, 2]


def _parts(partition, L, build):
    parts = []
    for i in range(1, L + 1):
        points = [p for p, machine in partition.items() if machine == i]
        if points:
            parts.append(build(points, i))
    return parts


def test_composition_ratio_against_oracle(random_case):
    for seed in range(200):
        case = random_case(seed)
        instance, k, L = case['instance'], case['k'], case['L']
        phi = Ordering.random(instance.n, seed)
        partition = seeded_random(instance.n, L, seed)
        r_star = exact_kcenter(instance, None, k).radius

        def _local(points, i):
            centers, _ = round1_local_coreset(instance, points, phi, k, source_set=i)
            return CoresetPart(source_set=i, points=centers)

        local = assemble(_parts(partition, L, _local), phi)
        assert composition_ratio(instance, local, k, r_star) <= 2 + 1e-9, f'seed {seed}'

        def _farthest_first(points, i):
            return gonzalez_coreset(instance, points, phi, k, source_set=i)

        farthest = assemble(_parts(partition, L, _farthest_first), phi)
        assert composition_ratio(instance, farthest, k, r_star) <= 4 + 1e-9, f'seed {seed}'
