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

from mpc_kcenter.cli.generate import GeneratorParams, generate, generate_file
from mpc_kcenter.errors import InvalidParams
from mpc_kcenter.metric import ValidationPolicy, build_instance, find_triangle_violation, load_points_csv
from mpc_kcenter.solvers import exact_kcenter


def test_coincident_clusters_have_zero_optimum():
    instance = generate('clustered-euclidean', GeneratorParams(n=6, clusters=2, spread=0.0, separation=10.0), 0)
    assert exact_kcenter(instance, None, 2).radius == 0.0
    assert instance.d(0, 1) == 10.0


def test_same_seed_same_file(tmp_path):
    first, second = tmp_path / 'a.csv', tmp_path / 'b.csv'
    generate_file('uniform-random-euclidean', str(first), seed=3, n=10, dimension=3)
    generate_file('uniform-random-euclidean', str(second), seed=3, n=10, dimension=3)
    assert first.read_text() == second.read_text()


def test_random_metric_matrix_is_a_metric():
    instance = generate('random-metric-matrix', GeneratorParams(n=8), 11)
    assert instance.kind == 'matrix'
    assert find_triangle_violation(instance.dist, ValidationPolicy(symmetry_tol=0.0)) is None
    # exhaustive validation on the way back in
    build_instance(instance.dist, kind='matrix', policy=ValidationPolicy(exhaustive_max_n=64))


def test_matrix_file_round_trip(tmp_path):
    path = str(tmp_path / 'm.csv')
    instance = generate_file('random-metric-matrix', path, seed=2, n=7)
    assert (load_points_csv(path).dist == instance.dist).all()


@pytest.mark.parametrize('params', [{'n': 0}, {'n': 5, 'dimension': 0}, {'n': 5, 'spread': -1}])
def test_invalid_params(tmp_path, params):
    with pytest.raises(InvalidParams):
        generate_file('uniform-random-euclidean', str(tmp_path / 'x.csv'), **params)


def test_more_clusters_than_points():
    with pytest.raises(InvalidParams):
        generate('clustered-euclidean', GeneratorParams(n=2, clusters=3), 0)


def test_unknown_kind():
    with pytest.raises(InvalidParams):
        generate('spiral', GeneratorParams(n=3), 0)
