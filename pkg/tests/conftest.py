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

from mpc_kcenter.cli.generate import GeneratorParams, generate
from mpc_kcenter.metric import build_instance


@pytest.fixture
def line_013():
    return build_instance([[0.0], [1.0], [3.0]])


@pytest.fixture
def line_0_1_10_11():
    return build_instance([[0.0], [1.0], [10.0], [11.0]])


@pytest.fixture
def equilateral():
    return build_instance([[0, 1, 1], [1, 0, 1], [1, 1, 0]], kind='matrix')


def _random_case(seed: int, n_range=(6, 14), k_range=(1, 4), L_range=(1, 4)) -> dict:
    """A seeded (instance, k, L) triple mixing Euclidean, clustered-with-duplicates and matrix metrics."""
    rng = np.random.default_rng(seed)
    n = int(rng.integers(n_range[0], n_range[1] + 1))
    k = int(rng.integers(k_range[0], k_range[1] + 1))
    L = int(rng.integers(L_range[0], L_range[1] + 1))
    flavor = seed % 4
    if flavor == 0:
        instance = generate('uniform-random-euclidean', GeneratorParams(n=n, dimension=2, scale=10.0), seed)
    elif flavor == 1:
        instance = generate('clustered-euclidean', GeneratorParams(n=n, clusters=min(3, n), spread=2.0), seed)
    elif flavor == 2:
        instance = generate('random-metric-matrix', GeneratorParams(n=n, max_weight=20), seed)
    else:
        instance = generate('clustered-euclidean', GeneratorParams(n=n, clusters=min(k + 1, n), spread=0.0), seed)
    return {'instance': instance, 'k': min(k, n), 'L': L, 'seed': seed}


@pytest.fixture
def random_case():
    return _random_case
