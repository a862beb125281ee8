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

from typing import Literal, Optional

import numpy as np
from pydantic import BaseModel, Field, ValidationError

from mpc_kcenter.errors import InvalidParams
from mpc_kcenter.log import logger
from mpc_kcenter.metric import MetricInstance, build_instance, save_points_csv

GeneratorKind = Literal['uniform-random-euclidean', 'clustered-euclidean', 'random-metric-matrix']
GENERATOR_KINDS = ['uniform-random-euclidean', 'clustered-euclidean', 'random-metric-matrix']


class GeneratorParams(BaseModel):
    n: int = Field(ge=1)
    dimension: int = Field(default=2, ge=1)
    clusters: int = Field(default=2, ge=1)
    spread: float = Field(default=1.0, ge=0)  # side of the box each cluster's offsets are drawn from
    separation: float = Field(default=10.0, gt=0)  # distance between consecutive cluster centers
    scale: float = Field(default=1.0, gt=0)  # side of the box for uniform points
    max_weight: int = Field(default=100, ge=1)  # edge weights of the random matrix are drawn from 1..max_weight


def generate(kind: GeneratorKind, params: GeneratorParams, seed: int = 0) -> MetricInstance:
    """Build a synthetic instance; the same (kind, params, seed) always gives the same instance."""
    rng = np.random.default_rng(seed)
    if kind == 'uniform-random-euclidean':
        coords = rng.uniform(0, params.scale, size=(params.n, params.dimension))
        return build_instance(coords, kind='euclidean')

    if kind == 'clustered-euclidean':
        if params.clusters > params.n:
            raise InvalidParams(message=f'{params.clusters} clusters need at least as many points, got n={params.n}.')
        centers = np.zeros((params.clusters, params.dimension))
        centers[:, 0] = np.arange(params.clusters) * params.separation
        membership = np.arange(params.n) % params.clusters
        offsets = rng.uniform(-params.spread / 2, params.spread / 2, size=(params.n, params.dimension))
        return build_instance(centers[membership] + offsets, kind='euclidean')

    if kind == 'random-metric-matrix':
        from scipy.sparse.csgraph import floyd_warshall

        # Integer weights keep the shortest-path closure exact, so the triangle inequality holds bit for bit.
        weights = rng.integers(1, params.max_weight + 1, size=(params.n, params.n)).astype(float)
        weights = np.triu(weights, 1)
        weights = weights + weights.T
        return build_instance(floyd_warshall(weights, directed=False), kind='matrix')

    raise InvalidParams(message=f'Unknown generator kind `{kind}`, expected one of {GENERATOR_KINDS}.')


def generate_file(kind: GeneratorKind, path: str, seed: int = 0, **params) -> MetricInstance:
    try:
        parsed = GeneratorParams(**params)
    except ValidationError as ex:
        raise InvalidParams(ex)
    instance = generate(kind, parsed, seed)
    save_points_csv(instance, path)
    logger.info(f'Wrote {kind} instance with n={instance.n} (seed {seed}) to {path}.')
    return instance
