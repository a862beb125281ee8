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

from typing import Iterable, List, Literal, Optional, Sequence, Union

import numpy as np
from pydantic import BaseModel, ConfigDict

from mpc_kcenter.errors import (AsymmetricMatrix, DimensionMismatch, InvalidParams, NegativeDistance,
                                TriangleViolation, UnknownPointId)
from mpc_kcenter.log import logger
from mpc_kcenter.settings import SYMMETRY_TOLERANCE, TRIANGLE_EXHAUSTIVE_MAX_N, TRIANGLE_SAMPLE_SEED

PointId = int
MetricKind = Literal['matrix', 'euclidean']


class ValidationPolicy(BaseModel):
    """How strictly `build_instance` checks an explicit distance matrix."""
    symmetry_tol: float = SYMMETRY_TOLERANCE
    exhaustive_max_n: int = TRIANGLE_EXHAUSTIVE_MAX_N
    sample_seed: int = TRIANGLE_SAMPLE_SEED
    check_triangle: bool = True


class MetricInstance(BaseModel):
    """A finite metric space on the dense ids 0..n-1.

    The full distance matrix is materialized once and marked read-only, so instances can be shared
    between simulated machines without copying.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: MetricKind
    n: int
    dist: np.ndarray
    coordinates: Optional[np.ndarray] = None
    labels: Optional[List[str]] = None

    @property
    def dimension(self) -> Optional[int]:
        if self.coordinates is None:
            return None
        return int(self.coordinates.shape[1])

    @property
    def point_ids(self) -> List[PointId]:
        return list(range(self.n))

    def d(self, p: PointId, q: PointId) -> float:
        return float(self.dist[p, q])

    def distances_from(self, p: PointId, targets: Sequence[PointId]) -> np.ndarray:
        return self.dist[p, list(targets)]

    def submatrix(self, rows: Sequence[PointId], cols: Optional[Sequence[PointId]] = None) -> np.ndarray:
        cols = rows if cols is None else cols
        return self.dist[np.ix_(list(rows), list(cols))]

    def pairwise_values(self, subset: Optional[Sequence[PointId]] = None) -> np.ndarray:
        """Sorted distinct distances between distinct points of `subset` (the whole instance by default)."""
        ids = self.point_ids if subset is None else list(subset)
        if len(ids) < 2:
            return np.empty(0, dtype=float)
        sub = self.submatrix(ids)
        upper = sub[np.triu_indices(len(ids), k=1)]
        return np.unique(upper)

    def diameter(self, subset: Optional[Sequence[PointId]] = None) -> float:
        values = self.pairwise_values(subset)
        return float(values[-1]) if values.size else 0.0

    def check_ids(self, ids: Iterable[PointId]) -> None:
        for p in ids:
            if not isinstance(p, (int, np.integer)) or p < 0 or p >= self.n:
                raise UnknownPointId(message=f'Point id {p!r} is not in 0..{self.n - 1}.', extra={'point': p})

    def summary(self) -> dict:
        return {'n': self.n, 'metric': self.kind, 'dimension': self.dimension}


def build_instance(source: Union[np.ndarray, Sequence[Sequence[float]]],
                   kind: MetricKind = 'euclidean',
                   labels: Optional[Sequence[str]] = None,
                   policy: Optional[ValidationPolicy] = None) -> MetricInstance:
    """Validate raw input and build a MetricInstance.

    Args:
        source: Either an n x n distance matrix (`kind='matrix'`) or a list of n coordinate rows of equal
          dimension (`kind='euclidean'`).
        kind: Which of the two forms `source` is.
        labels: Optional external names, one per point.
        policy: Validation knobs for the matrix form.

    Returns:
        The validated instance. Matrix input is symmetrized by averaging before validation.
    """
    policy = policy or ValidationPolicy()
    if kind == 'euclidean':
        coords = _as_coordinates(source)
        from scipy.spatial.distance import pdist, squareform
        if coords.shape[0] == 1:
            dist = np.zeros((1, 1), dtype=float)
        else:
            dist = squareform(pdist(coords, metric='euclidean'))
        coords.setflags(write=False)
        instance_kwargs = {'coordinates': coords}
    elif kind == 'matrix':
        dist = _validated_matrix(source, policy)
        instance_kwargs = {}
    else:
        raise InvalidParams(message=f'Unknown metric kind `{kind}`.')

    n = dist.shape[0]
    if labels is not None:
        labels = [str(x) for x in labels]
        if len(labels) != n:
            raise DimensionMismatch(message=f'Got {len(labels)} labels for {n} points.')
    dist.setflags(write=False)
    return MetricInstance(kind=kind, n=n, dist=dist, labels=labels, **instance_kwargs)


def _as_coordinates(source) -> np.ndarray:
    rows = [list(row) for row in source]
    if not rows:
        raise InvalidParams(message='An instance needs at least one point.')
    dims = {len(row) for row in rows}
    if len(dims) != 1:
        raise DimensionMismatch(message=f'Coordinate rows have mixed dimensions {sorted(dims)}.')
    if dims == {0}:
        raise DimensionMismatch(message='Coordinate rows must have dimension >= 1.')
    coords = np.asarray(rows, dtype=float)
    if not np.all(np.isfinite(coords)):
        raise InvalidParams(message='Coordinates must be finite numbers.')
    return coords


def _validated_matrix(source, policy: ValidationPolicy) -> np.ndarray:
    try:
        mat = np.asarray(source, dtype=float)
    except ValueError as ex:
        raise DimensionMismatch(ex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise DimensionMismatch(message=f'A distance matrix must be square, got shape {mat.shape}.')
    if mat.shape[0] == 0:
        raise InvalidParams(message='An instance needs at least one point.')
    if not np.all(np.isfinite(mat)):
        raise InvalidParams(message='Distances must be finite numbers.')

    asym = np.abs(mat - mat.T)
    if asym.max() > policy.symmetry_tol:
        p, q = np.unravel_index(int(np.argmax(asym)), asym.shape)
        raise AsymmetricMatrix(message=f'd({p},{q})={mat[p, q]} but d({q},{p})={mat[q, p]}.',
                               extra={'pair': (int(p), int(q))})
    mat = (mat + mat.T) / 2.0

    if mat.min() < 0:
        p, q = np.unravel_index(int(np.argmin(mat)), mat.shape)
        raise NegativeDistance(message=f'd({p},{q})={mat[p, q]} is negative.', extra={'pair': (int(p), int(q))})
    diag = np.abs(np.diag(mat))
    if diag.max() > policy.symmetry_tol:
        p = int(np.argmax(diag))
        raise InvalidParams(message=f'd({p},{p})={mat[p, p]} must be 0.')
    np.fill_diagonal(mat, 0.0)

    if policy.check_triangle:
        triple = find_triangle_violation(mat, policy)
        if triple is not None:
            p, q, r = triple
            raise TriangleViolation(
                message=f'd({p},{r})={mat[p, r]} > d({p},{q}) + d({q},{r}) = {mat[p, q] + mat[q, r]}.',
                extra={'triple': triple})
    return mat


def find_triangle_violation(mat: np.ndarray, policy: Optional[ValidationPolicy] = None) -> Optional[tuple]:
    """Return a triple (p, q, r) with d(p,r) > d(p,q) + d(q,r), or None.

    Exhaustive for n <= policy.exhaustive_max_n, otherwise checks 3n^2 seeded random triples.
    """
    policy = policy or ValidationPolicy()
    n = mat.shape[0]
    tol = policy.symmetry_tol
    if n <= policy.exhaustive_max_n:
        for q in range(n):
            via_q = mat[:, q][:, None] + mat[q, :][None, :]
            bad = np.argwhere(mat > via_q + tol)
            if bad.size:
                p, r = bad[0]
                return int(p), int(q), int(r)
        return None

    logger.debug(f'Sampling {3 * n * n} triples for the triangle inequality on n={n}.')
    rng = np.random.default_rng(policy.sample_seed)
    triples = rng.integers(0, n, size=(3 * n * n, 3))
    p, q, r = triples[:, 0], triples[:, 1], triples[:, 2]
    bad = np.flatnonzero(mat[p, r] > mat[p, q] + mat[q, r] + tol)
    if bad.size:
        i = bad[0]
        return int(p[i]), int(q[i]), int(r[i])
    return None
