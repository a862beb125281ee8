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

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel

from mpc_kcenter.settings import RATIO_SLACK
from mpc_kcenter.utils.utils import hash_sha256, json_dumps_compact

# Hard approximation bounds checked by `compare`
RATIO_BOUNDS = {'exact': 1.0, 'gonzalez': 2.0, 'pruning': 2.0, 'alg2': 2.0, 'baseline4': 4.0}


def ratio_vs_oracle(radius: Optional[float], oracle_radius: Optional[float]) -> Tuple[Optional[float], bool]:
    """(ratio, degenerate): the ratio is undefined and the run degenerate when the optimum is 0."""
    if radius is None or oracle_radius is None:
        return None, False
    if oracle_radius > 0:
        return radius / oracle_radius, False
    return None, True


def within_bound(radius: Optional[float], oracle_radius: Optional[float], bound: float) -> bool:
    if radius is None or oracle_radius is None:
        return False
    return radius <= bound * oracle_radius + RATIO_SLACK


class AlgorithmReport(BaseModel):
    algorithm: str
    feasible: bool
    radius: Optional[float] = None
    centers: List[int] = []
    covering_radius: Optional[float] = None
    ratio: Optional[float] = None
    degenerate: bool = False
    rounds: int = 0
    points_communicated: int = 0
    entries_communicated: int = 0
    recovered: Optional[bool] = None
    coreset_size: Optional[int] = None
    warnings: List[str] = []


class ExperimentReport(BaseModel):
    """One instance, one set of flags, one row per algorithm.

    Wall times live in `timings` only; everything else is reproducible from the flags and seeds.
    """
    instance: dict
    k: int
    L: int
    memory: Optional[int] = None
    partition: str
    seed: int
    phi_seed: Optional[int] = None
    flags: Dict[str, bool] = {}
    oracle_radius: Optional[float] = None
    results: List[AlgorithmReport] = []
    timings: Dict[str, float] = {}

    @property
    def feasible(self) -> bool:
        return all(r.feasible for r in self.results)

    def deterministic_dict(self) -> dict:
        return self.model_dump(mode='json', exclude={'timings'})

    def determinism_hash(self) -> str:
        return hash_sha256(json_dumps_compact(self.deterministic_dict()))

    def to_json_dict(self) -> dict:
        return {**self.deterministic_dict(), 'determinism_hash': self.determinism_hash(), 'timings': self.timings}
