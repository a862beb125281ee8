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

from typing import Dict, List, Optional

from pydantic import BaseModel

from mpc_kcenter.coreset import OrderedCoreset
from mpc_kcenter.metric import Ordering, PointId
from mpc_kcenter.mpcsim import RoundTrace, total_entries, total_points
from mpc_kcenter.solvers import SelectionRule, Solution


class SelectionResult(BaseModel):
    """Outcome of the radius sweep on machine 1.

    When infeasible, `rho`, `choices` and `centers` describe the attempt with the smallest union, or are
    empty if no radius had a qualifying entry on every machine.
    """
    rule: SelectionRule
    rho: Optional[float] = None
    choices: Dict[int, int] = {}
    centers: List[PointId] = []
    feasible: bool = False
    attempts: int = 0


class DistributedRun(BaseModel):
    algorithm: str
    k: int
    L: int
    memory: int
    solution: Optional[Solution] = None
    selection: Optional[SelectionResult] = None
    coreset: OrderedCoreset
    traces: List[RoundTrace]
    covering_radius: Optional[float] = None
    covers: Optional[bool] = None
    recovered: Optional[bool] = None
    warnings: List[str] = []
    flags: Dict[str, bool] = {}

    @property
    def feasible(self) -> bool:
        return self.solution is not None

    @property
    def rounds(self) -> int:
        return len(self.traces)

    @property
    def points_communicated(self) -> int:
        return total_points(self.traces)

    @property
    def entries_communicated(self) -> int:
        return total_entries(self.traces)

    def to_json_dict(self, phi: Ordering) -> dict:
        return {
            'algorithm': self.algorithm,
            'k': self.k,
            'L': self.L,
            'memory': self.memory,
            'feasible': self.feasible,
            'solution': self.solution.model_dump() if self.solution else None,
            'covering_radius': self.covering_radius,
            'covers': self.covers,
            'selection': self.selection.model_dump() if self.selection else None,
            'coreset': self.coreset.to_json_dict(phi),
            'recovered': self.recovered,
            'rounds': self.rounds,
            'points_communicated': self.points_communicated,
            'entries_communicated': self.entries_communicated,
            'traces': [t.to_json_dict() for t in self.traces],
            'warnings': self.warnings,
            'flags': self.flags,
        }


def communication_bound(k: int, L: int) -> int:
    """kL for the local coresets, kL^2 for their broadcast and Lk^2 for the round-2 families."""
    return k * L * (L + 1) + L * k * k
