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

from typing import List

from pydantic import BaseModel


class MachineCounters(BaseModel):
    machine: int
    points_resident: int = 0
    points_sent: int = 0
    points_received: int = 0
    entries_sent: int = 0
    entries_received: int = 0
    messages_sent: int = 0
    messages_received: int = 0


class RoundTrace(BaseModel):
    """Per-machine communication counters of one round.

    Points and non-point entries (radii) are counted separately. A message a machine sends to itself is
    counted on both sides.
    """
    round_index: int
    name: str = ''
    machines: List[MachineCounters]

    @property
    def points_sent(self) -> int:
        return sum(c.points_sent for c in self.machines)

    @property
    def points_received(self) -> int:
        return sum(c.points_received for c in self.machines)

    @property
    def entries_sent(self) -> int:
        return sum(c.entries_sent for c in self.machines)

    @property
    def entries_received(self) -> int:
        return sum(c.entries_received for c in self.machines)

    @property
    def peak_resident(self) -> int:
        return max((c.points_resident for c in self.machines), default=0)

    @property
    def conserved(self) -> bool:
        return self.points_sent == self.points_received and self.entries_sent == self.entries_received

    def to_json_dict(self) -> dict:
        return {
            'round_index': self.round_index,
            'name': self.name,
            'machines': [c.model_dump() for c in self.machines],
            'totals': {
                'points_sent': self.points_sent,
                'points_received': self.points_received,
                'entries_sent': self.entries_sent,
                'entries_received': self.entries_received,
                'peak_resident': self.peak_resident,
            },
        }


def total_points(traces: List[RoundTrace]) -> int:
    return sum(t.points_sent for t in traces)


def total_entries(traces: List[RoundTrace]) -> int:
    return sum(t.entries_sent for t in traces)
