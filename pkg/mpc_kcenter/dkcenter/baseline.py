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

from typing import Mapping, Optional, Sequence

from mpc_kcenter.coreset import CoresetPart, assemble, gonzalez_coreset
from mpc_kcenter.dkcenter.result import DistributedRun
from mpc_kcenter.errors import InvalidParams
from mpc_kcenter.log import logger
from mpc_kcenter.metric import MetricInstance, Ordering, PointId, covering_radius
from mpc_kcenter.mpcsim import ClusterConfig, Machine, MachineId, MachineStep, gather, part_sizes, run_round, scatter
from mpc_kcenter.solvers import Solution, gonzalez


def run_baseline4(instance: MetricInstance,
                  partition: Mapping[PointId, MachineId],
                  k: int,
                  config: Optional[ClusterConfig] = None,
                  phi: Optional[Ordering] = None,
                  machine_order: Optional[Sequence[MachineId]] = None) -> DistributedRun:
    """Gonzalez on every machine, then Gonzalez again on the gathered union of the local centers."""
    if k < 1:
        raise InvalidParams(message=f'k must be positive, got {k}.')
    phi = phi or Ordering.identity(instance.n)
    L = config.L if config else max(partition.values(), default=1)
    config = config or ClusterConfig.auto(part_sizes(partition, L), k)

    state = scatter(instance, partition, config)

    def _local_centers(machine: Machine) -> Optional[dict]:
        if not machine.points:
            return None
        part = gonzalez_coreset(instance, machine.points, phi, k, source_set=machine.index)
        return {'points': part.points}

    state = gather(state, _local_centers, tag='gonzalez-coreset', machine_order=machine_order)
    parts = [
        CoresetPart(source_set=m.source, points=m.points) for m in state.machine(1).received('gonzalez-coreset')
    ]
    coreset = assemble(parts, phi)

    def _solve(machine: Machine) -> Optional[MachineStep]:
        if machine.index != 1:
            return None
        union = coreset.merged
        return MachineStep(store={'solution': gonzalez(instance, union, min(k, len(union)), phi=phi)})

    state = run_round(state, _solve, name='solve', machine_order=machine_order)
    centers = state.machine(1).store['solution'].centers
    radius = covering_radius(centers, instance, instance.point_ids)
    logger.info(f'baseline4 radius {radius} with {len(centers)} centers from a {len(coreset.merged)}-point union.')
    return DistributedRun(algorithm='baseline4',
                          k=k,
                          L=L,
                          memory=config.memory,
                          solution=Solution(algorithm='baseline4', k=k, centers=centers, radius=radius),
                          coreset=coreset,
                          traces=state.traces,
                          covering_radius=radius,
                          covers=True)
