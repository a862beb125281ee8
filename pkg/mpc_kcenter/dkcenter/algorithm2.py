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

from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from pydantic import BaseModel

from mpc_kcenter.coreset import CoresetPart, assemble
from mpc_kcenter.dkcenter.result import DistributedRun, SelectionResult
from mpc_kcenter.errors import InvalidParams
from mpc_kcenter.log import logger
from mpc_kcenter.metric import MetricInstance, Ordering, PointId, center_covers, covering_radius, reorder_prioritizing
from mpc_kcenter.mpcsim import (ClusterConfig, Machine, MachineId, MachineStep, broadcast, gather, part_sizes,
                                run_round, scatter)
from mpc_kcenter.solvers import SelectionRule, Solution, WRecord, greedy_cover, permutation_stable_pruning


class Round2Family(BaseModel):
    """The round-2 WRecord of every machine, as gathered on machine 1."""
    records: Dict[int, WRecord]

    def radii(self) -> List[float]:
        return sorted({e.rho for record in self.records.values() for e in record.entries.values()})

    def size(self) -> int:
        return sum(e.kappa for record in self.records.values() for e in record.entries.values())


def round1_local_coreset(instance: MetricInstance,
                         points: Sequence[PointId],
                         phi: Ordering,
                         k: int,
                         literal: bool = False,
                         source_set: Optional[MachineId] = None) -> Tuple[List[PointId], float]:
    """C_i and r_i: the smallest-radius recorded cover of S_i with at most k centers.

    Sets of at most k points, and sets whose sweep records nothing, contribute their radius-0 greedy cover.
    """
    if not points:
        return [], 0.0
    if len(set(points)) <= k:
        return greedy_cover(instance, points, phi, 0.0), 0.0
    record = permutation_stable_pruning(instance, points, phi, k, literal=literal, source_set=source_set)
    if not record.entries:
        return greedy_cover(instance, points, phi, 0.0), 0.0
    entry = record.best()
    return entry.centers, entry.rho


def round2_family(instance: MetricInstance,
                  points: Sequence[PointId],
                  phi: Ordering,
                  k: int,
                  literal: bool = False,
                  source_set: Optional[MachineId] = None) -> WRecord:
    """All (rho, T) covers of S_i and C from a single sweep under the C-first ordering."""
    return permutation_stable_pruning(instance, points, phi, min(k, len(set(points))), literal=literal,
                                      source_set=source_set)


def select_solution(families: Round2Family,
                    k: int,
                    rule: SelectionRule = 'fewest',
                    phi: Optional[Ordering] = None) -> SelectionResult:
    """Find the smallest recorded radius at which the per-machine covers union to at most k centers."""
    best: Optional[SelectionResult] = None
    attempts = 0
    for rho in families.radii():
        picks = {}
        for i, record in sorted(families.records.items()):
            entry = record.qualifying(rho, rule)
            if entry is None:
                break
            picks[i] = entry
        else:
            attempts += 1
            union = set()
            for entry in picks.values():
                union.update(entry.centers)
            union = phi.sort(union) if phi else sorted(union)
            result = SelectionResult(rule=rule,
                                     rho=rho,
                                     choices={i: e.kappa for i, e in picks.items()},
                                     centers=union,
                                     feasible=len(union) <= k,
                                     attempts=attempts)
            if result.feasible:
                return result
            if best is None or len(union) < len(best.centers):
                best = result
    if best is None:
        return SelectionResult(rule=rule, attempts=attempts)
    return best.model_copy(update={'attempts': attempts})


def run_algorithm2(instance: MetricInstance,
                   partition: Mapping[PointId, MachineId],
                   k: int,
                   config: Optional[ClusterConfig] = None,
                   phi: Optional[Ordering] = None,
                   literal_alg1: bool = False,
                   literal_select: bool = False,
                   machine_order: Optional[Sequence[MachineId]] = None) -> DistributedRun:
    """Two-round coreset construction followed by a gathered radius selection.

    Round 1 sends each machine's local cover C_i to machine 1, which broadcasts C = union of C_i. Each
    machine then sweeps S_i and C under the ordering that puts C first and sends every recorded cover to
    machine 1, which selects the answer.
    """
    if k < 1:
        raise InvalidParams(message=f'k must be positive, got {k}.')
    phi = phi or Ordering.identity(instance.n)
    L = config.L if config else max(partition.values(), default=1)
    config = config or ClusterConfig.auto(part_sizes(partition, L), k)
    rule: SelectionRule = 'literal-max' if literal_select else 'fewest'
    warnings = []
    if k * k * L > config.memory:
        warnings.append(f'k^2 L = {k * k * L} exceeds the memory budget m = {config.memory}.')
        logger.warning(warnings[-1])

    state = scatter(instance, partition, config)

    def _local_coreset(machine: Machine) -> Optional[dict]:
        if not machine.points:
            return None
        centers, radius = round1_local_coreset(instance, machine.points, phi, k, literal_alg1, machine.index)
        return {'points': centers, 'entries': 1, 'payload': radius}

    state = gather(state, _local_coreset, tag='local-coreset', machine_order=machine_order)

    parts = [
        CoresetPart(source_set=m.source, points=m.points) for m in state.machine(1).received('local-coreset')
    ]
    coreset = assemble(parts, phi)
    state = broadcast(state, 1, coreset.merged, tag='coreset-broadcast', machine_order=machine_order)
    phi_c = reorder_prioritizing(phi, coreset.merged)

    def _family(machine: Machine) -> dict:
        record = round2_family(instance, machine.points, phi_c, k, literal_alg1, machine.index)
        points = [p for kappa in record.kappas() for p in record.entries[kappa].centers]
        return {'points': points, 'entries': len(record.entries), 'payload': record}

    state = gather(state, _family, tag='family', machine_order=machine_order)

    def _select(machine: Machine) -> Optional[MachineStep]:
        if machine.index != 1:
            return None
        families = Round2Family(records={m.source: m.payload for m in machine.received('family')})
        return MachineStep(store={'selection': select_solution(families, k, rule, phi_c)})

    state = run_round(state, _select, name='select', machine_order=machine_order)
    selection: SelectionResult = state.machine(1).store['selection']

    run = DistributedRun(algorithm='alg2',
                         k=k,
                         L=L,
                         memory=config.memory,
                         selection=selection,
                         coreset=coreset,
                         traces=state.traces,
                         warnings=warnings,
                         flags={
                             'literal_alg1': literal_alg1,
                             'literal_select': literal_select
                         })
    if not selection.feasible:
        logger.warning(f'No recorded radius gives at most {k} centers under the `{rule}` rule '
                       f'(smallest union: {len(selection.centers)} centers).')
        return run

    centers = selection.centers
    covers = center_covers(centers, instance, instance.point_ids, selection.rho)
    if not covers:
        if not literal_alg1:
            raise AssertionError(f'Selected centers {centers} do not cover the input at radius {selection.rho}.')
        warnings.append(f'Literal pruning produced centers that do not cover the input at {selection.rho}.')
        logger.warning(warnings[-1])
    recovered = set(centers) <= set(coreset.merged)
    if not recovered:
        logger.info(f'Selected centers {sorted(set(centers) - set(coreset.merged))} lie outside the broadcast coreset.')
    logger.info(f'alg2 selected rho={selection.rho} with {len(centers)} centers in {state.rounds} rounds.')
    return run.model_copy(
        update={
            'solution': Solution(algorithm='alg2', k=k, centers=sorted(centers), radius=selection.rho),
            'covering_radius': covering_radius(centers, instance, instance.point_ids),
            'covers': covers,
            'recovered': recovered,
            'warnings': warnings,
        })
