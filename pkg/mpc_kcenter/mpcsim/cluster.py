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

from typing import Any, Callable, Dict, Iterable, List, Literal, Mapping, Optional, Sequence, Set

from pydantic import BaseModel, Field

from mpc_kcenter.errors import InvalidParams, MemoryExceeded, RoundLimitExceeded
from mpc_kcenter.log import logger
from mpc_kcenter.metric import MetricInstance, PointId
from mpc_kcenter.mpcsim.trace import MachineCounters, RoundTrace
from mpc_kcenter.settings import DEFAULT_EXECUTOR, DEFAULT_MEMORY, DEFAULT_ROUND_LIMIT
from mpc_kcenter.utils.parallel_executor import keyed_exec

MachineId = int


def auto_memory(part_sizes: Sequence[int], k: int) -> int:
    """Room for the largest part, the broadcast coreset and the gathered round-2 families."""
    L = len(part_sizes)
    return max(max(part_sizes, default=0) + k * L + L * k * (k + 1) // 2, 1)


class ClusterConfig(BaseModel):
    L: int = Field(ge=1)
    memory: int = Field(ge=1)
    round_limit: int = Field(default=DEFAULT_ROUND_LIMIT, ge=1)
    executor: Literal['serial', 'thread'] = DEFAULT_EXECUTOR
    max_workers: Optional[int] = None

    @classmethod
    def auto(cls, part_sizes: Sequence[int], k: int, memory: Optional[int] = None, **kwargs) -> 'ClusterConfig':
        memory = memory or DEFAULT_MEMORY or auto_memory(part_sizes, k)
        return cls(L=len(part_sizes), memory=memory, **kwargs)


class Message(BaseModel):
    """A one-way transfer delivered at the next barrier.

    `points` are point ids, `entries` counts the non-point values (radii) riding along. Merged messages add
    their points to the recipient's resident set.
    """
    source: MachineId
    target: MachineId
    tag: str
    points: List[PointId] = []
    entries: int = 0
    payload: Any = None
    merge: bool = False


class MachineStep(BaseModel):
    """What one machine produces in a compute phase."""
    messages: List[Message] = []
    store: Dict[str, Any] = {}


class Machine(BaseModel):
    """One logical machine. Residency counts the distinct point ids it holds, delivered messages included."""
    index: MachineId
    points: List[PointId]
    inbox: List[Message] = []
    store: Dict[str, Any] = {}

    @property
    def resident(self) -> int:
        return len(self.held_points())

    def received(self, tag: str) -> List[Message]:
        return [m for m in self.inbox if m.tag == tag]

    def held_points(self) -> Set[PointId]:
        held = set(self.points)
        for m in self.inbox:
            held.update(m.points)
        return held


class ClusterState(BaseModel):
    config: ClusterConfig
    machines: List[Machine]
    traces: List[RoundTrace] = []

    def machine(self, index: MachineId) -> Machine:
        if not 1 <= index <= len(self.machines):
            raise InvalidParams(message=f'Machine {index} does not exist (L={len(self.machines)}).')
        return self.machines[index - 1]

    @property
    def sizes(self) -> List[int]:
        return [len(m.points) for m in self.machines]

    @property
    def balance(self) -> float:
        """max |S_i| / min |S_i|; inf when some machine is empty."""
        smallest = min(self.sizes)
        if smallest == 0:
            return float('inf')
        return max(self.sizes) / smallest

    @property
    def rounds(self) -> int:
        return len(self.traces)


def scatter(instance: MetricInstance, partition: Mapping[PointId, MachineId], config: ClusterConfig) -> ClusterState:
    """Place S_i on machine i."""
    instance.check_ids(partition.keys())
    missing = set(instance.point_ids) - set(partition)
    if missing:
        raise InvalidParams(message=f'{len(missing)} points have no machine, e.g. {min(missing)}.')
    parts: Dict[MachineId, List[PointId]] = {i: [] for i in range(1, config.L + 1)}
    for p, i in partition.items():
        if i not in parts:
            raise InvalidParams(message=f'Point {p} is assigned to machine {i}, outside 1..{config.L}.')
        parts[i].append(int(p))

    machines = [Machine(index=i, points=sorted(parts[i])) for i in sorted(parts)]
    for machine in machines:
        _check_memory(machine, config, stage='scatter')
    state = ClusterState(config=config, machines=machines)
    logger.info(f'Scattered {instance.n} points over {config.L} machines, sizes {state.sizes}, '
                f'balance {state.balance:.3f}, memory {config.memory}.')
    return state


def run_round(state: ClusterState,
              compute: Callable[[Machine], Optional[MachineStep]],
              name: str = '',
              machine_order: Optional[Sequence[MachineId]] = None) -> ClusterState:
    """One compute phase against the pre-round snapshot followed by barrier delivery.

    `machine_order` fixes the physical evaluation order; it never changes the outcome.
    """
    config = state.config
    if state.rounds >= config.round_limit:
        raise RoundLimitExceeded(message=f'Round limit {config.round_limit} reached before round `{name}`.',
                                 extra={'round_limit': config.round_limit})
    indices = [m.index for m in state.machines]
    order = list(machine_order) if machine_order is not None else indices
    if sorted(order) != indices:
        raise InvalidParams(message=f'Machine order {order} is not a permutation of {indices}.')

    def _step(machine: Machine) -> MachineStep:
        return compute(machine) or MachineStep()

    snapshot = {m.index: m.model_copy(deep=True) for m in state.machines}
    steps = dict(
        keyed_exec(_step, [(i, {'machine': snapshot[i]}) for i in order],
                   executor=config.executor,
                   max_workers=config.max_workers))

    counters = {i: MachineCounters(machine=i) for i in indices}
    delivered: Dict[MachineId, List[Message]] = {i: [] for i in indices}
    for i in indices:
        for message in steps[i].messages:
            if message.source != i:
                raise InvalidParams(message=f'Machine {i} cannot send as machine {message.source}.')
            if message.target not in delivered:
                raise InvalidParams(message=f'Machine {i} sent to unknown machine {message.target}.')
            delivered[message.target].append(message)
            counters[i].points_sent += len(message.points)
            counters[i].entries_sent += message.entries
            counters[i].messages_sent += 1

    machines = []
    for old in state.machines:
        inbox = sorted(delivered[old.index], key=lambda m: (m.source, m.tag))
        points = set(old.points)
        for message in inbox:
            if message.merge:
                points.update(message.points)
            counters[old.index].points_received += len(message.points)
            counters[old.index].entries_received += message.entries
            counters[old.index].messages_received += 1
        machine = Machine(index=old.index,
                          points=sorted(points),
                          inbox=inbox,
                          store={
                              **old.store,
                              **steps[old.index].store
                          })
        _check_memory(machine, config, stage=name)
        counters[old.index].points_resident = max(old.resident, machine.resident)
        machines.append(machine)

    trace = RoundTrace(round_index=state.rounds + 1, name=name, machines=[counters[i] for i in indices])
    logger.debug(f'Round {trace.round_index} `{name}`: {trace.points_sent} points and {trace.entries_sent} '
                 f'entries sent, peak residency {trace.peak_resident}.')
    return ClusterState(config=config, machines=machines, traces=state.traces + [trace])


def broadcast(state: ClusterState,
              source: MachineId,
              payload: Iterable[PointId],
              tag: str = 'broadcast',
              machine_order: Optional[Sequence[MachineId]] = None) -> ClusterState:
    """Send `payload` from `source` to every machine, itself included; recipients add it to their points."""
    payload = list(dict.fromkeys(int(p) for p in payload))
    unknown = set(payload) - state.machine(source).held_points()
    if unknown:
        raise InvalidParams(message=f'Machine {source} does not hold broadcast points {sorted(unknown)}.')

    def _send(machine: Machine) -> Optional[MachineStep]:
        if machine.index != source or not payload:
            return None
        return MachineStep(messages=[
            Message(source=source, target=m.index, tag=tag, points=payload, merge=True) for m in state.machines
        ])

    logger.info(f'Broadcasting {len(payload)} points from machine {source} to {len(state.machines)} machines.')
    return run_round(state, _send, name=tag, machine_order=machine_order)


def gather(state: ClusterState,
           collect: Callable[[Machine], Optional[dict]],
           tag: str,
           target: MachineId = 1,
           machine_order: Optional[Sequence[MachineId]] = None) -> ClusterState:
    """Every machine sends what `collect` returns (Message fields: points, entries, payload) to `target`."""
    state.machine(target)

    def _send(machine: Machine) -> Optional[MachineStep]:
        item = collect(machine)
        if item is None:
            return None
        return MachineStep(messages=[Message(source=machine.index, target=target, tag=tag, **item)])

    return run_round(state, _send, name=tag, machine_order=machine_order)


def _check_memory(machine: Machine, config: ClusterConfig, stage: str) -> None:
    if machine.resident > config.memory:
        raise MemoryExceeded(message=f'Machine {machine.index} holds {machine.resident} points after `{stage}`, '
                             f'above the budget m={config.memory}.',
                             extra={
                                 'machine': machine.index,
                                 'resident': machine.resident,
                                 'memory': config.memory,
                                 'stage': stage
                             })
