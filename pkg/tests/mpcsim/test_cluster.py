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

import itertools

import pytest

from mpc_kcenter.errors import InvalidParams, MemoryExceeded, RoundLimitExceeded
from mpc_kcenter.metric import build_instance
from mpc_kcenter.mpcsim import (ClusterConfig, MachineStep, Message, auto_memory, broadcast, gather, round_robin,
                                run_round, scatter)
from mpc_kcenter.utils.utils import json_dumps_compact


@pytest.fixture
def line12():
    return build_instance([[float(i)] for i in range(12)])


def _state(instance, L=3, memory=100, **kwargs):
    return scatter(instance, round_robin(instance.n, L), ClusterConfig(L=L, memory=memory, **kwargs))


def test_round_robin_sizes(line12):
    state = _state(line12)
    assert state.sizes == [4, 4, 4]
    assert state.balance == 1.0
    assert state.machine(2).points == [1, 4, 7, 10]


def test_everything_on_one_machine(line12):
    with pytest.raises(MemoryExceeded) as ex:
        scatter(line12, {p: 1 for p in range(12)}, ClusterConfig(L=2, memory=5))
    assert ex.value.extra['machine'] == 1


def test_empty_machine_balance(line12):
    state = scatter(line12, {p: 1 for p in range(12)}, ClusterConfig(L=2, memory=20))
    assert state.balance == float('inf')


def test_partition_must_cover_every_point(line12):
    with pytest.raises(InvalidParams):
        scatter(line12, {p: 1 for p in range(11)}, ClusterConfig(L=1, memory=20))
    with pytest.raises(InvalidParams):
        scatter(line12, {p: 3 for p in range(12)}, ClusterConfig(L=2, memory=20))


def test_noop_round(line12):
    state = _state(line12)
    after = run_round(state, lambda machine: None, name='noop')
    assert [m.points for m in after.machines] == [m.points for m in state.machines]
    assert after.traces[0].points_sent == 0
    assert after.traces[0].conserved
    assert after.rounds == 1


def test_broadcast_accounting(line12):
    state = _state(line12)
    after = broadcast(state, 1, [0, 3])
    trace = after.traces[-1]
    assert trace.points_sent == 2 * 3
    assert [c.points_received for c in trace.machines] == [2, 2, 2]
    assert trace.conserved
    for machine in after.machines:
        assert {0, 3} <= set(machine.points)
        assert machine.received('broadcast')[0].points == [0, 3]


def test_empty_broadcast_is_free(line12):
    after = broadcast(_state(line12), 2, [])
    assert after.traces[-1].points_sent == 0
    assert after.rounds == 1


def test_broadcast_needs_resident_payload(line12):
    with pytest.raises(InvalidParams):
        broadcast(_state(line12), 1, [1])


def test_broadcast_memory(line12):
    with pytest.raises(MemoryExceeded):
        broadcast(_state(line12, memory=5), 1, [0, 3])


def test_concurrent_sends_delivered_at_barrier(line12):
    state = _state(line12)

    def _send(machine):
        if machine.index == 3:
            return None
        # the recipient must not see the other sender's message during the round
        assert machine.inbox == []
        return MachineStep(messages=[Message(source=machine.index, target=3, tag='x', points=machine.points[:1])])

    after = run_round(state, _send)
    assert [m.source for m in after.machine(3).inbox] == [1, 2]
    assert after.traces[-1].machines[2].points_received == 2


def test_sender_identity_is_checked(line12):
    state = _state(line12)

    def _spoof(machine):
        return MachineStep(messages=[Message(source=1, target=2, tag='x')])

    with pytest.raises(InvalidParams):
        run_round(state, _spoof)


def test_round_limit(line12):
    state = _state(line12, round_limit=2)
    state = run_round(run_round(state, lambda m: None), lambda m: None)
    with pytest.raises(RoundLimitExceeded):
        run_round(state, lambda m: None)


def test_compute_cannot_mutate_state(line12):
    state = _state(line12)

    def _mutate(machine):
        machine.points.append(99)
        return None

    after = run_round(state, _mutate)
    assert after.machine(1).points == state.machine(1).points


def _gather_state(instance, order=None, executor='serial'):
    state = _state(instance, executor=executor)
    state = gather(state, lambda m: {'points': m.points[-2:], 'entries': 1, 'payload': sum(m.points)},
                   tag='g',
                   machine_order=order)
    return state


@pytest.mark.parametrize('executor', ['serial', 'thread'])
def test_scheduling_independence(line12, executor):
    baseline = json_dumps_compact(_gather_state(line12, executor=executor))
    for order in itertools.permutations([1, 2, 3]):
        assert json_dumps_compact(_gather_state(line12, order=list(order), executor=executor)) == baseline


def test_gather_store_and_totals(line12):
    state = _gather_state(line12)
    trace = state.traces[-1]
    assert trace.points_sent == 6
    assert trace.entries_sent == 3
    assert trace.entries_received == 3
    assert [m.payload for m in state.machine(1).received('g')] == [0 + 3 + 6 + 9, 1 + 4 + 7 + 10, 2 + 5 + 8 + 11]
    assert state.machine(1).resident == len({0, 3, 6, 9, 7, 10, 8, 11})


def test_machine_order_must_be_permutation(line12):
    with pytest.raises(InvalidParams):
        run_round(_state(line12), lambda m: None, machine_order=[1, 1, 2])


def test_auto_memory():
    assert auto_memory([4, 4, 4], 2) == 4 + 6 + 9
    assert ClusterConfig.auto([4, 4], 1).memory == auto_memory([4, 4], 1)
    assert ClusterConfig.auto([4, 4], 1, memory=50).memory == 50
