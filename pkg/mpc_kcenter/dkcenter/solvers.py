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

from typing import Optional

from mpc_kcenter.dkcenter.algorithm2 import run_algorithm2
from mpc_kcenter.dkcenter.baseline import run_baseline4
from mpc_kcenter.dkcenter.result import DistributedRun
from mpc_kcenter.errors import KCenterError
from mpc_kcenter.metric import MetricInstance, Ordering
from mpc_kcenter.mpcsim import ClusterConfig, make_partition, part_sizes
from mpc_kcenter.solvers import K_SCHEMA, BaseSolver, Solution, register_solver

DISTRIBUTED_PROPERTIES = {
    'k': K_SCHEMA,
    'L': {
        'type': 'integer',
        'minimum': 1,
        'description': 'Number of machines'
    },
    'memory': {
        'type': 'integer',
        'minimum': 1,
        'description': 'Points a machine may hold; derived from the run when omitted'
    },
    'partition': {
        'type': 'string',
        'enum': ['round-robin', 'seeded-random', 'by-file'],
    },
    'partition_file': {
        'type': 'string'
    },
    'seed': {
        'type': 'integer'
    },
    'executor': {
        'type': 'string',
        'enum': ['serial', 'thread'],
    },
}


class DistributedSolver(BaseSolver):
    """A solver that scatters the instance over L simulated machines."""
    parameters = {'type': 'object', 'properties': DISTRIBUTED_PROPERTIES, 'required': ['k']}

    def run(self, params, instance: MetricInstance, phi: Optional[Ordering] = None) -> DistributedRun:
        params = self._verify_json_format_args(params)
        L = params.get('L', 1)
        partition = make_partition(params.get('partition', 'round-robin'),
                                   instance.n,
                                   L,
                                   seed=params.get('seed', 0),
                                   path=params.get('partition_file'))
        extra = {'executor': params['executor']} if 'executor' in params else {}
        config = ClusterConfig.auto(part_sizes(partition, L), params['k'], memory=params.get('memory'), **extra)
        return self._run(params, instance, partition, config, phi)

    def _run(self, params: dict, instance, partition, config, phi) -> DistributedRun:
        raise NotImplementedError

    def call(self, params, instance: MetricInstance, phi: Optional[Ordering] = None, **kwargs) -> Solution:
        run = self.run(params, instance, phi)
        if not run.feasible:
            raise KCenterError(code='Infeasible', message=f'{self.name} found no radius with at most k centers.')
        return run.solution


@register_solver('alg2')
class Algorithm2(DistributedSolver):
    description = 'Two-round distributed 2-approximation built on permutation-stable pruning coresets.'
    parameters = {
        'type': 'object',
        'properties': {
            **DISTRIBUTED_PROPERTIES,
            'literal_alg1': {
                'type': 'boolean',
                'description': 'Use the capped, decrementing pruning sweep'
            },
            'literal_select': {
                'type': 'boolean',
                'description': 'Pick the most-centers qualifying entry per machine'
            },
        },
        'required': ['k'],
    }

    def _run(self, params, instance, partition, config, phi) -> DistributedRun:
        return run_algorithm2(instance,
                              partition,
                              params['k'],
                              config=config,
                              phi=phi,
                              literal_alg1=params.get('literal_alg1', False),
                              literal_select=params.get('literal_select', False))


@register_solver('baseline4')
class Baseline4(DistributedSolver):
    description = 'Gonzalez composable coreset followed by Gonzalez on the union; a 4-approximation.'

    def _run(self, params, instance, partition, config, phi) -> DistributedRun:
        return run_baseline4(instance, partition, params['k'], config=config, phi=phi)
