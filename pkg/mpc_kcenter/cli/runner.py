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

import time
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError

from mpc_kcenter.cli.report import AlgorithmReport, ExperimentReport, ratio_vs_oracle
from mpc_kcenter.dkcenter import DistributedRun, DistributedSolver
from mpc_kcenter.errors import InstanceTooLarge, InvalidParams
from mpc_kcenter.log import logger
from mpc_kcenter.metric import MetricInstance, Ordering, load_points_csv
from mpc_kcenter.mpcsim import PartitionStrategy
from mpc_kcenter.settings import DEFAULT_EXECUTOR
from mpc_kcenter.solvers import exact_kcenter, get_solver
from mpc_kcenter.utils.utils import json_loads, read_text_from_file

AlgorithmName = Literal['alg2', 'baseline4', 'gonzalez', 'pruning', 'exact']
ALGORITHMS = ['exact', 'gonzalez', 'pruning', 'baseline4', 'alg2']


class RunDescriptor(BaseModel):
    instance: Optional[str] = None
    algorithm: AlgorithmName = 'alg2'
    k: int = Field(ge=1)
    L: int = Field(default=1, ge=1)
    memory: Optional[int] = Field(default=None, ge=1)
    partition: PartitionStrategy = 'round-robin'
    partition_file: Optional[str] = None
    seed: int = 0
    phi_seed: Optional[int] = None  # random ordering phi; identity when unset
    compat_literal_alg1: bool = False
    compat_literal_select: bool = False
    executor: Literal['serial', 'thread'] = DEFAULT_EXECUTOR
    out: Optional[str] = None
    csv: Optional[str] = None


def load_descriptor(path: str) -> RunDescriptor:
    """Read a JSON or JSON5 run descriptor."""
    try:
        return RunDescriptor.model_validate(json_loads(read_text_from_file(path)))
    except ValidationError as ex:
        raise InvalidParams(ex)


def update_descriptor(desc: RunDescriptor, **overrides) -> RunDescriptor:
    """Flags given on the command line win over the descriptor file."""
    fields = {key: value for key, value in overrides.items() if value is not None}
    try:
        return RunDescriptor.model_validate({**desc.model_dump(), **fields})
    except ValidationError as ex:
        raise InvalidParams(ex)


def ordering_for(instance: MetricInstance, desc: RunDescriptor) -> Ordering:
    if desc.phi_seed is None:
        return Ordering.identity(instance.n)
    return Ordering.random(instance.n, desc.phi_seed)


def oracle_radius(instance: MetricInstance, k: int) -> Optional[float]:
    """r* when the instance is within the exact oracle's guard, else None."""
    try:
        return exact_kcenter(instance, None, min(k, instance.n)).radius
    except InstanceTooLarge as ex:
        logger.info(f'No oracle for this run: {ex.message}')
        return None


def run_one(instance: MetricInstance,
            algorithm: str,
            desc: RunDescriptor,
            phi: Ordering,
            oracle: Optional[float] = None) -> Tuple[AlgorithmReport, Optional[DistributedRun], float]:
    """Run one named algorithm; returns its report row, the distributed run if any, and the wall time."""
    k = min(desc.k, instance.n)
    solver = get_solver(algorithm)
    start = time.perf_counter()
    if isinstance(solver, DistributedSolver):
        params = {'k': k, 'L': desc.L, 'partition': desc.partition, 'seed': desc.seed, 'executor': desc.executor}
        if desc.memory is not None:
            params['memory'] = desc.memory
        if desc.partition_file:
            params['partition_file'] = desc.partition_file
        if algorithm == 'alg2':
            params['literal_alg1'] = desc.compat_literal_alg1
            params['literal_select'] = desc.compat_literal_select
        run = solver.run(params, instance, phi)
        wall_time = time.perf_counter() - start
        solution = run.solution
        row = AlgorithmReport(algorithm=algorithm,
                              feasible=run.feasible,
                              radius=solution.radius if solution else None,
                              centers=solution.centers if solution else [],
                              covering_radius=run.covering_radius,
                              rounds=run.rounds,
                              points_communicated=run.points_communicated,
                              entries_communicated=run.entries_communicated,
                              recovered=run.recovered,
                              coreset_size=len(run.coreset.merged),
                              warnings=run.warnings)
    else:
        run = None
        solution = solver.call({'k': k}, instance, phi)
        wall_time = time.perf_counter() - start
        row = AlgorithmReport(algorithm=algorithm,
                              feasible=True,
                              radius=solution.radius,
                              centers=solution.centers,
                              covering_radius=solution.radius,
                              rounds=1)
    ratio, degenerate = ratio_vs_oracle(row.radius, oracle)
    row = row.model_copy(update={'ratio': ratio, 'degenerate': degenerate})
    return row, run, wall_time


def solve(instance: MetricInstance, desc: RunDescriptor, algorithms: Optional[List[str]] = None) -> ExperimentReport:
    algorithms = algorithms or [desc.algorithm]
    phi = ordering_for(instance, desc)
    oracle = oracle_radius(instance, desc.k)
    report = ExperimentReport(instance=instance.summary(),
                              k=desc.k,
                              L=desc.L,
                              memory=desc.memory,
                              partition=desc.partition,
                              seed=desc.seed,
                              phi_seed=desc.phi_seed,
                              flags={
                                  'compat_literal_alg1': desc.compat_literal_alg1,
                                  'compat_literal_select': desc.compat_literal_select,
                              },
                              oracle_radius=oracle)
    for algorithm in algorithms:
        row, run, wall_time = run_one(instance, algorithm, desc, phi, oracle)
        if run is not None:
            # the budget actually enforced, auto-derived when the descriptor leaves it unset
            report.memory = run.memory
        report.results.append(row)
        report.timings[algorithm] = wall_time
    return report


def load_instance(desc: RunDescriptor) -> MetricInstance:
    if not desc.instance:
        raise InvalidParams(message='No instance file given.')
    return load_points_csv(desc.instance)
