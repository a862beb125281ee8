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

import os
from typing import Dict, List, Optional, Sequence

from pydantic import BaseModel

from mpc_kcenter.cli.report import RATIO_BOUNDS, within_bound
from mpc_kcenter.cli.runner import ALGORITHMS, RunDescriptor, oracle_radius, ordering_for, run_one, update_descriptor
from mpc_kcenter.dkcenter import communication_bound
from mpc_kcenter.log import logger
from mpc_kcenter.metric import MetricInstance
from mpc_kcenter.settings import DEFAULT_ROUND_LIMIT
from mpc_kcenter.utils.parallel_executor import keyed_exec
from mpc_kcenter.utils.utils import json_dumps_pretty, save_jsonl, save_text_to_file


class CompareRow(BaseModel):
    seed: int
    algorithm: str
    feasible: bool
    radius: Optional[float] = None
    ratio: Optional[float] = None
    degenerate: bool = False
    within_bound: Optional[bool] = None
    rounds: int = 0
    points_communicated: int = 0
    recovered: Optional[bool] = None


class AggregateRow(BaseModel):
    algorithm: str
    runs: int
    feasible_runs: int
    max_ratio: Optional[float] = None
    mean_ratio: Optional[float] = None
    violations: int = 0


class CompareSummary(BaseModel):
    instance: dict
    k: int
    L: int
    seeds: List[int]
    oracle_radius: Optional[float] = None
    rows: List[CompareRow] = []
    aggregates: List[AggregateRow] = []
    communication_violations: int = 0
    recovery_fraction: Optional[float] = None
    recovery_counterexamples: List[dict] = []
    literal_select_failures: int = 0
    literal_select_records: List[dict] = []
    literal_alg1_coverage_failures: int = 0

    @property
    def ok(self) -> bool:
        return self.communication_violations == 0 and all(a.violations == 0 for a in self.aggregates)


def _compare_seed(instance: MetricInstance, desc: RunDescriptor, seed: int, oracle: Optional[float]) -> dict:
    desc = update_descriptor(desc, seed=seed, phi_seed=seed)
    phi = ordering_for(instance, desc)
    k = min(desc.k, instance.n)
    rows, notes = [], {'communication_violation': False, 'recovered': None}
    for algorithm in ALGORITHMS:
        report, run, _ = run_one(instance, algorithm, desc, phi, oracle)
        within = None
        if oracle is not None and report.feasible:
            within = within_bound(report.radius, oracle, RATIO_BOUNDS[algorithm])
        rows.append(
            CompareRow(seed=seed,
                       algorithm=algorithm,
                       feasible=report.feasible,
                       radius=report.radius,
                       ratio=report.ratio,
                       degenerate=report.degenerate,
                       within_bound=within,
                       rounds=report.rounds,
                       points_communicated=report.points_communicated,
                       recovered=report.recovered))
        if algorithm == 'alg2' and run is not None:
            if run.points_communicated > communication_bound(k, desc.L) or run.rounds > DEFAULT_ROUND_LIMIT:
                notes['communication_violation'] = True
                logger.warning(f'seed {seed}: alg2 sent {run.points_communicated} points in {run.rounds} rounds, '
                               f'bound {communication_bound(k, desc.L)}.')
            if oracle is not None and run.feasible:
                notes['recovered'] = run.recovered
            notes['fewest_feasible'] = run.feasible

    literal_select, _, _ = run_one(instance, 'alg2', update_descriptor(desc, compat_literal_select=True), phi, oracle)
    notes['literal_select'] = {
        'seed': seed,
        'k': desc.k,
        'L': desc.L,
        'partition': desc.partition,
        'literal_feasible': literal_select.feasible,
        'fewest_feasible': notes['fewest_feasible'],
    }
    _, literal_run, _ = run_one(instance, 'alg2', update_descriptor(desc, compat_literal_alg1=True), phi, oracle)
    notes['literal_alg1_covers'] = literal_run.covers is not False
    return {'rows': rows, 'notes': notes}


def compare(instance: MetricInstance, desc: RunDescriptor, seeds: Sequence[int]) -> CompareSummary:
    """Run every algorithm for each seed (partition and ordering both derive from it) against the oracle."""
    import tqdm

    oracle = oracle_radius(instance, desc.k)
    with tqdm.tqdm(total=len(seeds), desc='compare') as bar:

        def _one(seed: int) -> dict:
            result = _compare_seed(instance, desc, seed, oracle)
            bar.update(1)
            return result

        results = keyed_exec(_one, [(seed, {'seed': seed}) for seed in seeds], executor=desc.executor)

    summary = CompareSummary(instance=instance.summary(), k=desc.k, L=desc.L, seeds=list(seeds), oracle_radius=oracle)
    recovered_runs = []
    for seed, result in results:
        summary.rows.extend(result['rows'])
        notes = result['notes']
        summary.communication_violations += int(notes['communication_violation'])
        if notes['recovered'] is not None:
            recovered_runs.append(notes['recovered'])
            if not notes['recovered']:
                summary.recovery_counterexamples.append({'seed': seed, 'k': desc.k, 'L': desc.L,
                                                         'partition': desc.partition})
        record = notes['literal_select']
        summary.literal_select_records.append(record)
        if record['fewest_feasible'] and not record['literal_feasible']:
            summary.literal_select_failures += 1
        summary.literal_alg1_coverage_failures += int(not notes['literal_alg1_covers'])

    summary.aggregates = [_aggregate(summary.rows, algorithm) for algorithm in ALGORITHMS]
    if recovered_runs:
        summary.recovery_fraction = sum(recovered_runs) / len(recovered_runs)
        if summary.recovery_fraction < 1:
            logger.warning(f'Selected centers left the broadcast coreset for seeds '
                           f'{[r["seed"] for r in summary.recovery_counterexamples]}.')
    for aggregate in summary.aggregates:
        if aggregate.violations:
            logger.error(f'{aggregate.algorithm} exceeded its {RATIO_BOUNDS[aggregate.algorithm]}x bound '
                         f'{aggregate.violations} times.')
    return summary


def _aggregate(rows: List[CompareRow], algorithm: str) -> AggregateRow:
    mine = [r for r in rows if r.algorithm == algorithm]
    ratios = [r.ratio for r in mine if r.ratio is not None]
    return AggregateRow(algorithm=algorithm,
                        runs=len(mine),
                        feasible_runs=sum(r.feasible for r in mine),
                        max_ratio=max(ratios) if ratios else None,
                        mean_ratio=sum(ratios) / len(ratios) if ratios else None,
                        violations=sum(r.within_bound is False for r in mine))


def summary_table(summary: CompareSummary) -> str:
    import prettytable

    table = prettytable.PrettyTable()
    table.field_names = ['algorithm', 'runs', 'feasible', 'max ratio', 'mean ratio', 'violations']
    for a in summary.aggregates:
        table.add_row([
            a.algorithm, a.runs, a.feasible_runs, '-' if a.max_ratio is None else f'{a.max_ratio:.4f}',
            '-' if a.mean_ratio is None else f'{a.mean_ratio:.4f}', a.violations
        ])
    return str(table)


def write_outputs(summary: CompareSummary, out: Optional[str] = None, csv: Optional[str] = None) -> None:
    """Summary JSON at `out`, one JSON line per run next to it, and an optional CSV of the runs."""
    if out:
        dirname = os.path.dirname(out)
        if dirname:
            os.makedirs(dirname, exist_ok=True)
        save_text_to_file(out, json_dumps_pretty(summary))
        save_jsonl(summary.rows, os.path.splitext(out)[0] + '.runs.jsonl')
    if csv:
        import pandas as pd
        pd.DataFrame([r.model_dump() for r in summary.rows]).to_csv(csv, index=False)
