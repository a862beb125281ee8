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

import json

import pytest

from mpc_kcenter.cli.main import EXIT_ERROR, EXIT_INFEASIBLE, EXIT_OK, main
from mpc_kcenter.cli.report import ExperimentReport
from mpc_kcenter.cli.runner import RunDescriptor, solve
from mpc_kcenter.metric import build_instance


@pytest.fixture
def line_file(tmp_path):
    path = tmp_path / 'line.csv'
    path.write_text('0\n1\n10\n11\n')
    return str(path)


def _report(path):
    with open(path, encoding='utf-8') as f:
        return json.load(f)


def test_solve_exact(tmp_path, line_file):
    out = str(tmp_path / 'exact.json')
    assert main(['solve', line_file, '--alg', 'exact', '--k', '2', '--out', out]) == EXIT_OK
    report = _report(out)
    assert report['results'][0]['radius'] == 1.0
    assert report['results'][0]['ratio'] == 1.0


def test_solve_alg2_single_machine(tmp_path, line_file):
    out = str(tmp_path / 'alg2.json')
    assert main(['solve', line_file, '--alg', 'alg2', '--k', '2', '--L', '1', '--out', out]) == EXIT_OK
    row = _report(out)['results'][0]
    assert row['radius'] <= 2.0
    assert row['rounds'] == 4


def test_solve_warns_when_memory_is_tight(tmp_path):
    path = tmp_path / 'line8.csv'
    path.write_text('\n'.join(str(i) for i in range(8)) + '\n')
    out = str(tmp_path / 'tight.json')
    code = main(['solve', str(path), '--alg', 'alg2', '--k', '3', '--L', '2', '--memory', '8', '--out', out])
    assert code == EXIT_OK
    assert any('memory budget' in w for w in _report(out)['results'][0]['warnings'])


def test_partition_from_file(tmp_path):
    path = tmp_path / 'pairs.csv'
    path.write_text('0\n1\n20\n21\n')
    partition = tmp_path / 'partition.json'
    partition.write_text('[1, 1, 2, 2]')
    out = str(tmp_path / 'r.json')
    args = ['solve', str(path), '--alg', 'alg2', '--k', '2', '--L', '2', '--partition', 'by-file',
            '--partition-file', str(partition), '--out', out]
    assert main(args) == EXIT_OK
    row = _report(out)['results'][0]
    assert row['radius'] == 1.0
    assert row['ratio'] == 1.0


def test_infeasible_exit_code(tmp_path, line_file, monkeypatch):
    import mpc_kcenter.cli.main as cli_main

    def infeasible(instance, desc):
        report = solve(instance, desc)
        report.results[0] = report.results[0].model_copy(update={'feasible': False, 'radius': None})
        return report

    monkeypatch.setattr(cli_main, 'solve', infeasible)
    assert main(['solve', line_file, '--alg', 'alg2', '--k', '2', '--out', str(tmp_path / 'r.json')]) == EXIT_INFEASIBLE


def test_descriptor_with_flag_override(tmp_path, line_file):
    descriptor = tmp_path / 'run.json5'
    descriptor.write_text(f"{{instance: '{line_file}', algorithm: 'gonzalez', k: 1, L: 2}}")
    out = str(tmp_path / 'd.json')
    assert main(['solve', '--descriptor', str(descriptor), '--k', '2', '--out', out]) == EXIT_OK
    report = _report(out)
    assert report['k'] == 2
    assert report['results'][0]['algorithm'] == 'gonzalez'
    assert report['results'][0]['radius'] == 1.0


def test_csv_summary(tmp_path, line_file):
    import pandas as pd

    csv = str(tmp_path / 'summary.csv')
    assert main(['solve', line_file, '--alg', 'baseline4', '--k', '2', '--L', '2', '--csv', csv,
                 '--out', str(tmp_path / 'b.json')]) == EXIT_OK
    df = pd.read_csv(csv)
    assert list(df['algorithm']) == ['baseline4']


def test_validate(tmp_path, line_file):
    assert main(['validate', line_file]) == EXIT_OK
    bad = tmp_path / 'bad.csv'
    bad.write_text('matrix,3\n0,1,10\n1,0,1\n10,1,0\n')
    assert main(['validate', str(bad)]) == EXIT_ERROR


def test_errors_exit_1(tmp_path, line_file):
    assert main(['solve', str(tmp_path / 'missing.csv'), '--k', '2']) == EXIT_ERROR
    assert main(['solve', line_file, '--k', '0']) == EXIT_ERROR


def test_generate_then_validate(tmp_path):
    out = str(tmp_path / 'gen' / 'inst.csv')
    assert main(['generate', '--kind', 'random-metric-matrix', '--n', '8', '--seed', '1', '--out', out]) == EXIT_OK
    assert main(['validate', out]) == EXIT_OK


def test_degenerate_ratio():
    instance = build_instance([[0.0], [0.0], [5.0]])
    report = solve(instance, RunDescriptor(algorithm='alg2', k=2, L=2))
    row = report.results[0]
    assert report.oracle_radius == 0.0
    assert row.degenerate
    assert row.ratio is None
    assert row.radius == 0.0


def test_determinism_hash_ignores_timings():
    instance = build_instance([[0.0], [1.0], [10.0], [11.0]])
    desc = RunDescriptor(algorithm='alg2', k=2, L=2, partition='seeded-random', seed=4)
    first, second = solve(instance, desc), solve(instance, desc)
    assert first.determinism_hash() == second.determinism_hash()
    assert 'timings' not in first.deterministic_dict()
    assert ExperimentReport.model_validate(first.model_dump()).determinism_hash() == first.determinism_hash()


def test_report_records_enforced_memory(tmp_path, line_file):
    out = str(tmp_path / 'auto.json')
    assert main(['solve', line_file, '--alg', 'alg2', '--k', '2', '--L', '2', '--out', out]) == EXIT_OK
    # largest part 2, broadcast room kL = 4, families Lk(k+1)/2 = 6
    assert _report(out)['memory'] == 12

    out = str(tmp_path / 'fixed.json')
    assert main(['solve', line_file, '--alg', 'alg2', '--k', '2', '--L', '2', '--memory', '20', '--out', out]) == EXIT_OK
    assert _report(out)['memory'] == 20
