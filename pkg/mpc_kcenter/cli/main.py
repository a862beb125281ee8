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

import argparse
import os
import sys
from typing import List, Optional

from mpc_kcenter.cli.compare import compare, summary_table, write_outputs
from mpc_kcenter.cli.generate import GENERATOR_KINDS, generate_file
from mpc_kcenter.cli.runner import ALGORITHMS, RunDescriptor, load_descriptor, load_instance, solve, update_descriptor
from mpc_kcenter.errors import KCenterError, TriangleViolation
from mpc_kcenter.log import logger
from mpc_kcenter.metric import load_points_csv
from mpc_kcenter.settings import DEFAULT_WORKSPACE
from mpc_kcenter.utils.utils import json_dumps_pretty, print_traceback, save_text_to_file

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INFEASIBLE = 2


def _add_run_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('instance', type=str, nargs='?', default=None, help='Points CSV or `matrix,n` file.')
    parser.add_argument('--descriptor', type=str, default=None, help='JSON/JSON5 run descriptor; flags override it.')
    parser.add_argument('--k', type=int, default=None, help='Number of centers.')
    parser.add_argument('--L', type=int, default=None, help='Number of simulated machines. Default: 1')
    parser.add_argument('--memory',
                        type=int,
                        default=None,
                        help='Points a machine may hold. Default: largest part + kL + Lk(k+1)/2')
    parser.add_argument('--partition',
                        type=str,
                        default=None,
                        choices=['round-robin', 'seeded-random', 'by-file'],
                        help='How points are spread over machines. Default: round-robin')
    parser.add_argument('--partition-file', type=str, default=None, help='Explicit point -> machine map (JSON).')
    parser.add_argument('--seed', type=int, default=None, help='Seed for the seeded-random partition.')
    parser.add_argument('--phi-seed', type=int, default=None, help='Seed for a random ordering phi. Default: identity')
    parser.add_argument('--compat-literal-alg1',
                        action='store_true',
                        default=None,
                        help='Use the capped, decrementing pruning sweep.')
    parser.add_argument('--compat-literal-select',
                        action='store_true',
                        default=None,
                        help='Select the most-centers qualifying cover per machine.')
    parser.add_argument('--executor', type=str, default=None, choices=['serial', 'thread'])
    parser.add_argument('--out', type=str, default=None, help='Write the JSON report here instead of stdout.')
    parser.add_argument('--csv', type=str, default=None, help='Also write a CSV summary here.')


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(prog='mpc-kcenter', description='Distributed metric k-center experiments.')
    subparsers = parser.add_subparsers(dest='command', required=True)

    gen = subparsers.add_parser('generate', help='Write a synthetic instance.')
    gen.add_argument('--kind', type=str, required=True, choices=GENERATOR_KINDS)
    gen.add_argument('--n', type=int, required=True)
    gen.add_argument('--dimension', type=int, default=2)
    gen.add_argument('--clusters', type=int, default=2)
    gen.add_argument('--spread', type=float, default=1.0, help='Side of the box around each cluster center.')
    gen.add_argument('--separation', type=float, default=10.0, help='Distance between cluster centers.')
    gen.add_argument('--max-weight', type=int, default=100, help='Largest random edge weight (matrix kind).')
    gen.add_argument('--seed', type=int, default=0)
    gen.add_argument('--out', type=str, default=os.path.join(DEFAULT_WORKSPACE, 'instance.csv'))

    solve_parser = subparsers.add_parser('solve', help='Run one algorithm and report it against the oracle.')
    _add_run_arguments(solve_parser)
    solve_parser.add_argument('--alg', type=str, default=None, choices=ALGORITHMS, help='Default: alg2')

    compare_parser = subparsers.add_parser('compare', help='Run every algorithm over several seeds.')
    _add_run_arguments(compare_parser)
    compare_parser.add_argument('--seeds', type=int, nargs='+', default=[0], help='Seeds for partition and phi.')

    validate = subparsers.add_parser('validate', help='Check that a file holds a valid metric.')
    validate.add_argument('instance', type=str)
    return parser.parse_args(argv)


def _descriptor(args: argparse.Namespace) -> RunDescriptor:
    overrides = {
        'instance': args.instance,
        'k': args.k,
        'L': args.L,
        'memory': args.memory,
        'partition': args.partition,
        'partition_file': args.partition_file,
        'seed': args.seed,
        'phi_seed': args.phi_seed,
        'compat_literal_alg1': args.compat_literal_alg1,
        'compat_literal_select': args.compat_literal_select,
        'executor': args.executor,
        'out': args.out,
        'csv': args.csv,
        'algorithm': getattr(args, 'alg', None),
    }
    if args.descriptor:
        return update_descriptor(load_descriptor(args.descriptor), **overrides)
    return RunDescriptor.model_validate({key: value for key, value in overrides.items() if value is not None})


def _emit(text: str, out: Optional[str]) -> None:
    if not out:
        print(text)
        return
    dirname = os.path.dirname(out)
    if dirname:
        os.makedirs(dirname, exist_ok=True)
    save_text_to_file(out, text)
    logger.info(f'Report written to {out}.')


def run_generate(args: argparse.Namespace) -> int:
    generate_file(args.kind,
                  args.out,
                  seed=args.seed,
                  n=args.n,
                  dimension=args.dimension,
                  clusters=args.clusters,
                  spread=args.spread,
                  separation=args.separation,
                  max_weight=args.max_weight)
    return EXIT_OK


def run_solve(args: argparse.Namespace) -> int:
    desc = _descriptor(args)
    report = solve(load_instance(desc), desc)
    _emit(json_dumps_pretty(report.to_json_dict()), desc.out)
    if desc.csv:
        import pandas as pd
        pd.DataFrame([r.model_dump() for r in report.results]).to_csv(desc.csv, index=False)
    for row in report.results:
        for warning in row.warnings:
            logger.warning(warning)
    return EXIT_OK if report.feasible else EXIT_INFEASIBLE


def run_compare(args: argparse.Namespace) -> int:
    desc = _descriptor(args)
    summary = compare(load_instance(desc), desc, args.seeds)
    logger.info('\n' + summary_table(summary))
    if desc.out:
        write_outputs(summary, out=desc.out, csv=desc.csv)
    else:
        print(json_dumps_pretty(summary))
        write_outputs(summary, csv=desc.csv)
    return EXIT_OK if summary.ok else EXIT_ERROR


def run_validate(args: argparse.Namespace) -> int:
    try:
        instance = load_points_csv(args.instance)
    except TriangleViolation as ex:
        logger.error(f'{args.instance}: triangle inequality fails on {ex.triple}.')
        return EXIT_ERROR
    print(json_dumps_pretty(instance.summary()))
    return EXIT_OK


COMMANDS = {'generate': run_generate, 'solve': run_solve, 'compare': run_compare, 'validate': run_validate}


def main(argv: Optional[List[str]] = None) -> int:
    args = parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (KCenterError, ValueError, OSError):
        print_traceback()
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
