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

import re

from setuptools import find_packages, setup


def get_version() -> str:
    with open('mpc_kcenter/__init__.py', encoding='utf-8') as f:
        version = re.search(
            r'^__version__\s*=\s*[\'"]([^\'"]*)[\'"]',
            f.read(),
            re.MULTILINE,
        ).group(1)
    return version


def read_description() -> str:
    with open('README.md', 'r', encoding='UTF-8') as f:
        long_description = f.read()
    return long_description


setup(
    name='mpc-kcenter',
    version=get_version(),
    author='The mpc-kcenter Authors',
    description='Distributed metric k-center: a constant-round 2-approximation on a simulated MPC cluster.',
    long_description=read_description(),
    long_description_content_type='text/markdown',
    keywords=['k-center', 'clustering', 'MPC', 'coreset', 'approximation'],
    packages=find_packages(exclude=['examples', 'examples.*', 'tests', 'tests.*']),

    # Minimal dependencies for the library:
    install_requires=[
        'json5',
        'jsonlines',
        'jsonschema',
        'numpy',
        'pandas',
        'pydantic>=2.3.0',
        'scipy',
    ],
    extras_require={
        # Extra dependencies for the command line:
        'cli': [
            'prettytable',
            'tqdm',
        ],

        # Extra dependencies for the test suite:
        'test': [
            'hypothesis',
            'pytest',
        ],
    },
    entry_points={
        'console_scripts': ['mpc-kcenter=mpc_kcenter.cli.main:main'],
    },
)
