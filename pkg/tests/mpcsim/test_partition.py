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

from mpc_kcenter.errors import InvalidParams
from mpc_kcenter.mpcsim import from_file, make_partition, part_sizes, round_robin, seeded_random


def test_round_robin():
    assert part_sizes(round_robin(12, 3), 3) == [4, 4, 4]
    assert round_robin(4, 2) == {0: 1, 1: 2, 2: 1, 3: 2}


def test_seeded_random_is_deterministic():
    assert seeded_random(20, 3, seed=5) == seeded_random(20, 3, seed=5)
    assert sorted(seeded_random(20, 3, seed=5)) == list(range(20))


def test_seeded_random_is_balanced():
    assert sorted(part_sizes(seeded_random(10, 3, seed=1), 3)) == [3, 3, 4]


@pytest.mark.parametrize('content,expected', [
    ([1, 2, 2], {0: 1, 1: 2, 2: 2}),
    ({'0': 2, '1': 1}, {0: 2, 1: 1}),
])
def test_from_file(tmp_path, content, expected):
    path = tmp_path / 'partition.json'
    path.write_text(json.dumps(content))
    assert from_file(str(path)) == expected
    assert make_partition('by-file', len(expected), 2, path=str(path)) == expected


def test_unknown_strategy():
    with pytest.raises(InvalidParams):
        make_partition('striped', 4, 2)
    with pytest.raises(InvalidParams):
        make_partition('by-file', 4, 2)
