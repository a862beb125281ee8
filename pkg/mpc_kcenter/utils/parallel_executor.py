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

from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Any, Callable, Hashable, List, Optional, Sequence, Tuple


def parallel_exec(
    fn: Callable,
    list_of_kwargs: List[dict],
    max_workers: Optional[int] = None,
) -> list:
    """
    Executes a given function `fn` in parallel, using multiple threads, on a list of keyword-argument dicts.

    Args:
    - fn (Callable): The function to execute in parallel.
    - list_of_kwargs (list): A list of dicts, where each dict contains arguments for a single call to `fn`.
    - max_workers (int, optional): The maximum number of threads that can be used to execute the tasks
      concurrently.

    Returns:
    - A list containing the results of the function calls. The order of the results corresponds to the order
      the tasks were completed, which may not necessarily be the same as the order of `list_of_kwargs`.
      Callers that need a stable order must tag their results and sort them (see `keyed_exec`).

    """
    results = []
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        futures = []
        for kwargs in list_of_kwargs:
            futures.append(executor.submit(fn, **kwargs))
        for future in as_completed(futures):
            results.append(future.result())
    return results


# for debug
def serial_exec(fn: Callable, list_of_kwargs: List[dict]) -> List[Any]:
    results = []
    for kwargs in list_of_kwargs:
        result = fn(**kwargs)
        results.append(result)
    return results


def keyed_exec(
    fn: Callable,
    keyed_kwargs: Sequence[Tuple[Hashable, dict]],
    executor: str = 'serial',
    max_workers: Optional[int] = None,
) -> List[Tuple[Hashable, Any]]:
    """Runs `fn` once per (key, kwargs) pair and returns (key, result) pairs sorted by key.

    The returned order never depends on the order in which the calls were evaluated or completed.
    """

    def _tagged(key, kwargs):
        return key, fn(**kwargs)

    tasks = [{'key': key, 'kwargs': kwargs} for key, kwargs in keyed_kwargs]
    if executor == 'thread':
        results = parallel_exec(_tagged, tasks, max_workers=max_workers)
    elif executor == 'serial':
        results = serial_exec(_tagged, tasks)
    else:
        raise ValueError(f'Unknown executor `{executor}`, expected one of "serial", "thread".')
    return sorted(results, key=lambda x: x[0])
