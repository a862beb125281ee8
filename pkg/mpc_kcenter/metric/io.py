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
from typing import Optional

import numpy as np

from mpc_kcenter.errors import DimensionMismatch, InvalidParams
from mpc_kcenter.log import logger
from mpc_kcenter.metric.instance import MetricInstance, ValidationPolicy, build_instance

MATRIX_HEADER = 'matrix'


def load_points_csv(path: str, policy: Optional[ValidationPolicy] = None) -> MetricInstance:
    """Read a points file.

    Two layouts are accepted: one coordinate row `x1,...,xd` per point (optionally prefixed by a
    non-numeric label column), or a header line `matrix,n` followed by n rows of an explicit distance
    matrix. Row i gets point id i, which is also its default rank i+1.
    """
    import pandas as pd
    if not os.path.exists(path):
        raise FileNotFoundError(path)
    with open(path, 'r', encoding='utf-8') as f:
        first_line = f.readline().strip()

    try:
        if first_line.split(',')[0].strip().lower() == MATRIX_HEADER:
            n = int(first_line.split(',')[1])
            df = pd.read_csv(path, header=None, skiprows=1, skipinitialspace=True, comment='#')
            if df.shape != (n, n):
                raise DimensionMismatch(message=f'Header declares a {n}x{n} matrix, file holds {df.shape}.')
            logger.info(f'Read {n}x{n} distance matrix from {path}.')
            return build_instance(df.to_numpy(dtype=float), kind='matrix', policy=policy)

        df = pd.read_csv(path, header=None, skipinitialspace=True, comment='#')
    except pd.errors.ParserError as ex:
        raise DimensionMismatch(ex)
    except (IndexError, ValueError) as ex:
        raise InvalidParams(ex)

    labels = None
    if df.shape[1] > 1 and not pd.api.types.is_numeric_dtype(df.iloc[:, 0]):
        labels = df.iloc[:, 0].astype(str).tolist()
        df = df.iloc[:, 1:]
    if df.isna().to_numpy().any():
        raise DimensionMismatch(message=f'{path}: coordinate rows have different lengths.')
    try:
        coords = df.to_numpy(dtype=float)
    except ValueError as ex:
        raise InvalidParams(ex)
    logger.info(f'Read {coords.shape[0]} points of dimension {coords.shape[1]} from {path}.')
    return build_instance(coords, kind='euclidean', labels=labels, policy=policy)


def save_points_csv(instance: MetricInstance, path: str) -> None:
    import pandas as pd
    dirname = os.path.dirname(path)
    if dirname:
        os.makedirs(dirname, exist_ok=True)
    if instance.kind == 'matrix':
        with open(path, 'w', encoding='utf-8') as f:
            f.write(f'{MATRIX_HEADER},{instance.n}\n')
            pd.DataFrame(np.asarray(instance.dist)).to_csv(f, header=False, index=False)
        return
    df = pd.DataFrame(np.asarray(instance.coordinates))
    if instance.labels is not None:
        df.insert(0, 'label', instance.labels)
    df.to_csv(path, header=False, index=False)
