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
from abc import ABC, abstractmethod
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, model_validator

from mpc_kcenter.errors import UnknownSolver
from mpc_kcenter.log import logger
from mpc_kcenter.metric import MetricInstance, Ordering, PointId
from mpc_kcenter.utils.utils import json_loads

SOLVER_REGISTRY = {}


def register_solver(name, allow_overwrite=False):

    def decorator(cls):
        if name in SOLVER_REGISTRY:
            if allow_overwrite:
                logger.warning(f'Solver `{name}` already exists! Overwriting with class {cls}.')
            else:
                raise ValueError(f'Solver `{name}` already exists! Please ensure that the solver name is unique.')
        if cls.name and (cls.name != name):
            raise ValueError(f'{cls.__name__}.name="{cls.name}" conflicts with @register_solver(name="{name}").')
        cls.name = name
        SOLVER_REGISTRY[name] = cls

        return cls

    return decorator


def get_solver(name: str, cfg: Optional[dict] = None) -> 'BaseSolver':
    if name not in SOLVER_REGISTRY:
        raise UnknownSolver(message=f'Solver `{name}` is not registered. Known: {sorted(SOLVER_REGISTRY)}.')
    return SOLVER_REGISTRY[name](cfg)


class Solution(BaseModel):
    """At most k centers plus a radius at which they center-cover the input."""
    algorithm: str
    k: int
    centers: List[PointId]
    radius: float
    machine: Optional[int] = None

    @model_validator(mode='after')
    def check_size(self):
        if len(self.centers) > self.k:
            raise ValueError(f'{self.algorithm} returned {len(self.centers)} centers for k={self.k}.')
        if len(set(self.centers)) != len(self.centers):
            raise ValueError(f'{self.algorithm} returned duplicate centers {self.centers}.')
        if self.radius < 0:
            raise ValueError('Radius must be non-negative.')
        return self


K_SCHEMA = {'type': 'integer', 'minimum': 1, 'description': 'Number of centers'}


class BaseSolver(ABC):
    """A named k-center algorithm with a JSON-schema description of its parameters."""
    name: str = ''
    description: str = ''
    parameters: dict = {'type': 'object', 'properties': {'k': K_SCHEMA}, 'required': ['k']}

    def __init__(self, cfg: Optional[Dict] = None):
        self.cfg = cfg or {}
        if not self.name:
            raise ValueError(
                f'You must set {self.__class__.__name__}.name, either by @register_solver(name=...) or explicitly setting {self.__class__.__name__}.name'
            )

    @abstractmethod
    def call(self, params: Union[str, dict], instance: MetricInstance, phi: Optional[Ordering] = None,
             **kwargs) -> Solution:
        """Run the algorithm.

        Args:
            params: The JSON (or dict) parameters, validated against `parameters`.
            instance: The metric instance to cluster.
            phi: The global ordering; identity when omitted.

        Returns:
            The solution.
        """
        raise NotImplementedError

    def _verify_json_format_args(self, params: Union[str, dict]) -> dict:
        if isinstance(params, str):
            try:
                params_json: dict = json_loads(params)
            except json.decoder.JSONDecodeError:
                raise ValueError('Parameters must be formatted as a valid JSON!')
        else:
            params_json: dict = dict(params)
        import jsonschema
        try:
            jsonschema.validate(instance=params_json, schema=self.parameters)
        except jsonschema.exceptions.ValidationError as ex:
            raise ValueError(f'Invalid parameters for solver `{self.name}`: {ex.message}')
        return params_json

    @property
    def function(self) -> dict:
        return {'name': self.name, 'description': self.description, 'parameters': self.parameters}
