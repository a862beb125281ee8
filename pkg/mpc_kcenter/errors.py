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


class KCenterError(Exception):
    code: str = 'KCenterError'

    def __init__(self,
                 exception: Optional[Exception] = None,
                 code: Optional[str] = None,
                 message: Optional[str] = None,
                 extra: Optional[dict] = None):
        code = code or self.code
        if exception is not None:
            super().__init__(exception)
        else:
            super().__init__(f'\nError code: {code}. Error message: {message}')
        self.exception = exception
        self.code = code
        self.message = message
        self.extra = extra or {}


class AsymmetricMatrix(KCenterError):
    code = 'AsymmetricMatrix'


class NegativeDistance(KCenterError):
    code = 'NegativeDistance'


class TriangleViolation(KCenterError):
    code = 'TriangleViolation'

    @property
    def triple(self):
        return self.extra.get('triple')


class DimensionMismatch(KCenterError):
    code = 'DimensionMismatch'


class UnknownPointId(KCenterError):
    code = 'UnknownPointId'


class KTooLarge(KCenterError):
    code = 'KTooLarge'


class InstanceTooLarge(KCenterError):
    code = 'InstanceTooLarge'


class MemoryExceeded(KCenterError):
    code = 'MemoryExceeded'


class RoundLimitExceeded(KCenterError):
    code = 'RoundLimitExceeded'


class InvalidParams(KCenterError):
    code = 'InvalidParams'


class UnknownSolver(KCenterError):
    code = 'UnknownSolver'
