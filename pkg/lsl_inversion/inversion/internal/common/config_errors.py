# Copyright 2021 The lsl-inversion Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
This file defines the exceptions raised by the library.
"""


class LslError(Exception):
    """Base class of every error raised by lsl_inversion"""


class ConfigError(LslError):
    """Invalid experiment configuration or invalid user input"""


class GridMismatchError(ConfigError):
    """Objects defined on different grids or with different sizes"""


class NumericalError(LslError):
    """Base class of the numerical failures"""


class NearSingularShift(NumericalError):
    """The shifted system A + lambda I is too close to singular"""

    def __init__(self, message: str, shift: complex = None, residual: float = None):
        super().__init__(message)
        self.shift = shift
        self.residual = residual


class IllConditionedMass(NumericalError):
    """The data driven mass matrix is numerically singular"""

    def __init__(self, message: str, eigenvalues=None):
        super().__init__(message)
        self.eigenvalues = eigenvalues


class SingularPencil(NumericalError):
    """S + lambda M or T + lambda I cannot be inverted"""


class Breakdown(NumericalError):
    """Lanczos reached an invariant subspace.

    The partial factorization is attached as ``factorization``.
    """

    def __init__(self, message: str, step: int, factorization=None):
        super().__init__(message)
        self.step = step
        self.factorization = factorization


class RankDeficientBlock(NumericalError):
    """Block Lanczos residual block lost rank (deflation is not implemented)"""

    def __init__(self, message: str, step: int):
        super().__init__(message)
        self.step = step


class AllTruncated(NumericalError):
    """No singular value survived the truncation policy"""


class PipelineError(LslError):
    """A module error annotated with the pipeline stage that raised it"""

    def __init__(self, stage: str, cause: Exception):
        super().__init__('[{0}] {1}'.format(stage, cause))
        self.stage = stage
        self.cause = cause


class ExportError(ConfigError):
    """An artifact could not be written or read back"""
