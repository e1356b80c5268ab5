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
This module defines the real linear system W q = dF of the Lippmann-Schwinger-Lanczos method.
"""

from typing import List, NamedTuple
import numpy as np
from ..internal.common import config_messages
from ..internal.common.config_errors import ConfigError
from .grid import Grid


class RowInfo(NamedTuple):
    """Origin of one row: spectral index, source pair and kind"""
    index: int
    receiver: int
    emitter: int
    kind: str


class LslSystem:
    """
    Row kinds are ``re``/``im`` in COMPLEX mode and ``value``/``derivative`` in
    REAL_WITH_DERIVATIVES mode. Only source pairs ``receiver <= emitter`` appear.
    """

    def __init__(self, grid: Grid, matrix, rhs, metadata: List[RowInfo]):
        matrix = np.array(matrix, dtype=float)
        rhs = np.array(rhs, dtype=float)
        if matrix.ndim != 2 or matrix.shape[1] != grid.node_count() \
                or rhs.shape != (matrix.shape[0],) or len(metadata) != matrix.shape[0]:
            raise ConfigError(config_messages.TRANSFER_SHAPE_ERROR)
        if not np.all(np.isfinite(rhs)) or not np.all(np.isfinite(matrix)):
            raise ConfigError(config_messages.NON_FINITE_ERROR + 'LSL system')
        matrix.setflags(write=False)
        rhs.setflags(write=False)
        self.__grid = grid
        self.__matrix = matrix
        self.__rhs = rhs
        self.__metadata = list(metadata)

    def get_grid(self) -> Grid:
        """Get the grid of the unknown"""
        return self.__grid

    def get_matrix(self) -> np.ndarray:
        """Get W_real"""
        return self.__matrix

    def get_rhs(self) -> np.ndarray:
        """Get dF"""
        return self.__rhs

    def get_metadata(self) -> List[RowInfo]:
        """Get the row descriptions"""
        return list(self.__metadata)

    def row_count(self) -> int:
        """Number of equations"""
        return self.__matrix.shape[0]
