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
This module defines the set of real sources g^(r) localized near the accessible boundary.
"""

from typing import Optional
import numpy as np
from ..internal.common import config_messages
from ..internal.common.config_errors import ConfigError, GridMismatchError
from .grid import Grid


class SourceSet:
    """
    Attributes:
        grid (Grid): grid of the sources.
        columns (numpy.ndarray): (node_count, K) real array, one source per column.
        positions (numpy.ndarray): (K, dim) declared source positions.
        width (float): Gaussian width, 0 for single node indicators.
    """

    def __init__(self, grid: Grid, columns, positions, width: float = 0.0,
                 boundary: Optional[str] = None):
        columns = np.array(columns, dtype=float)
        if columns.ndim == 1:
            columns = columns[:, None]
        if columns.shape[0] != grid.node_count():
            raise GridMismatchError(config_messages.GRID_FUNCTION_SIZE_ERROR)
        if columns.shape[1] < 1:
            raise ConfigError(config_messages.SOURCE_EMPTY_ERROR)
        positions = np.array(positions, dtype=float).reshape(columns.shape[1], grid.get_dim())
        columns.setflags(write=False)
        self.__grid = grid
        self.__columns = columns
        self.__positions = positions
        self.__width = float(width)
        self.__boundary = boundary

    def get_grid(self) -> Grid:
        """Get the grid"""
        return self.__grid

    def get_columns(self) -> np.ndarray:
        """Get the (node_count, K) source block G"""
        return self.__columns

    def get_positions(self) -> np.ndarray:
        """Get the declared positions"""
        return self.__positions.copy()

    def get_width(self) -> float:
        """Get the source width"""
        return self.__width

    def get_boundary(self) -> Optional[str]:
        """Get the name of the boundary segment the sources sit on"""
        return self.__boundary

    def count(self) -> int:
        """Number of sources K"""
        return self.__columns.shape[1]
