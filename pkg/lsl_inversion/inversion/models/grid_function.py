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
This module defines a nodal function living on a Grid.
"""

import numpy as np
from ..internal.common import config_messages
from ..internal.common.config_errors import GridMismatchError
from .grid import Grid


class GridFunction:
    """Nodal values on a grid, flattened with axis 0 fastest.

    Attributes:
        grid (Grid): owning grid.
        values (numpy.ndarray): one value per node, real or complex.
    """

    def __init__(self, grid: Grid, values):
        values = np.array(values)
        if values.ndim != 1 or values.size != grid.node_count():
            raise GridMismatchError(config_messages.GRID_FUNCTION_SIZE_ERROR)
        values.setflags(write=False)
        self.__grid = grid
        self.__values = values

    def get_grid(self) -> Grid:
        """Get the owning grid"""
        return self.__grid

    def get_values(self) -> np.ndarray:
        """Get the (read only) nodal values"""
        return self.__values

    def is_real(self) -> bool:
        """Check whether the stored values have a real dtype"""
        return not np.iscomplexobj(self.__values)

    def norm(self) -> float:
        """Weighted L2 norm"""
        return self.__grid.norm(self.__values)

    def inner(self, other: 'GridFunction') -> complex:
        """Quadrature inner product <self, other>"""
        if other.get_grid() != self.__grid:
            raise GridMismatchError(config_messages.GRID_MISMATCH_ERROR)
        return self.__grid.inner(self.__values, other.get_values())

    def to_array(self) -> np.ndarray:
        """Values reshaped to the grid node layout"""
        return self.__grid.to_array(self.__values)

    @classmethod
    def zeros(cls, grid: Grid) -> 'GridFunction':
        """Real zero function"""
        return cls(grid, np.zeros(grid.node_count()))
