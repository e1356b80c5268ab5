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
This module defines a set of internal solutions u^(p)(x, lambda_j).
"""

from typing import Optional
import numpy as np
from ..internal.common import config_messages
from ..internal.common.config_errors import ConfigError, GridMismatchError
from .grid import Grid
from .method_type import Provenance
from .spectral_set import SpectralSet


class InternalSolutionSet:
    """
    Attributes:
        grid (Grid): grid of the solutions.
        spectra (SpectralSet): spectral points lambda_j.
        values (numpy.ndarray): (m, node_count, K) array, values[j][:, p] = u^(p)(., lambda_j).
        derivatives (numpy.ndarray): same layout for d/dlambda, or None.
        provenance (Provenance): DATA_DRIVEN, CHEATED or BORN.
    """

    def __init__(self, grid: Grid, spectra: SpectralSet, values, provenance: Provenance,
                 derivatives=None):
        values = np.array(values)
        if values.ndim != 3 or values.shape[0] != spectra.count():
            raise ConfigError(config_messages.SPECTRAL_MISMATCH_ERROR)
        if values.shape[1] != grid.node_count():
            raise GridMismatchError(config_messages.GRID_FUNCTION_SIZE_ERROR)
        values.setflags(write=False)
        if derivatives is not None:
            derivatives = np.array(derivatives)
            if derivatives.shape != values.shape:
                raise ConfigError(config_messages.SPECTRAL_MISMATCH_ERROR)
            derivatives.setflags(write=False)
        self.__grid = grid
        self.__spectra = spectra
        self.__values = values
        self.__derivatives = derivatives
        self.__provenance = Provenance(provenance)

    def get_grid(self) -> Grid:
        """Get the grid"""
        return self.__grid

    def get_spectra(self) -> SpectralSet:
        """Get the spectral set"""
        return self.__spectra

    def get_provenance(self) -> Provenance:
        """Get the provenance flag"""
        return self.__provenance

    def get_values(self, index: Optional[int] = None) -> np.ndarray:
        """All values, or the (node_count, K) block of spectral point ``index``"""
        if index is None:
            return self.__values
        return self.__values[index]

    def get_derivatives(self, index: Optional[int] = None) -> Optional[np.ndarray]:
        """All lambda derivatives, or the block of spectral point ``index``"""
        if self.__derivatives is None or index is None:
            return self.__derivatives
        return self.__derivatives[index]

    def has_derivatives(self) -> bool:
        """True when lambda derivatives are stored"""
        return self.__derivatives is not None

    def source_count(self) -> int:
        """Number of sources K"""
        return self.__values.shape[2]
