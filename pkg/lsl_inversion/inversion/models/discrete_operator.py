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
This module defines the finite difference operator A_q = -Laplace + q with Neumann closure.
"""

from threading import Lock
import numpy as np
import scipy.sparse as sp
from .grid import Grid
from .grid_function import GridFunction


class DiscreteOperator:
    """Discrete Schroedinger operator.

    The operator is kept in the symmetric weighted form ``K_q = W A_q`` where
    ``W = diag(w)`` holds the quadrature weights. ``K_q`` is exactly symmetric and
    ``A_q = W^{-1} K_q`` is self adjoint in the quadrature inner product.

    Shifted factorizations are cached per spectral point; the cache is only
    written under a lock and entries are never modified afterwards.
    """

    def __init__(self, grid: Grid, potential: GridFunction, stiffness: sp.spmatrix):
        self.__grid = grid
        self.__potential = potential
        self.__stiffness = sp.csc_matrix(stiffness)
        self.__weights = grid.get_weights()
        self.__factors = dict()
        self.__lock = Lock()

    def get_grid(self) -> Grid:
        """Get the grid"""
        return self.__grid

    def get_potential(self) -> GridFunction:
        """Get the potential q"""
        return self.__potential

    def get_stiffness(self) -> sp.csc_matrix:
        """Get the symmetric weighted form K_q = W A_q"""
        return self.__stiffness

    def get_weights(self) -> np.ndarray:
        """Get the quadrature weights"""
        return self.__weights

    def get_mass(self) -> sp.dia_matrix:
        """Get W = diag(w)"""
        return sp.diags(self.__weights)

    def get_matrix(self) -> sp.csr_matrix:
        """Get A_q = W^{-1} K_q"""
        return sp.csr_matrix(sp.diags(1.0 / self.__weights) @ self.__stiffness)

    def size(self) -> int:
        """Number of unknowns"""
        return self.__grid.node_count()

    def apply(self, values) -> np.ndarray:
        """Apply A_q to a nodal vector or to the columns of a nodal block"""
        values = np.asarray(values)
        product = self.__stiffness @ values
        if values.ndim == 1:
            return product / self.__weights
        return product / self.__weights[:, None]

    def cached_factor(self, shift: complex):
        """Get the cached factorization of K_q + shift W, if any"""
        return self.__factors.get(complex(shift))

    def store_factor(self, shift: complex, factor):
        """Cache the factorization of K_q + shift W"""
        with self.__lock:
            self.__factors.setdefault(complex(shift), factor)
            return self.__factors[complex(shift)]

    def clear_factors(self):
        """Drop every cached factorization"""
        with self.__lock:
            self.__factors = dict()
