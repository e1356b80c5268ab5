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
This module defines the background (q = 0) quantities shared by every data driven inversion.
"""

import numpy as np
from .discrete_operator import DiscreteOperator
from .grid import Grid
from .internal_solution_set import InternalSolutionSet
from .lanczos_factorization import LanczosFactorization
from .rom import Rom
from .source_set import SourceSet
from .spectral_set import SpectralSet
from .transfer_data import TransferData


class BackgroundKit:
    """Immutable bundle of background snapshots, ROM, factorization and basis.

    Attributes:
        operator (DiscreteOperator): background operator A_0.
        snapshots (numpy.ndarray): V_0, (node_count, mK), frequency major.
        data (TransferData): background transfer data F_0.
        rom (Rom): background ROM (M_0, S_0, B_0).
        factorization (LanczosFactorization): T_0, Q_0, beta_0.
        basis (numpy.ndarray): V_0 Q_0, orthonormal in the quadrature inner product.
        solutions (InternalSolutionSet): u_0 and, in REAL_WITH_DERIVATIVES mode, du_0/dlambda.
    """

    def __init__(self, sources: SourceSet, spectra: SpectralSet, operator: DiscreteOperator,
                 snapshots, data: TransferData, rom: Rom, factorization: LanczosFactorization,
                 solutions: InternalSolutionSet):
        snapshots = np.array(snapshots)
        basis = snapshots @ factorization.get_basis()
        snapshots.setflags(write=False)
        basis.setflags(write=False)
        self.__sources = sources
        self.__spectra = spectra
        self.__operator = operator
        self.__snapshots = snapshots
        self.__data = data
        self.__rom = rom
        self.__factorization = factorization
        self.__basis = basis
        self.__solutions = solutions

    def get_grid(self) -> Grid:
        """Get the inversion grid"""
        return self.__operator.get_grid()

    def get_sources(self) -> SourceSet:
        """Get the sources"""
        return self.__sources

    def get_spectra(self) -> SpectralSet:
        """Get the spectral set"""
        return self.__spectra

    def get_operator(self) -> DiscreteOperator:
        """Get A_0"""
        return self.__operator

    def get_snapshots(self) -> np.ndarray:
        """Get V_0"""
        return self.__snapshots

    def get_data(self) -> TransferData:
        """Get F_0"""
        return self.__data

    def get_rom(self) -> Rom:
        """Get the background ROM"""
        return self.__rom

    def get_factorization(self) -> LanczosFactorization:
        """Get T_0, Q_0 and beta_0"""
        return self.__factorization

    def get_basis(self) -> np.ndarray:
        """Get V_0 Q_0"""
        return self.__basis

    def get_solutions(self) -> InternalSolutionSet:
        """Get the background solutions u_0"""
        return self.__solutions
