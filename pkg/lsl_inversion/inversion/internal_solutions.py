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
Data driven internal solutions u(x, lambda) = V_0 Q_0 (T + lambda I)^{-1} E_1 beta.
"""

from typing import Optional
import numpy as np
from .forward import ForwardModel
from .internal.common import config_constants, config_messages
from .internal.common.config_errors import ConfigError, GridMismatchError
from .internal.utils.logger import Logger
from .lanczos import LanczosProcess
from .models import (BackgroundKit, Grid, GridFunction, InternalSolutionSet, LanczosFactorization,
                     Provenance, SourceSet, SpectralSet, TransferData)
from .romgen import RomGenerator


class InternalSolutions:
    """Background kit and internal solution synthesis"""

    @classmethod
    def build_background(cls, grid: Grid, sources: SourceSet, spectra: SpectralSet,
                         mass_ratio: float = config_constants.MASS_EIGENVALUE_RATIO,
                         workers: Optional[int] = None) -> BackgroundKit:
        """Build the q = 0 snapshots, ROM, factorization and orthonormal basis

        Args:
            grid: inversion grid.
            sources: sources on ``grid``.
            spectra: spectral points of the data.
            mass_ratio: mass conditioning bound passed to the ROM construction.
            workers: threads used for distinct spectral points.
        Returns:
            The immutable BackgroundKit.
        """
        if sources.get_grid() != grid:
            raise GridMismatchError(config_messages.GRID_MISMATCH_ERROR)
        operator = ForwardModel.background_operator(grid)
        snapshots = ForwardModel.snapshots(operator, sources, spectra, workers)
        data = ForwardModel.simulate(operator, sources, spectra, workers)
        rom = RomGenerator.build_rom(data, mass_ratio)
        factorization = LanczosProcess.factorize(rom)
        values = cls.__split(snapshots, spectra.count())
        derivatives = None
        if spectra.is_real():
            derivatives = np.stack([-ForwardModel.solve_block(operator, point, values[j])
                                    for j, point in enumerate(spectra.get_points())])
        solutions = InternalSolutionSet(grid, spectra, values, Provenance.BORN, derivatives)
        Logger.debug('Built the background kit on {0}'.format(grid))
        return BackgroundKit(sources, spectra, operator, snapshots, data, rom, factorization, solutions)

    @classmethod
    def __split(cls, snapshots: np.ndarray, count: int) -> np.ndarray:
        nodes = snapshots.shape[0]
        return snapshots.reshape(nodes, count, -1).transpose(1, 0, 2)

    @classmethod
    def factorize_data(cls, data: TransferData,
                       mass_ratio: float = config_constants.MASS_EIGENVALUE_RATIO) -> LanczosFactorization:
        """ROM and Lanczos factorization of measured data"""
        return LanczosProcess.factorize(RomGenerator.build_rom(data, mass_ratio))

    @classmethod
    def __check_size(cls, kit: BackgroundKit, factorization: LanczosFactorization):
        if factorization.size() != kit.get_basis().shape[1]:
            raise ConfigError(config_messages.FACTORIZATION_SIZE_ERROR)

    @classmethod
    def data_driven_internal(cls, kit: BackgroundKit, factorization: LanczosFactorization,
                             shift: complex) -> np.ndarray:
        """Synthesize u^(p)(., lambda) for every source from data only

        Args:
            kit: background kit.
            factorization: T and beta of the measured data.
            shift: spectral point lambda.
        Returns:
            (node_count, K) block V_0 Q_0 (T + lambda I)^{-1} E_1 beta.
        """
        cls.__check_size(kit, factorization)
        return kit.get_basis() @ LanczosProcess.resolvent_columns(factorization, shift)

    @classmethod
    def internal_derivative(cls, kit: BackgroundKit, factorization: LanczosFactorization,
                            shift: float) -> np.ndarray:
        """d/dlambda of the data driven solutions, -V_0 Q_0 (T + lambda I)^{-2} E_1 beta"""
        if np.imag(shift) != 0:
            raise ConfigError(config_messages.SPECTRAL_REAL_MODE_ERROR)
        cls.__check_size(kit, factorization)
        return -kit.get_basis() @ LanczosProcess.resolvent_columns(factorization, float(np.real(shift)), power=2)

    @classmethod
    def data_driven_set(cls, kit: BackgroundKit, factorization: LanczosFactorization,
                        spectra: Optional[SpectralSet] = None) -> InternalSolutionSet:
        """Data driven solutions at every point of ``spectra`` (the kit points by default)"""
        spectra = spectra or kit.get_spectra()
        values = np.stack([cls.data_driven_internal(kit, factorization, point)
                           for point in spectra.get_points()])
        derivatives = None
        if spectra.is_real():
            derivatives = np.stack([cls.internal_derivative(kit, factorization, point)
                                    for point in spectra.get_points()])
        return InternalSolutionSet(kit.get_grid(), spectra, values, Provenance.DATA_DRIVEN, derivatives)

    @classmethod
    def background_set(cls, kit: BackgroundKit) -> InternalSolutionSet:
        """u_0 and du_0/dlambda from exact background solves"""
        return kit.get_solutions()

    @classmethod
    def cheated_internal(cls, grid: Grid, potential: GridFunction, sources: SourceSet,
                         spectra: SpectralSet) -> InternalSolutionSet:
        """Exact forward solves with the true potential, for baselines and tests only"""
        operator = ForwardModel.build_operator(grid, potential)
        blocks = [ForwardModel.solve_block(operator, point, sources.get_columns())
                  for point in spectra.get_points()]
        values = np.stack(blocks)
        derivatives = None
        if spectra.is_real():
            derivatives = np.stack([-ForwardModel.solve_block(operator, point, values[j])
                                    for j, point in enumerate(spectra.get_points())])
        return InternalSolutionSet(grid, spectra, values, Provenance.CHEATED, derivatives)
