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
Data driven reduced order model (S + lambda M) c = B built from transfer function samples only.
"""

import numpy as np
import scipy.linalg as la
from .internal.common import config_constants, config_messages
from .internal.common.config_errors import ConfigError, IllConditionedMass, SingularPencil
from .internal.utils.logger import Logger
from .models import Rom, SpectralMode, TransferData


class RomGenerator:
    """Builds the Loewner type mass and stiffness matrices of the ROM.

    Blocks are ordered frequency major, block ``i`` collecting the K sources at
    ``lambda_i``, which is the column ordering of ``ForwardModel.snapshots``.
    """

    @classmethod
    def build_rom(cls, data: TransferData,
                  mass_ratio: float = config_constants.MASS_EIGENVALUE_RATIO) -> Rom:
        """Build the ROM with the construction matching the spectral mode of ``data``"""
        if data.get_mode() is SpectralMode.COMPLEX:
            return cls.build_rom_complex(data, mass_ratio)
        return cls.build_rom_real(data, mass_ratio)

    @classmethod
    def build_rom_complex(cls, data: TransferData,
                          mass_ratio: float = config_constants.MASS_EIGENVALUE_RATIO) -> Rom:
        """Build the ROM from samples at complex points

        Args:
            data: COMPLEX mode transfer data.
            mass_ratio: smallest admissible ratio of the extreme eigenvalues of M.
        Returns:
            Rom with M_ij = (conj F_i - F_j) / (lambda_j - conj lambda_i),
            S_ij = (lambda_j F_j - conj(lambda_i F_i)) / (lambda_j - conj lambda_i), B_i = conj F_i.
        Raises:
            IllConditionedMass: M is numerically singular.
        """
        if data.get_mode() is not SpectralMode.COMPLEX:
            raise ConfigError(config_messages.SPECTRAL_MODE_MISMATCH_ERROR + data.get_mode().value)
        points = data.get_spectra().get_points()
        values = data.get_values()
        count, size = values.shape[0], values.shape[1]
        mass = np.zeros((count * size, count * size), dtype=complex)
        stiffness = np.zeros_like(mass)
        for i in range(count):
            rows = slice(i * size, (i + 1) * size)
            conj_point = np.conj(points[i])
            conj_value = np.conj(values[i])
            for j in range(count):
                columns = slice(j * size, (j + 1) * size)
                denominator = points[j] - conj_point
                mass[rows, columns] = (conj_value - values[j]) / denominator
                stiffness[rows, columns] = (points[j] * values[j] - conj_point * conj_value) / denominator
        moments = np.conj(values).reshape(count * size, size)
        mass = cls.__hermitize(mass, 'M')
        stiffness = cls.__hermitize(stiffness, 'S')
        cls.__check_mass(mass, mass_ratio)
        return Rom(mass, stiffness, moments, data.get_spectra())

    @classmethod
    def build_rom_real(cls, data: TransferData,
                       mass_ratio: float = config_constants.MASS_EIGENVALUE_RATIO) -> Rom:
        """Build the ROM from values and derivatives at real points

        Diagonal blocks are the limits of the off diagonal ones:
        M_ii = -dF(lambda_i) and S_ii = F(lambda_i) + lambda_i dF(lambda_i).
        """
        if data.get_mode() is not SpectralMode.REAL_WITH_DERIVATIVES:
            raise ConfigError(config_messages.SPECTRAL_MODE_MISMATCH_ERROR + data.get_mode().value)
        points = data.get_spectra().get_points()
        values = data.get_values()
        derivatives = data.get_derivatives()
        count, size = values.shape[0], values.shape[1]
        mass = np.zeros((count * size, count * size))
        stiffness = np.zeros_like(mass)
        for i in range(count):
            rows = slice(i * size, (i + 1) * size)
            for j in range(count):
                columns = slice(j * size, (j + 1) * size)
                if i == j:
                    mass[rows, columns] = -derivatives[i]
                    stiffness[rows, columns] = values[i] + points[i] * derivatives[i]
                    continue
                denominator = points[j] - points[i]
                mass[rows, columns] = (values[i] - values[j]) / denominator
                stiffness[rows, columns] = (points[j] * values[j] - points[i] * values[i]) / denominator
        moments = values.reshape(count * size, size).copy()
        mass = cls.__hermitize(mass, 'M')
        stiffness = cls.__hermitize(stiffness, 'S')
        cls.__check_mass(mass, mass_ratio)
        return Rom(mass, stiffness, moments, data.get_spectra())

    @classmethod
    def __hermitize(cls, matrix: np.ndarray, name: str) -> np.ndarray:
        scale = max(float(np.max(np.abs(matrix))), np.finfo(float).tiny)
        asymmetry = float(np.max(np.abs(matrix - matrix.conj().T))) / scale
        Logger.debug('Removed relative asymmetry {0:.3e} from {1}'.format(asymmetry, name))
        return 0.5 * (matrix + matrix.conj().T)

    @classmethod
    def __check_mass(cls, mass: np.ndarray, mass_ratio: float):
        eigenvalues = np.linalg.eigvalsh(mass)
        Logger.debug('Mass eigenvalues in [{0:.3e}, {1:.3e}]'.format(eigenvalues[0], eigenvalues[-1]))
        if eigenvalues[-1] <= 0 or eigenvalues[0] < mass_ratio * eigenvalues[-1]:
            ratio = eigenvalues[0] / eigenvalues[-1] if eigenvalues[-1] != 0 else 0.0
            raise IllConditionedMass(config_messages.ILL_CONDITIONED_MASS_ERROR + '{0:.3e}'.format(ratio),
                                     eigenvalues=eigenvalues)

    @classmethod
    def __resolvent(cls, rom: Rom, shift: complex, right: np.ndarray) -> np.ndarray:
        pencil = rom.get_stiffness() + shift * rom.get_mass()
        try:
            solution = la.solve(pencil, right)
        except (la.LinAlgError, ValueError) as err:
            raise SingularPencil(config_messages.SINGULAR_PENCIL_ERROR + str(shift) + ' (' + str(err) + ')')
        if not np.all(np.isfinite(solution)):
            raise SingularPencil(config_messages.SINGULAR_PENCIL_ERROR + str(shift))
        return solution

    @classmethod
    def rom_transfer(cls, rom: Rom, shift: complex) -> np.ndarray:
        """F~(lambda) = B^* (S + lambda M)^{-1} B

        Raises:
            SingularPencil: S + lambda M can not be inverted.
        """
        moments = rom.get_moments()
        if rom.is_real() and np.imag(shift) == 0:
            shift = float(np.real(shift))
        return moments.conj().T @ cls.__resolvent(rom, shift, moments)

    @classmethod
    def rom_transfer_derivative(cls, rom: Rom, shift: complex) -> np.ndarray:
        """dF~/dlambda, by complex step for a real ROM at a real point, analytically otherwise"""
        moments = rom.get_moments()
        if rom.is_real() and np.imag(shift) == 0:
            step = config_constants.COMPLEX_STEP
            perturbed = cls.__resolvent(rom, float(np.real(shift)) + 1j * step, moments)
            return np.imag(moments.T @ perturbed) / step
        solution = cls.__resolvent(rom, shift, moments)
        return -moments.conj().T @ cls.__resolvent(rom, shift, rom.get_mass() @ solution)
