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
M-symmetric (block) Lanczos process on A = M^{-1} S started from M^{-1} B.
"""

from typing import Optional, Tuple
import numpy as np
import scipy.linalg as la
from .internal.common import config_constants, config_messages
from .internal.common.config_errors import (Breakdown, ConfigError, IllConditionedMass,
                                            RankDeficientBlock, SingularPencil)
from .internal.utils.logger import Logger
from .models import LanczosFactorization, Rom


class LanczosProcess:
    """Tridiagonalization of the ROM pencil with full reorthogonalization.

    Conventions, kept identical for background and perturbed data:
      - SISO off diagonal entries and beta are positive M norms.
      - Blocks are M-orthonormalized by two passes of a lower triangular Cholesky QR,
        X = Q L with L lower triangular and positive on the diagonal.
      - The first block M^{-1} B = Q_1 beta takes beta as the polar factor of its triangle,
        the Hermitian positive definite square root of B^* M^{-1} B.
      - Sub diagonal blocks T[k+1, k] are the lower triangular factors L. Super diagonal
        blocks T[k, k+1] are their adjoints and so upper triangular.
    """

    @classmethod
    def factorize(cls, rom: Rom, allow_breakdown: bool = False) -> LanczosFactorization:
        """SISO recurrence for K = 1, block recurrence otherwise"""
        if rom.block_size() == 1:
            return cls.m_symmetric_lanczos(rom, allow_breakdown)
        return cls.block_lanczos(rom)

    @classmethod
    def __equilibrate(cls, rom: Rom):
        """Pencil congruent to (S, M) by D = diag(M)^{-1/2}, with the Cholesky factor of D M D

        T and beta are unchanged by the congruence and the basis maps back as Q = D Q^.
        """
        mass = rom.get_mass()
        diagonal = np.real(np.diag(mass))
        if np.any(diagonal <= 0):
            raise IllConditionedMass(config_messages.ILL_CONDITIONED_MASS_ERROR + 'non positive diagonal',
                                     eigenvalues=rom.mass_eigenvalues())
        scale = 1.0 / np.sqrt(diagonal)
        outer = np.outer(scale, scale)
        mass = mass * outer
        try:
            factor = la.cho_factor(mass, lower=False)
        except la.LinAlgError as err:
            raise IllConditionedMass(config_messages.ILL_CONDITIONED_MASS_ERROR + str(err),
                                     eigenvalues=rom.mass_eigenvalues())
        return mass, rom.get_stiffness() * outer, rom.get_moments() * scale[:, None], scale, factor

    @classmethod
    def __reorthogonalize(cls, residual: np.ndarray, basis: np.ndarray, mass: np.ndarray) -> np.ndarray:
        for _ in range(2):
            residual = residual - basis @ (basis.conj().T @ (mass @ residual))
        return residual

    @classmethod
    def __m_norm(cls, vector: np.ndarray, mass: np.ndarray) -> float:
        return float(np.sqrt(max(np.real(np.vdot(vector, mass @ vector)), 0.0)))

    @classmethod
    def m_symmetric_lanczos(cls, rom: Rom, allow_breakdown: bool = False) -> LanczosFactorization:
        """Run m steps of the M-symmetric Lanczos process on a SISO ROM

        Args:
            rom: ROM with K = 1.
            allow_breakdown: return the partial factorization instead of raising Breakdown.
        Returns:
            LanczosFactorization with real tridiagonal T and M-orthonormal Q.
        Raises:
            Breakdown: a residual M norm fell below 1e-12 times max(|alpha_1|, beta_1).
        """
        if rom.block_size() != 1:
            raise ConfigError(config_messages.LANCZOS_BLOCK_SIZE_ERROR)
        mass, stiffness, moments, scale, factor = cls.__equilibrate(rom)
        moment = moments[:, 0]
        size = rom.size()
        dtype = float if rom.is_real() else complex
        normalization = 1.0
        vector = la.cho_solve(factor, moment)
        for _ in range(2):
            norm = cls.__m_norm(vector, mass)
            if norm == 0:
                raise Breakdown(config_messages.BREAKDOWN_ERROR + '0', 0)
            vector = vector / norm
            normalization *= norm
        basis = np.zeros((size, size), dtype=dtype)
        diagonal = np.zeros(size)
        off_diagonal = np.zeros(max(size - 1, 0))
        residue = 0.0
        for k in range(size):
            basis[:, k] = vector
            product = stiffness @ vector
            rayleigh = np.vdot(vector, product)
            diagonal[k] = np.real(rayleigh)
            residue = max(residue, abs(np.imag(rayleigh)) / max(abs(np.real(rayleigh)), np.finfo(float).tiny))
            if k == size - 1:
                break
            residual = la.cho_solve(factor, product) - diagonal[k] * vector
            if k > 0:
                residual = residual - off_diagonal[k - 1] * basis[:, k - 1]
            residual = cls.__reorthogonalize(residual, basis[:, :k + 1], mass)
            norm = cls.__m_norm(residual, mass)
            reference = abs(diagonal[0]) if k == 0 else max(abs(diagonal[0]), off_diagonal[0])
            if norm <= config_constants.BREAKDOWN_TOLERANCE * reference:
                partial = LanczosFactorization(cls.__tridiagonal(diagonal[:k + 1], off_diagonal[:k]),
                                               scale[:, None] * basis[:, :k + 1], [[normalization]], k + 1,
                                               residue)
                Logger.warning(config_messages.BREAKDOWN_ERROR + str(k + 1))
                if allow_breakdown:
                    return partial
                raise Breakdown(config_messages.BREAKDOWN_ERROR + str(k + 1), k + 1, partial)
            vector = residual / norm
            correction = cls.__m_norm(vector, mass)
            vector = vector / correction
            off_diagonal[k] = norm * correction
        cls.__log_residue(residue)
        return LanczosFactorization(cls.__tridiagonal(diagonal, off_diagonal), scale[:, None] * basis,
                                    [[normalization]], None, residue)

    @classmethod
    def __tridiagonal(cls, diagonal: np.ndarray, off_diagonal: np.ndarray) -> np.ndarray:
        return np.diag(diagonal) + np.diag(off_diagonal, 1) + np.diag(off_diagonal, -1)

    @classmethod
    def __log_residue(cls, residue: float):
        if residue > config_constants.REALNESS_TOLERANCE:
            Logger.warning('Imaginary part of the Lanczos coefficients is {0:.3e}'.format(residue))
        else:
            Logger.debug('Imaginary part of the Lanczos coefficients is {0:.3e}'.format(residue))

    @classmethod
    def __cholesky_qr(cls, residual: np.ndarray, mass: np.ndarray, reference: Optional[float],
                      step: int) -> Tuple[np.ndarray, np.ndarray]:
        """Two passes of X = Q L with Q^* M Q = I and L lower triangular, positive diagonal"""
        coefficient = np.eye(residual.shape[1])
        for _ in range(2):
            gram = residual.conj().T @ (mass @ residual)
            gram = 0.5 * (gram + gram.conj().T)
            eigenvalues = la.eigvalsh(gram)
            scale = np.sqrt(max(eigenvalues[-1], 0.0)) if reference is None else reference
            if eigenvalues[0] <= 0 or np.sqrt(eigenvalues[0]) < config_constants.BREAKDOWN_TOLERANCE * scale:
                raise RankDeficientBlock(config_messages.RANK_DEFICIENT_BLOCK_ERROR + str(step), step)
            lower = la.cholesky(gram[::-1, ::-1], lower=False)[::-1, ::-1]
            residual = la.solve_triangular(lower, residual.T, trans='T', lower=True).T
            coefficient = lower @ coefficient
        return residual, coefficient

    @classmethod
    def __first_block(cls, start: np.ndarray, mass: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """M^{-1} B = Q_1 beta with beta Hermitian positive definite"""
        block, triangle = cls.__cholesky_qr(start, mass, None, 0)
        rotation, normalization = la.polar(triangle)
        return block @ rotation, 0.5 * (normalization + normalization.conj().T)

    @classmethod
    def block_lanczos(cls, rom: Rom) -> LanczosFactorization:
        """Run m block steps of the M-symmetric block Lanczos process

        Args:
            rom: ROM with block size K.
        Returns:
            LanczosFactorization with block tridiagonal T (real for REAL_WITH_DERIVATIVES
            data, Hermitian for COMPLEX block data) and M-orthonormal Q.
        Raises:
            RankDeficientBlock: a residual block lost rank; deflation is not implemented.
        """
        mass, stiffness, moments, scale, factor = cls.__equilibrate(rom)
        block = rom.block_size()
        size = rom.size()
        real = rom.is_real()
        current, normalization = cls.__first_block(la.cho_solve(factor, moments), mass)
        dtype = float if real else complex
        basis = np.zeros((size, size), dtype=dtype)
        tridiagonal = np.zeros((size, size), dtype=dtype)
        previous = None
        coupling = None
        reference = 0.0
        residue = 0.0
        steps = size // block
        for k in range(steps):
            rows = slice(k * block, (k + 1) * block)
            basis[:, rows] = current
            product = stiffness @ current
            alpha = current.conj().T @ product
            alpha = 0.5 * (alpha + alpha.conj().T)
            if real:
                alpha = alpha.real
            else:
                magnitude = max(float(np.max(np.abs(alpha))), np.finfo(float).tiny)
                residue = max(residue, float(np.max(np.abs(alpha.imag))) / magnitude)
            tridiagonal[rows, rows] = alpha
            if k == 0:
                reference = float(np.linalg.norm(alpha, 2))
            if k == steps - 1:
                break
            residual = la.cho_solve(factor, product) - current @ alpha
            if previous is not None:
                residual = residual - previous @ coupling.conj().T
            residual = cls.__reorthogonalize(residual, basis[:, :(k + 1) * block], mass)
            following, coupling = cls.__cholesky_qr(residual, mass, reference, k + 1)
            next_rows = slice((k + 1) * block, (k + 2) * block)
            tridiagonal[next_rows, rows] = coupling
            tridiagonal[rows, next_rows] = coupling.conj().T
            previous, current = current, following
        if not real:
            Logger.debug('Relative imaginary part of the block Lanczos coefficients is {0:.3e}'.format(residue))
        return LanczosFactorization(tridiagonal, scale[:, None] * basis, normalization, None, residue)

    @classmethod
    def rom_transfer_lanczos(cls, factorization: LanczosFactorization, shift: complex) -> np.ndarray:
        """F~(lambda) = beta^* E_1^T (T + lambda I)^{-1} E_1 beta

        Raises:
            SingularPencil: T + lambda I can not be inverted.
        """
        normalization = factorization.get_normalization()
        block = factorization.block_size()
        solution = cls.resolvent_columns(factorization, shift)
        return normalization.conj().T @ solution[:block]

    @classmethod
    def resolvent_columns(cls, factorization: LanczosFactorization, shift: complex, power: int = 1) -> np.ndarray:
        """(T + lambda I)^{-power} E_1 beta for power 1 or 2"""
        tridiagonal = factorization.get_tridiagonal()
        right = factorization.first_block() @ factorization.get_normalization()
        shifted = tridiagonal + shift * np.eye(factorization.size())
        try:
            lu_piv = la.lu_factor(shifted, check_finite=True)
            solution = la.lu_solve(lu_piv, right)
            for _ in range(power - 1):
                solution = la.lu_solve(lu_piv, solution)
        except (la.LinAlgError, ValueError) as err:
            raise SingularPencil(config_messages.SINGULAR_SHIFT_ERROR + str(shift) + ' (' + str(err) + ')')
        if not np.all(np.isfinite(solution)):
            raise SingularPencil(config_messages.SINGULAR_SHIFT_ERROR + str(shift))
        return solution
