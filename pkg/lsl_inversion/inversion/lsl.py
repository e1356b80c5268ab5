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
Assembly and regularized solution of the Lippmann-Schwinger-Lanczos system, with the Born,
exact internal solution, back projection and quotient estimators and the ROM identity diagnostics.
"""

from typing import List, Optional
import numpy as np
import scipy.linalg as la
from .internal.common import config_constants, config_messages
from .internal.common.config_errors import AllTruncated, ConfigError, GridMismatchError
from .internal.utils.logger import Logger
from .internal_solutions import InternalSolutions
from .lanczos import LanczosProcess
from .models import (BackgroundKit, GridFunction, InternalSolutionSet, InversionResult,
                     LanczosFactorization, LslSystem, MethodType, RowInfo, TransferData)


def relative_deviation(first, second) -> float:
    """||a - b|| / max(||a||, ||b||), 0 when both vanish"""
    first = np.asarray(first)
    second = np.asarray(second)
    scale = max(np.linalg.norm(first), np.linalg.norm(second))
    if scale == 0:
        return 0.0
    return float(np.linalg.norm(first - second) / scale)


class LslSolver:
    """Linear inversion of sum_i w_i u_0^(r)_i q_i u^(p)_i = (F_0 - F)_{rp}.

    The products are bilinear: for a real medium u_0 at lambda is the adjoint
    solution at conj(lambda), so the identity holds without conjugation.
    """

    @classmethod
    def assemble(cls, background: InternalSolutionSet, solutions: InternalSolutionSet,
                 data: TransferData, data0: TransferData) -> LslSystem:
        """Assemble the real system W q = dF

        Args:
            background: u_0 (and du_0/dlambda in REAL_WITH_DERIVATIVES mode).
            solutions: internal solutions, data driven, exact or background.
            data: measured transfer data F.
            data0: background transfer data F_0.
        Returns:
            LslSystem with re/im rows (COMPLEX) or value/derivative rows (REAL_WITH_DERIVATIVES)
            for every spectral point and source pair r <= p.
        """
        grid = background.get_grid()
        if solutions.get_grid() != grid:
            raise GridMismatchError(config_messages.GRID_MISMATCH_ERROR)
        spectra = data.get_spectra()
        for other in (data0.get_spectra(), background.get_spectra(), solutions.get_spectra()):
            if other != spectra:
                raise ConfigError(config_messages.SPECTRAL_MISMATCH_ERROR)
        size = data.source_count()
        if data0.source_count() != size or background.source_count() != size \
                or solutions.source_count() != size:
            raise ConfigError(config_messages.TRANSFER_SHAPE_ERROR)
        real = spectra.is_real()
        if real and not (background.has_derivatives() and solutions.has_derivatives()):
            raise ConfigError(config_messages.DERIVATIVES_MISSING_ERROR)
        weights = grid.get_weights()
        delta = data0.get_values() - data.get_values()
        rows = list()
        rhs = list()
        metadata = list()
        for j in range(spectra.count()):
            u0 = background.get_values(j)
            u = solutions.get_values(j)
            for r in range(size):
                for p in range(r, size):
                    row = weights * u0[:, r] * u[:, p]
                    if real:
                        rows.append(np.real(row))
                        rhs.append(np.real(delta[j, r, p]))
                        metadata.append(RowInfo(j, r, p, 'value'))
                    else:
                        rows.extend([row.real, row.imag])
                        rhs.extend([delta[j, r, p].real, delta[j, r, p].imag])
                        metadata.extend([RowInfo(j, r, p, 're'), RowInfo(j, r, p, 'im')])
            if real:
                du0 = background.get_derivatives(j)
                du = solutions.get_derivatives(j)
                delta_derivative = data0.get_derivatives()[j] - data.get_derivatives()[j]
                for r in range(size):
                    for p in range(r, size):
                        rows.append(np.real(weights * (du0[:, r] * u[:, p] + u0[:, r] * du[:, p])))
                        rhs.append(delta_derivative[r, p])
                        metadata.append(RowInfo(j, r, p, 'derivative'))
        return LslSystem(grid, np.array(rows), np.array(rhs), metadata)

    @classmethod
    def solve_tsvd(cls, system: LslSystem, rank: Optional[int] = None,
                   threshold: Optional[float] = config_constants.TSVD_THRESHOLD,
                   method: MethodType = MethodType.LSL) -> InversionResult:
        """Truncated SVD solution of the row normalized system

        Args:
            system: assembled system.
            rank: explicit number of singular triples to keep; overrides ``threshold``.
            threshold: keep sigma_k >= threshold * sigma_1.
            method: tag of the result.
        Returns:
            InversionResult; the residual is measured on the row normalized system.
        Raises:
            AllTruncated: nothing survives the policy.
        """
        if rank is None and (threshold is None or not 0 < threshold <= 1):
            raise ConfigError(config_messages.RANK_POLICY_ERROR)
        if rank is not None and rank < 1:
            raise ConfigError(config_messages.RANK_POLICY_ERROR)
        matrix = system.get_matrix()
        rhs = system.get_rhs()
        norms = np.linalg.norm(matrix, axis=1)
        norms[norms == 0] = 1.0
        matrix = matrix / norms[:, None]
        rhs = rhs / norms
        left, singular_values, right = la.svd(matrix, full_matrices=False)
        if singular_values.size == 0 or singular_values[0] <= 0:
            raise AllTruncated(config_messages.ALL_TRUNCATED_ERROR)
        if rank is not None:
            kept = min(rank, int(np.count_nonzero(singular_values > 0)))
            threshold = None
        else:
            kept = int(np.count_nonzero(singular_values >= threshold * singular_values[0]))
        if kept == 0:
            raise AllTruncated(config_messages.ALL_TRUNCATED_ERROR)
        coefficients = (left[:, :kept].T @ rhs) / singular_values[:kept]
        estimate = right[:kept].T @ coefficients
        rhs_norm = np.linalg.norm(rhs)
        residual = np.linalg.norm(matrix @ estimate - rhs) / rhs_norm if rhs_norm > 0 else 0.0
        Logger.debug('{0}: kept {1} of {2} singular values, residual {3:.3e}'.format(
            MethodType(method).value, kept, singular_values.size, residual))
        return InversionResult(GridFunction(system.get_grid(), estimate), method, singular_values,
                               kept, threshold, residual)

    @classmethod
    def born_solve(cls, kit: BackgroundKit, data: TransferData, data0: Optional[TransferData] = None,
                   rank: Optional[int] = None,
                   threshold: Optional[float] = config_constants.TSVD_THRESHOLD) -> InversionResult:
        """Born approximation: the internal solutions are replaced by u_0"""
        background = InternalSolutions.background_set(kit)
        system = cls.assemble(background, background, data, data0 or kit.get_data())
        return cls.solve_tsvd(system, rank, threshold, MethodType.BORN)

    @classmethod
    def lsl_solve(cls, kit: BackgroundKit, data: TransferData, data0: Optional[TransferData] = None,
                  rank: Optional[int] = None,
                  threshold: Optional[float] = config_constants.TSVD_THRESHOLD,
                  factorization: Optional[LanczosFactorization] = None,
                  mass_ratio: float = config_constants.MASS_EIGENVALUE_RATIO) -> InversionResult:
        """Lippmann-Schwinger-Lanczos inversion using data driven internal solutions only"""
        if factorization is None:
            factorization = InternalSolutions.factorize_data(data, mass_ratio)
        solutions = InternalSolutions.data_driven_set(kit, factorization, data.get_spectra())
        system = cls.assemble(InternalSolutions.background_set(kit), solutions, data, data0 or kit.get_data())
        return cls.solve_tsvd(system, rank, threshold, MethodType.LSL)

    @classmethod
    def cheated_solve(cls, kit: BackgroundKit, data: TransferData, potential: GridFunction,
                      data0: Optional[TransferData] = None, rank: Optional[int] = None,
                      threshold: Optional[float] = config_constants.TSVD_THRESHOLD) -> InversionResult:
        """Same system with the exact internal solutions of the true potential"""
        if potential is None:
            raise ConfigError(config_messages.CHEATED_NEEDS_TRUTH_ERROR)
        solutions = InternalSolutions.cheated_internal(kit.get_grid(), potential, kit.get_sources(),
                                                       data.get_spectra())
        system = cls.assemble(InternalSolutions.background_set(kit), solutions, data, data0 or kit.get_data())
        return cls.solve_tsvd(system, rank, threshold, MethodType.CHEATED)

    @classmethod
    def __difference(cls, factorization: LanczosFactorization, kit: BackgroundKit) -> np.ndarray:
        background = kit.get_factorization()
        if factorization.size() != background.size():
            raise ConfigError(config_messages.FACTORIZATION_SIZE_ERROR)
        return factorization.get_tridiagonal() - background.get_tridiagonal()

    @classmethod
    def point_spread_norms(cls, kit: BackgroundKit) -> np.ndarray:
        """sum_x' w(x') |d(x, x')|^2 per node, with d(x, x') = (V_0 Q_0)(x) (V_0 Q_0)(x')^*"""
        basis = kit.get_basis()
        gram = basis.conj().T @ (kit.get_grid().get_weights()[:, None] * basis)
        return np.real(np.sum((basis @ gram) * basis.conj(), axis=1))

    @classmethod
    def back_projection(cls, factorization: LanczosFactorization, kit: BackgroundKit,
                        sharpened: bool = True) -> InversionResult:
        """Pointwise estimate from T - T_0 in the orthonormal background basis

        Args:
            factorization: factorization of the measured data.
            kit: background kit with T_0 and V_0 Q_0.
            sharpened: divide (V_0Q_0)(x) (T - T_0) (V_0Q_0)(x)^* by the squared point spread
                integral; otherwise pair T - T_0 with the integral of the basis.
        """
        difference = cls.__difference(factorization, kit)
        basis = kit.get_basis()
        flags = None
        if sharpened:
            numerator = np.real(np.sum((basis @ difference) * basis.conj(), axis=1))
            denominator = cls.point_spread_norms(kit)
            flags = denominator < config_constants.DENOMINATOR_FLOOR
            safe = np.where(flags, 1.0, denominator)
            estimate = np.where(flags, 0.0, numerator / safe)
            if np.any(flags):
                Logger.warning('Back projection zeroed {0} nodes with a degenerate denominator'.format(
                    int(np.count_nonzero(flags))))
        else:
            integral = kit.get_grid().get_weights() @ basis
            estimate = np.real(basis.conj() @ (difference.T @ integral))
        return InversionResult(GridFunction(kit.get_grid(), estimate), MethodType.BACKPROJECTION, flags=flags)

    @classmethod
    def quotient_estimate(cls, kit: BackgroundKit, solutions: InternalSolutionSet) -> InversionResult:
        """Least squares over all points and sources of q u = g - lambda u - A_0 u, per node"""
        operator = kit.get_operator()
        sources = kit.get_sources().get_columns()
        numerator = np.zeros(operator.size(), dtype=complex)
        denominator = np.zeros(operator.size())
        for j, point in enumerate(solutions.get_spectra().get_points()):
            values = solutions.get_values(j)
            residual = sources - point * values - operator.apply(values)
            numerator += np.sum(values.conj() * residual, axis=1)
            denominator += np.sum(np.abs(values) ** 2, axis=1)
        flags = denominator < config_constants.DENOMINATOR_FLOOR
        safe = np.where(flags, 1.0, denominator)
        estimate = np.where(flags, 0.0, np.real(numerator) / safe)
        return InversionResult(GridFunction(kit.get_grid(), estimate), MethodType.QUOTIENT, flags=flags)

    @classmethod
    def __resolvent_block(cls, tridiagonal: np.ndarray, shift: complex, block: int) -> np.ndarray:
        """E_1^T (T + lambda I)^{-1} E_1"""
        size = tridiagonal.shape[0]
        solution = la.solve(tridiagonal + shift * np.eye(size), np.eye(size, block))
        return solution[:block]

    @classmethod
    def __left_resolvent(cls, tridiagonal: np.ndarray, normalization: np.ndarray, shift: complex) -> np.ndarray:
        """beta^* E_1^T (T + lambda I)^{-1}"""
        size = tridiagonal.shape[0]
        solution = la.solve((tridiagonal + shift * np.eye(size)).T, np.eye(size, normalization.shape[0]))
        return normalization.conj().T @ solution.T

    @classmethod
    def rom_interpolation_residuals(cls, factorization: LanczosFactorization, kit: BackgroundKit,
                                    data: TransferData) -> List[dict]:
        """Compare F_0 - F with beta^* E_1^T (T_0 + lambda)^{-1} (T - T_0) (T + lambda)^{-1} E_1 beta

        The perturbed normalization beta is used on both sides.
        """
        difference = cls.__difference(factorization, kit)
        background = kit.get_factorization().get_tridiagonal()
        normalization = factorization.get_normalization()
        residuals = list()
        for j, point in enumerate(data.get_spectra().get_points()):
            left = cls.__left_resolvent(background, normalization, point)
            right = LanczosProcess.resolvent_columns(factorization, point)
            delta = kit.get_data().get_values()[j] - data.get_values()[j]
            residuals.append({
                'lambda': [float(np.real(point)), float(np.imag(point))],
                'residual': relative_deviation(delta, left @ difference @ right)
            })
        return residuals

    @classmethod
    def verify_rom_identity(cls, factorization: LanczosFactorization, kit: BackgroundKit,
                            data: TransferData, data0: TransferData, solutions: InternalSolutionSet,
                            potential: GridFunction) -> List[dict]:
        """Per lambda_j comparison of three expressions of F_0 - F.

        ``reduced`` is s_0^* (T - T_0) s with s_0 built from T_0, beta_0 and s from T, beta;
        ``data`` is F_0 - F; ``integral`` is sum_i w_i u_0 q u with the supplied internal
        solutions. ``resolvent_residual`` checks the resolvent identity with beta on both sides,
        which holds to roundoff.
        """
        difference = cls.__difference(factorization, kit)
        background = kit.get_factorization()
        weights = kit.get_grid().get_weights()
        values = potential.get_values()
        tridiagonal = factorization.get_tridiagonal()
        normalization = factorization.get_normalization()
        block = normalization.shape[0]
        report = list()
        for j, point in enumerate(data.get_spectra().get_points()):
            right = LanczosProcess.resolvent_columns(factorization, point)
            reduced = cls.__left_resolvent(background.get_tridiagonal(), background.get_normalization(),
                                           point) @ difference @ right
            delta = data0.get_values()[j] - data.get_values()[j]
            u0 = kit.get_solutions().get_values(j)
            integral = u0.T @ ((weights * values)[:, None] * solutions.get_values(j))
            equal_normalization = cls.__left_resolvent(background.get_tridiagonal(), normalization,
                                                       point) @ difference @ right
            exact = normalization.conj().T @ (
                cls.__resolvent_block(background.get_tridiagonal(), point, block)
                - cls.__resolvent_block(tridiagonal, point, block)) @ normalization
            report.append({
                'lambda': [float(np.real(point)), float(np.imag(point))],
                'reduced_norm': float(np.linalg.norm(reduced)),
                'data_norm': float(np.linalg.norm(delta)),
                'integral_norm': float(np.linalg.norm(integral)),
                'reduced_vs_data': relative_deviation(reduced, delta),
                'integral_vs_data': relative_deviation(integral, delta),
                'reduced_vs_integral': relative_deviation(reduced, integral),
                'resolvent_residual': relative_deviation(exact, equal_normalization)
            })
        return report
