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
Finite difference discretization of A_q = -Laplace + q with Neumann boundary conditions,
shifted solves, snapshots and transfer function data.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence
import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import splu
from .internal.common import config_constants, config_messages
from .internal.common.config_errors import ConfigError, GridMismatchError, NearSingularShift
from .internal.utils.logger import Logger
from .internal.utils.validators import Validators
from .models import DiscreteOperator, Grid, GridFunction, SourceSet, SpectralSet, TransferData

AMPLIFICATION_BOUND = 1e10


class ForwardModel:
    """Forward solver for (A_q + lambda I) u = g on a Grid"""

    @classmethod
    def __axis_stiffness(cls, grid: Grid, axis: int) -> sp.csr_matrix:
        count = grid.get_nodes()[axis]
        main = np.full(count, 2.0)
        main[0] = main[-1] = 1.0
        off = -np.ones(count - 1)
        return sp.diags([off, main, off], [-1, 0, 1], format='csr') / grid.get_spacing()[axis]

    @classmethod
    def background_stiffness(cls, grid: Grid) -> sp.csr_matrix:
        """Symmetric weighted Laplacian K_0 = W A_0 with mirrored ghost Neumann closure"""
        if grid.get_dim() == 1:
            return cls.__axis_stiffness(grid, 0)
        stiff_x = cls.__axis_stiffness(grid, 0)
        stiff_y = cls.__axis_stiffness(grid, 1)
        mass_x = sp.diags(grid.axis_weights(0))
        mass_y = sp.diags(grid.axis_weights(1))
        return sp.csr_matrix(sp.kron(mass_y, stiff_x) + sp.kron(stiff_y, mass_x))

    @classmethod
    def build_operator(cls, grid: Grid, potential: GridFunction) -> DiscreteOperator:
        """Build A_q = A_0 + diag(q)

        Args:
            grid: Grid of the operator.
            potential: real potential q on ``grid``.
        Returns:
            The DiscreteOperator, stored as K_q = K_0 + W diag(q).
        """
        if potential.get_grid() != grid:
            raise GridMismatchError(config_messages.GRID_MISMATCH_ERROR)
        values = potential.get_values()
        if not Validators.validate_real(values):
            raise ConfigError(config_messages.POTENTIAL_NOT_REAL_ERROR)
        values = np.real(values).astype(float)
        if not Validators.validate_finite(values):
            raise ConfigError(config_messages.NON_FINITE_ERROR + 'potential')
        stiffness = cls.background_stiffness(grid) + sp.diags(grid.get_weights() * values)
        return DiscreteOperator(grid, GridFunction(grid, values), stiffness)

    @classmethod
    def background_operator(cls, grid: Grid) -> DiscreteOperator:
        """A_0, the operator with q = 0"""
        return cls.build_operator(grid, GridFunction.zeros(grid))

    @classmethod
    def __factor(cls, operator: DiscreteOperator, shift: complex):
        factor = operator.cached_factor(shift)
        if factor is not None:
            return factor
        matrix = operator.get_stiffness() + shift * operator.get_mass()
        dtype = complex if isinstance(shift, complex) else float
        matrix = sp.csc_matrix(matrix, dtype=dtype)
        try:
            factor = splu(matrix)
        except RuntimeError as err:
            raise NearSingularShift(config_messages.NEAR_SINGULAR_SHIFT_ERROR + str(shift) + ' (' + str(err) + ')',
                                    shift=shift)
        Logger.debug('Factorized the shifted system at lambda = {0}'.format(shift))
        return operator.store_factor(shift, factor)

    @classmethod
    def __apply_factor(cls, factor, rhs: np.ndarray, complex_factor: bool) -> np.ndarray:
        if complex_factor:
            return factor.solve(np.ascontiguousarray(rhs, dtype=complex))
        if np.iscomplexobj(rhs):
            return factor.solve(np.ascontiguousarray(rhs.real)) \
                + 1j * factor.solve(np.ascontiguousarray(rhs.imag))
        return factor.solve(np.ascontiguousarray(rhs, dtype=float))

    @classmethod
    def solve_block(cls, operator: DiscreteOperator, shift: complex, columns) -> np.ndarray:
        """Solve (A_q + shift I) U = G for every column of G

        Args:
            operator: the discrete operator.
            shift: spectral point lambda.
            columns: (node_count, K) right hand sides.
        Returns:
            The (node_count, K) block of solutions.
        """
        columns = np.asarray(columns)
        single = columns.ndim == 1
        if single:
            columns = columns[:, None]
        if columns.shape[0] != operator.size():
            raise GridMismatchError(config_messages.GRID_FUNCTION_SIZE_ERROR)
        shift = cls.__normalize_shift(shift)
        weights = operator.get_weights()
        factor = cls.__factor(operator, shift)
        rhs = weights[:, None] * columns
        solution = cls.__apply_factor(factor, rhs, isinstance(shift, complex))
        if not Validators.validate_finite(solution):
            raise NearSingularShift(config_messages.NEAR_SINGULAR_SHIFT_ERROR + str(shift), shift=shift)
        grid = operator.get_grid()
        source_norm = grid.norm(columns)
        residual = operator.get_stiffness() @ solution + shift * (weights[:, None] * solution) - rhs
        relative = grid.norm(residual / weights[:, None]) / source_norm if source_norm > 0 else 0.0
        if relative > config_constants.SHIFT_RESIDUAL_TOLERANCE:
            raise NearSingularShift(config_messages.NEAR_SINGULAR_SHIFT_ERROR + str(shift),
                                    shift=shift, residual=relative)
        if source_norm > 0 and grid.norm(solution) > AMPLIFICATION_BOUND * source_norm:
            raise NearSingularShift(config_messages.NEAR_SINGULAR_SHIFT_ERROR + str(shift),
                                    shift=shift, residual=relative)
        return solution[:, 0] if single else solution

    @classmethod
    def solve_shifted(cls, operator: DiscreteOperator, shift: complex, source: GridFunction) -> GridFunction:
        """Solve (A_q + shift I) u = g

        Raises:
            NearSingularShift: when the residual or the amplification of the solve is too large.
        """
        if source.get_grid() != operator.get_grid():
            raise GridMismatchError(config_messages.GRID_MISMATCH_ERROR)
        return GridFunction(operator.get_grid(), cls.solve_block(operator, shift, source.get_values()))

    @classmethod
    def __normalize_shift(cls, shift):
        shift = complex(shift)
        if shift.imag == 0:
            return shift.real
        return shift

    @classmethod
    def __pairing(cls, operator: DiscreteOperator, left, right) -> np.ndarray:
        return left.T @ (operator.get_weights()[:, None] * right)

    @classmethod
    def transfer_function(cls, operator: DiscreteOperator, sources: SourceSet, shift: complex) -> np.ndarray:
        """F(lambda)_{rp} = sum_i w_i g^(r)_i u^(p)_i

        The matrix is complex for complex shifts and real for real shifts.
        """
        cls.__check_sources(operator, sources)
        columns = sources.get_columns()
        solutions = cls.solve_block(operator, shift, columns)
        return cls.__pairing(operator, columns, solutions)

    @classmethod
    def transfer_derivative(cls, operator: DiscreteOperator, sources: SourceSet, shift: float) -> np.ndarray:
        """dF/dlambda(lambda)_{rp} = -sum_i w_i u^(r)_i u^(p)_i at a real point"""
        if np.imag(shift) != 0:
            raise ConfigError(config_messages.SPECTRAL_REAL_MODE_ERROR)
        cls.__check_sources(operator, sources)
        solutions = cls.solve_block(operator, float(np.real(shift)), sources.get_columns())
        return -cls.__pairing(operator, solutions, solutions)

    @classmethod
    def snapshots(cls, operator: DiscreteOperator, sources: SourceSet, spectra: SpectralSet,
                  workers: Optional[int] = None) -> np.ndarray:
        """Snapshot block V with column j * K + p equal to u^(p)(., lambda_j)

        Args:
            operator: the discrete operator.
            sources: the K sources.
            spectra: the m spectral points.
            workers: number of threads used for distinct spectral points.
        Returns:
            The (node_count, m * K) block, frequency major and source minor.
        """
        cls.__check_sources(operator, sources)
        columns = sources.get_columns()
        blocks = cls.__map_points(lambda shift: cls.solve_block(operator, shift, columns),
                                  spectra.get_points(), workers)
        return np.concatenate(blocks, axis=1)

    @classmethod
    def simulate(cls, operator: DiscreteOperator, sources: SourceSet, spectra: SpectralSet,
                 workers: Optional[int] = None) -> TransferData:
        """Generate the transfer data of a medium

        In REAL_WITH_DERIVATIVES mode the derivative reuses the solves of the values.
        """
        cls.__check_sources(operator, sources)
        columns = sources.get_columns()

        def sample(shift):
            solutions = cls.solve_block(operator, shift, columns)
            values = cls.__pairing(operator, columns, solutions)
            derivative = -cls.__pairing(operator, solutions, solutions) if spectra.is_real() else None
            return values, derivative

        samples = cls.__map_points(sample, spectra.get_points(), workers)
        values = np.stack([s[0] for s in samples])
        derivatives = np.stack([s[1] for s in samples]) if spectra.is_real() else None
        Logger.debug('Simulated transfer data with m = {0}, K = {1}'.format(spectra.count(), sources.count()))
        return TransferData(spectra, values, derivatives)

    @classmethod
    def __map_points(cls, function, points: Sequence, workers: Optional[int]) -> list:
        if workers == 1 or len(points) == 1:
            return [function(point) for point in points]
        with ThreadPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(function, points))

    @classmethod
    def __check_sources(cls, operator: DiscreteOperator, sources: SourceSet):
        if sources.get_grid() != operator.get_grid():
            raise GridMismatchError(config_messages.GRID_MISMATCH_ERROR)

    @classmethod
    def build_sources(cls, grid: Grid, positions, width: float = 0.0,
                      boundary: Optional[str] = None) -> SourceSet:
        """Build the source block G

        A zero width gives the single node indicator e_k / w_k at the node nearest to each
        position, so that sum_i w_i g_i u_i = u(x_k). A positive width gives a Gaussian
        truncated at three widths and normalized to unit integral.

        Args:
            grid: the grid.
            positions: (K, dim) source positions inside the closed domain.
            width: Gaussian width, 0 for the single node indicator.
            boundary: name of the boundary segment the sources sit on.
        """
        positions = np.array(positions, dtype=float).reshape(-1, grid.get_dim())
        if positions.shape[0] == 0:
            raise ConfigError(config_messages.SOURCE_EMPTY_ERROR)
        weights = grid.get_weights()
        coordinates = grid.coordinates()
        columns = np.zeros((grid.node_count(), positions.shape[0]))
        for index, position in enumerate(positions):
            if not grid.contains(position):
                raise ConfigError(config_messages.SOURCE_OUTSIDE_ERROR + str(position.tolist()))
            column = np.zeros(grid.node_count())
            if width > 0:
                distance = np.linalg.norm(coordinates - position, axis=1)
                column = np.exp(-distance ** 2 / (2 * width ** 2))
                column[distance > config_constants.SOURCE_SUPPORT_RADIUS * width] = 0.0
            if not np.any(column):
                node = grid.nearest_node(position)
                column[node] = 1.0
            columns[:, index] = column / np.sum(weights * column)
        return SourceSet(grid, columns, positions, width, boundary)
