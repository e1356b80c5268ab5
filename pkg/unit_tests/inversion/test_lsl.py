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

import unittest
import numpy as np
import scipy.linalg as la
from lsl_inversion.inversion.experiment_handler import ExperimentHandler
from lsl_inversion.inversion.forward import ForwardModel
from lsl_inversion.inversion.internal.common.config_errors import AllTruncated, ConfigError
from lsl_inversion.inversion.internal_solutions import InternalSolutions
from lsl_inversion.inversion.lsl import LslSolver, relative_deviation
from lsl_inversion.inversion.models import (Bump, Grid, GridFunction, LslSystem, MethodType, RowInfo,
                                            SpectralMode, SpectralSet)

MASS_RATIO = 1e-15
SPREAD_POINTS = [k + 1j * k for k in (0.25, 1.0, 4.0, 16.0)]


class MyTestCase(unittest.TestCase):

    def setUp(self):
        self.grid = Grid([1.0], [201])
        bumps = [Bump({'center': 0.3, 'width': 0.05, 'amplitude': 5.0}, 1),
                 Bump({'center': 0.6, 'width': 0.05, 'amplitude': 5.0}, 1)]
        self.potential = ExperimentHandler.make_medium(self.grid, bumps)
        self.operator = ForwardModel.build_operator(self.grid, self.potential)
        self.source = ForwardModel.build_sources(self.grid, [[0.0]])
        self.ends = ForwardModel.build_sources(self.grid, [[0.0], [1.0]])

    def __setup(self, sources, spectra):
        kit = InternalSolutions.build_background(self.grid, sources, spectra, MASS_RATIO)
        data = ForwardModel.simulate(self.operator, sources, spectra)
        factorization = InternalSolutions.factorize_data(data, MASS_RATIO)
        return kit, data, factorization

    def test_background_data_give_zero(self):
        spectra = SpectralSet(SPREAD_POINTS)
        kit = InternalSolutions.build_background(self.grid, self.source, spectra)
        data = kit.get_data()
        solutions = InternalSolutions.data_driven_set(kit, kit.get_factorization())
        system = LslSolver.assemble(InternalSolutions.background_set(kit), solutions, data, data)
        self.assertTrue(np.all(system.get_rhs() == 0))
        for result in (LslSolver.lsl_solve(kit, data, factorization=kit.get_factorization()),
                       LslSolver.born_solve(kit, data),
                       LslSolver.back_projection(kit.get_factorization(), kit),
                       LslSolver.back_projection(kit.get_factorization(), kit, sharpened=False)):
            self.assertTrue(np.all(result.get_estimate().get_values() == 0))
        quotient = LslSolver.quotient_estimate(kit, InternalSolutions.background_set(kit))
        self.assertLess(np.max(np.abs(quotient.get_estimate().get_values())), 1e-6)
        for entry in LslSolver.rom_interpolation_residuals(kit.get_factorization(), kit, data):
            self.assertEqual(entry['residual'], 0.0)

    def test_real_mode_row_count(self):
        spectra = SpectralSet([0.5, 1.0, 2.0, 4.0, 8.0, 16.0], SpectralMode.REAL_WITH_DERIVATIVES)
        kit, data, factorization = self.__setup(self.source, spectra)
        solutions = InternalSolutions.data_driven_set(kit, factorization)
        system = LslSolver.assemble(InternalSolutions.background_set(kit), solutions, data, kit.get_data())
        self.assertEqual(system.row_count(), 12)
        kinds = [row.kind for row in system.get_metadata()]
        self.assertEqual(kinds.count('value'), 6)
        self.assertEqual(kinds.count('derivative'), 6)
        self.assertEqual(system.get_matrix().shape[1], self.grid.node_count())

    def test_complex_mode_row_count(self):
        spectra = SpectralSet(SPREAD_POINTS[:3])
        kit, data, factorization = self.__setup(self.ends, spectra)
        solutions = InternalSolutions.data_driven_set(kit, factorization)
        system = LslSolver.assemble(InternalSolutions.background_set(kit), solutions, data, kit.get_data())
        self.assertEqual(system.row_count(), 18)
        self.assertEqual(system.get_metadata()[:2], [RowInfo(0, 0, 0, 're'), RowInfo(0, 0, 0, 'im')])
        self.assertTrue(all(row.receiver <= row.emitter for row in system.get_metadata()))

    def test_exact_internal_solutions_satisfy_the_system(self):
        for spectra in (SpectralSet([0.5, 2.0, 8.0], SpectralMode.REAL_WITH_DERIVATIVES),
                        SpectralSet(SPREAD_POINTS[:3])):
            kit = InternalSolutions.build_background(self.grid, self.ends, spectra)
            data = ForwardModel.simulate(self.operator, self.ends, spectra)
            cheated = InternalSolutions.cheated_internal(self.grid, self.potential, self.ends, spectra)
            system = LslSolver.assemble(InternalSolutions.background_set(kit), cheated, data, kit.get_data())
            rhs = system.get_rhs()
            residual = system.get_matrix() @ self.potential.get_values() - rhs
            self.assertLess(np.linalg.norm(residual), 1e-8 * np.linalg.norm(rhs))

    def test_linearity_at_low_contrast(self):
        spectra = SpectralSet([0.5, 2.0, 8.0], SpectralMode.REAL_WITH_DERIVATIVES)
        background = ForwardModel.simulate(ForwardModel.background_operator(self.grid), self.ends, spectra)
        small = GridFunction(self.grid, 0.01 * self.potential.get_values() / 5.0)
        double = GridFunction(self.grid, 2 * small.get_values())
        first = background.get_values() - ForwardModel.simulate(
            ForwardModel.build_operator(self.grid, small), self.ends, spectra).get_values()
        second = background.get_values() - ForwardModel.simulate(
            ForwardModel.build_operator(self.grid, double), self.ends, spectra).get_values()
        self.assertLess(np.linalg.norm(second - 2 * first) / np.linalg.norm(2 * first), 0.05)

    def test_tsvd_recovers_span(self):
        grid = Grid([1.0], [50])
        rng = np.random.default_rng(11)
        matrix = rng.standard_normal((30, 50)) * np.logspace(0, 3, 30)[:, None]
        metadata = [RowInfo(i, 0, 0, 'value') for i in range(30)]
        scaled = matrix / np.linalg.norm(matrix, axis=1)[:, None]
        _, _, right = la.svd(scaled, full_matrices=False)
        potential = right[:5].T @ np.array([1.0, -2.0, 0.5, 3.0, 1.5])
        system = LslSystem(grid, matrix, matrix @ potential, metadata)
        result = LslSolver.solve_tsvd(system, rank=5)
        recovered = result.get_estimate().get_values()
        self.assertLess(np.linalg.norm(recovered - potential) / np.linalg.norm(potential), 1e-6)
        self.assertEqual(result.get_rank(), 5)
        self.assertIsNone(result.get_threshold())
        self.assertEqual(result.get_method(), MethodType.LSL)

    def test_tsvd_threshold(self):
        grid = Grid([1.0], [50])
        rng = np.random.default_rng(5)
        matrix = rng.standard_normal((30, 50))
        system = LslSystem(grid, matrix, rng.standard_normal(30), [RowInfo(i, 0, 0, 'value') for i in range(30)])
        result = LslSolver.solve_tsvd(system, threshold=0.5, method=MethodType.BORN)
        singular_values = result.get_singular_values()
        self.assertEqual(result.get_rank(), int(np.count_nonzero(singular_values >= 0.5 * singular_values[0])))
        self.assertEqual(result.get_method(), MethodType.BORN)
        self.assertEqual(LslSolver.solve_tsvd(system, threshold=1.0).get_rank(), 1)
        self.assertLess(LslSolver.solve_tsvd(system, threshold=1e-12).get_residual(), 1e-10)
        for rank, threshold in ((None, 0.0), (0, 0.1), (None, None), (None, 1.5)):
            with self.assertRaises(ConfigError):
                LslSolver.solve_tsvd(system, rank, threshold)
        empty = LslSystem(grid, np.zeros((3, 50)), np.ones(3), [RowInfo(i, 0, 0, 'value') for i in range(3)])
        with self.assertRaises(AllTruncated):
            LslSolver.solve_tsvd(empty)

    def test_point_spread_oracle(self):
        grid = Grid([1.0], [101])
        kit = InternalSolutions.build_background(grid, ForwardModel.build_sources(grid, [[0.0]]),
                                                 SpectralSet(SPREAD_POINTS))
        basis = kit.get_basis()
        kernel = basis @ basis.conj().T
        expected = np.sum(np.abs(kernel) ** 2 * grid.get_weights()[None, :], axis=1)
        actual = LslSolver.point_spread_norms(kit)
        self.assertLess(np.linalg.norm(actual - expected) / np.linalg.norm(expected), 1e-8)

    def test_back_projection_flags(self):
        kit, _, factorization = self.__setup(self.source, SpectralSet(SPREAD_POINTS))
        result = LslSolver.back_projection(factorization, kit)
        self.assertEqual(result.get_method(), MethodType.BACKPROJECTION)
        self.assertEqual(result.get_rank(), 0)
        values = result.get_estimate().get_values()
        self.assertTrue(np.all(np.isfinite(values)))
        self.assertTrue(np.all(values[result.get_flags()] == 0))

    def test_resolvent_identity(self):
        kit, data, factorization = self.__setup(self.source, SpectralSet(SPREAD_POINTS))
        solutions = InternalSolutions.data_driven_set(kit, factorization)
        report = LslSolver.verify_rom_identity(factorization, kit, data, kit.get_data(), solutions, self.potential)
        self.assertEqual(len(report), 4)
        for entry in report:
            self.assertLess(entry['resolvent_residual'], 1e-10)
            self.assertGreater(entry['data_norm'], 0.0)

    def test_relative_deviation(self):
        self.assertEqual(relative_deviation([0.0, 0.0], [0.0, 0.0]), 0.0)
        self.assertEqual(relative_deviation([1.0], [0.0]), 1.0)
        self.assertAlmostEqual(relative_deviation([1.0, 0.0], [0.0, 1.0]), np.sqrt(2.0))

    def test_mismatches(self):
        spectra = SpectralSet([0.5, 2.0], SpectralMode.REAL_WITH_DERIVATIVES)
        kit = InternalSolutions.build_background(self.grid, self.source, spectra)
        other = InternalSolutions.build_background(
            self.grid, self.source, SpectralSet([0.5, 3.0], SpectralMode.REAL_WITH_DERIVATIVES))
        with self.assertRaises(ConfigError):
            LslSolver.assemble(InternalSolutions.background_set(kit), InternalSolutions.background_set(other),
                               kit.get_data(), kit.get_data())
        with self.assertRaises(ConfigError):
            LslSolver.cheated_solve(kit, kit.get_data(), None)


if __name__ == '__main__':
    unittest.main()
