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
from lsl_inversion.inversion.internal.common.config_errors import (Breakdown, ConfigError, IllConditionedMass,
                                                                   RankDeficientBlock, SingularPencil)
from lsl_inversion.inversion.lanczos import LanczosProcess
from lsl_inversion.inversion.models import Bump, Grid, LanczosFactorization, Rom, SpectralMode, SpectralSet
from lsl_inversion.inversion.romgen import RomGenerator

SPREAD_POINTS = [k + 1j * k for k in (0.25, 1.0, 4.0, 16.0)]
WIDE_POINTS = [k + 1j * k for k in (1.0, 16.0, 256.0)]
REAL_POINTS = [1.0, 16.0, 256.0]


def pencil_check(test, rom, factorization):
    basis = factorization.get_basis()
    orthogonality = basis.conj().T @ rom.get_mass() @ basis - np.eye(rom.size())
    test.assertLess(np.max(np.abs(orthogonality)), 1e-10)
    expected = la.eigh(rom.get_stiffness(), rom.get_mass(), eigvals_only=True)
    actual = np.sort(la.eigvalsh(factorization.get_tridiagonal()))
    test.assertLess(np.max(np.abs(actual - expected)), 1e-8 * np.max(np.abs(expected)))
    tridiagonal = factorization.get_tridiagonal()
    test.assertEqual(np.max(np.abs(tridiagonal - tridiagonal.conj().T)), 0.0)
    residual = la.solve(rom.get_mass(), rom.get_stiffness() @ basis) - basis @ tridiagonal
    test.assertLess(np.linalg.norm(residual), 1e-6 * np.linalg.norm(tridiagonal))


class MyTestCase(unittest.TestCase):

    def setUp(self):
        self.grid = Grid([1.0], [201])
        bumps = [Bump({'center': 0.3, 'width': 0.05, 'amplitude': 5.0}, 1)]
        self.operator = ForwardModel.build_operator(self.grid, ExperimentHandler.make_medium(self.grid, bumps))
        self.source = ForwardModel.build_sources(self.grid, [[0.0]])
        self.ends = ForwardModel.build_sources(self.grid, [[0.0], [1.0]])

    def __rom(self, sources, spectra):
        return RomGenerator.build_rom(ForwardModel.simulate(self.operator, sources, spectra))

    def test_siso_complex(self):
        rom = self.__rom(self.source, SpectralSet(SPREAD_POINTS))
        factorization = LanczosProcess.factorize(rom)
        pencil_check(self, rom, factorization)
        tridiagonal = factorization.get_tridiagonal()
        self.assertTrue(np.isrealobj(tridiagonal))
        self.assertTrue(np.all(np.diag(tridiagonal, 1) > 0))
        self.assertLess(factorization.get_imaginary_residue(), 1e-10)
        self.assertIsNone(factorization.get_breakdown_step())
        self.assertEqual(factorization.get_normalization().shape, (1, 1))

    def test_transfer_in_lanczos_coordinates(self):
        rom = self.__rom(self.source, SpectralSet(SPREAD_POINTS))
        factorization = LanczosProcess.factorize(rom)
        for shift in (2.0 + 1.0j, 0.7 + 3.0j):
            expected = RomGenerator.rom_transfer(rom, shift)
            actual = LanczosProcess.rom_transfer_lanczos(factorization, shift)
            self.assertLess(np.linalg.norm(actual - expected) / np.linalg.norm(expected), 1e-8)

    def test_determinism(self):
        rom = self.__rom(self.ends, SpectralSet(REAL_POINTS, SpectralMode.REAL_WITH_DERIVATIVES))
        first = LanczosProcess.factorize(rom)
        second = LanczosProcess.factorize(rom)
        self.assertTrue(np.array_equal(first.get_tridiagonal(), second.get_tridiagonal()))
        self.assertTrue(np.array_equal(first.get_basis(), second.get_basis()))
        self.assertTrue(np.array_equal(first.get_normalization(), second.get_normalization()))
        restored = LanczosFactorization.from_dict(first.to_dict())
        self.assertTrue(np.isrealobj(restored.get_tridiagonal()))
        self.assertTrue(np.array_equal(restored.get_tridiagonal(), first.get_tridiagonal()))
        self.assertTrue(np.array_equal(restored.get_basis(), first.get_basis()))

    def test_block_real(self):
        rom = self.__rom(self.ends, SpectralSet(REAL_POINTS, SpectralMode.REAL_WITH_DERIVATIVES))
        factorization = LanczosProcess.block_lanczos(rom)
        pencil_check(self, rom, factorization)
        self.assertTrue(np.isrealobj(factorization.get_tridiagonal()))
        self.assertEqual(factorization.block_size(), 2)
        normalization = factorization.get_normalization()
        self.assertTrue(np.allclose(normalization, normalization.T, rtol=0, atol=1e-14))
        self.assertGreater(np.min(la.eigvalsh(normalization)), 0.0)
        gram = rom.get_moments().T @ la.solve(rom.get_mass(), rom.get_moments())
        self.assertTrue(np.allclose(normalization @ normalization, gram, rtol=0, atol=1e-8 * np.max(np.abs(gram))))
        coupling = factorization.get_tridiagonal()[2:4, 0:2]
        self.assertEqual(coupling[0, 1], 0.0)
        self.assertTrue(np.all(np.diag(coupling) > 0))

    def test_first_block_is_m_orthonormal(self):
        rom = self.__rom(self.ends, SpectralSet(REAL_POINTS, SpectralMode.REAL_WITH_DERIVATIVES))
        factorization = LanczosProcess.block_lanczos(rom)
        first = factorization.get_basis()[:, :2]
        self.assertLess(np.max(np.abs(first.T @ rom.get_mass() @ first - np.eye(2))), 1e-10)
        start = la.solve(rom.get_mass(), rom.get_moments())
        rebuilt = first @ factorization.get_normalization()
        self.assertLess(np.linalg.norm(rebuilt - start) / np.linalg.norm(start), 1e-8)

    def test_diagonal_scaling_invariance(self):
        rom = self.__rom(self.ends, SpectralSet(WIDE_POINTS))
        scale = np.geomspace(1e-3, 1e3, rom.size())
        outer = np.outer(scale, scale)
        scaled = Rom(rom.get_mass() * outer, rom.get_stiffness() * outer, rom.get_moments() * scale[:, None],
                     rom.get_spectra())
        first = LanczosProcess.block_lanczos(rom)
        second = LanczosProcess.block_lanczos(scaled)
        tridiagonal = first.get_tridiagonal()
        self.assertLess(np.max(np.abs(second.get_tridiagonal() - tridiagonal)), 1e-8 * np.max(np.abs(tridiagonal)))
        normalization = first.get_normalization()
        self.assertLess(np.max(np.abs(second.get_normalization() - normalization)),
                        1e-8 * np.max(np.abs(normalization)))
        basis = first.get_basis()
        self.assertLess(np.linalg.norm(scale[:, None] * second.get_basis() - basis) / np.linalg.norm(basis), 1e-8)

    def test_block_complex_off_diagonal_blocks(self):
        rom = self.__rom(self.ends, SpectralSet(WIDE_POINTS))
        factorization = LanczosProcess.block_lanczos(rom)
        pencil_check(self, rom, factorization)
        tridiagonal = factorization.get_tridiagonal()
        for k in range(2):
            coupling = tridiagonal[2 * k + 2:2 * k + 4, 2 * k:2 * k + 2]
            self.assertEqual(coupling[0, 1], 0.0)
            self.assertTrue(np.all(np.real(np.diag(coupling)) > 0))
            self.assertTrue(np.all(np.imag(np.diag(coupling)) == 0))
            self.assertTrue(np.array_equal(tridiagonal[2 * k:2 * k + 2, 2 * k + 2:2 * k + 4], coupling.conj().T))
        self.assertTrue(np.all(tridiagonal[4:, :2] == 0))

    def test_single_source_block_equals_siso(self):
        rom = self.__rom(self.source, SpectralSet(SPREAD_POINTS))
        siso = LanczosProcess.m_symmetric_lanczos(rom)
        block = LanczosProcess.block_lanczos(rom)
        scale = np.max(np.abs(siso.get_tridiagonal()))
        self.assertLess(np.max(np.abs(block.get_tridiagonal() - siso.get_tridiagonal())), 1e-10 * scale)
        self.assertAlmostEqual(abs(block.get_normalization()[0, 0] - siso.get_normalization()[0, 0]), 0.0,
                               places=12)

    def test_breakdown(self):
        spectra = SpectralSet([1.0, 2.0, 3.0, 4.0], SpectralMode.REAL_WITH_DERIVATIVES)
        rom = Rom(np.eye(4), np.diag([1.0, 2.0, 3.0, 4.0]), [[1.0], [0.0], [0.0], [0.0]], spectra)
        with self.assertRaises(Breakdown) as context:
            LanczosProcess.m_symmetric_lanczos(rom)
        self.assertEqual(context.exception.step, 1)
        self.assertEqual(context.exception.factorization.size(), 1)
        partial = LanczosProcess.factorize(rom, allow_breakdown=True)
        self.assertEqual(partial.get_breakdown_step(), 1)
        self.assertEqual(partial.get_tridiagonal()[0, 0], 1.0)

    def test_rank_deficient_block(self):
        spectra = SpectralSet([1.0, 2.0], SpectralMode.REAL_WITH_DERIVATIVES)
        moments = np.eye(4, 2)
        rom = Rom(np.eye(4), np.diag([1.0, 2.0, 3.0, 4.0]), moments, spectra)
        with self.assertRaises(RankDeficientBlock) as context:
            LanczosProcess.block_lanczos(rom)
        self.assertEqual(context.exception.step, 1)

    def test_indefinite_mass(self):
        spectra = SpectralSet([1.0, 2.0], SpectralMode.REAL_WITH_DERIVATIVES)
        rom = Rom(np.diag([1.0, -1.0]), np.eye(2), [[1.0], [1.0]], spectra)
        with self.assertRaises(IllConditionedMass):
            LanczosProcess.factorize(rom)

    def test_siso_needs_single_source(self):
        rom = self.__rom(self.ends, SpectralSet([0.5, 2.0], SpectralMode.REAL_WITH_DERIVATIVES))
        with self.assertRaises(ConfigError):
            LanczosProcess.m_symmetric_lanczos(rom)

    def test_singular_shift(self):
        factorization = LanczosFactorization([[1.0]], [[1.0]], [[1.0]])
        with self.assertRaises(SingularPencil):
            LanczosProcess.resolvent_columns(factorization, -1.0)

    def test_resolvent_powers(self):
        rom = self.__rom(self.source, SpectralSet(SPREAD_POINTS))
        factorization = LanczosProcess.factorize(rom)
        shift = 2.5
        first = LanczosProcess.resolvent_columns(factorization, shift)
        second = LanczosProcess.resolvent_columns(factorization, shift, power=2)
        shifted = factorization.get_tridiagonal() + shift * np.eye(factorization.size())
        self.assertTrue(np.allclose(shifted @ second, first, rtol=1e-10, atol=1e-14))


if __name__ == '__main__':
    unittest.main()
