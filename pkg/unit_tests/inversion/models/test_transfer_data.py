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
from lsl_inversion.inversion.internal.common.config_errors import ConfigError
from lsl_inversion.inversion.models import SpectralMode, SpectralSet, TransferData


class MyTestCase(unittest.TestCase):

    def setUp(self):
        self.real_spectra = SpectralSet([0.5, 1.0], SpectralMode.REAL_WITH_DERIVATIVES)
        self.values = np.array([[[2.0, 0.5], [0.5, 1.0]], [[1.5, 0.25], [0.25, 0.75]]])
        self.derivatives = -np.array([[[1.0, 0.1], [0.1, 0.5]], [[0.5, 0.05], [0.05, 0.25]]])

    def test_real_mode(self):
        data = TransferData(self.real_spectra, self.values, self.derivatives)
        self.assertEqual(data.get_mode(), SpectralMode.REAL_WITH_DERIVATIVES)
        self.assertEqual(data.source_count(), 2)
        self.assertFalse(np.iscomplexobj(data.get_values()))
        self.assertTrue(np.array_equal(data.get_derivatives(), self.derivatives))
        restored = TransferData.from_dict(data.to_dict())
        self.assertEqual(restored.get_spectra(), self.real_spectra)
        self.assertTrue(np.array_equal(restored.get_values(), data.get_values()))
        self.assertTrue(np.array_equal(restored.get_derivatives(), data.get_derivatives()))

    def test_complex_mode_drops_derivatives(self):
        spectra = SpectralSet([1 + 1j, 2 + 2j])
        data = TransferData(spectra, self.values * (1 - 0.5j), self.derivatives)
        self.assertIsNone(data.get_derivatives())
        self.assertTrue(np.iscomplexobj(data.get_values()))
        self.assertEqual(data.to_dict()['mode'], 'COMPLEX')
        self.assertNotIn('dF', data.to_dict()['points'][0])

    def test_invalid(self):
        with self.assertRaises(ConfigError):
            TransferData(self.real_spectra, self.values)
        with self.assertRaises(ConfigError):
            TransferData(self.real_spectra, self.values[:1], self.derivatives[:1])
        skewed = self.values.copy()
        skewed[0, 0, 1] += 0.1
        with self.assertRaises(ConfigError):
            TransferData(self.real_spectra, skewed, self.derivatives)
        broken = self.values.copy()
        broken[1, 1, 1] = np.nan
        with self.assertRaises(ConfigError):
            TransferData(self.real_spectra, broken, self.derivatives)
        with self.assertRaises(ConfigError):
            TransferData(self.real_spectra, self.values * 1j, self.derivatives)
        with self.assertRaises(ConfigError):
            TransferData.from_dict({'mode': 'COMPLEX', 'points': [{'lambda': [1.0, 1.0]}]})


if __name__ == '__main__':
    unittest.main()
