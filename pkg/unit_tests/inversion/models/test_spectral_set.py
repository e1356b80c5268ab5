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
from lsl_inversion.inversion.models import SpectralMode, SpectralSet


class MyTestCase(unittest.TestCase):

    def test_complex_mode(self):
        spectra = SpectralSet([1 + 1j, 2 + 0.5j])
        self.assertEqual(spectra.get_mode(), SpectralMode.COMPLEX)
        self.assertFalse(spectra.is_real())
        self.assertEqual(spectra.count(), 2)
        self.assertEqual(SpectralSet.from_dict(spectra.to_dict()), spectra)

    def test_real_mode(self):
        spectra = SpectralSet([-0.1, 0.5, 2.0], 'REAL_WITH_DERIVATIVES')
        self.assertTrue(spectra.is_real())
        self.assertFalse(np.iscomplexobj(spectra.get_points()))
        self.assertEqual(SpectralSet.from_dict(spectra.to_dict()), spectra)

    def test_invalid(self):
        for points, mode in (([], SpectralMode.COMPLEX),
                             ([1 + 1j, 1 + 1j], SpectralMode.COMPLEX),
                             ([1.0 + 0j], SpectralMode.COMPLEX),
                             ([1 - 1j], SpectralMode.COMPLEX),
                             ([1 + 1j], SpectralMode.REAL_WITH_DERIVATIVES),
                             ([float('inf')], SpectralMode.REAL_WITH_DERIVATIVES)):
            with self.assertRaises(ConfigError):
                SpectralSet(points, mode)
        with self.assertRaises(ValueError):
            SpectralSet([1.0], 'UNKNOWN')


if __name__ == '__main__':
    unittest.main()
