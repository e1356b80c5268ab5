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

import os
import tempfile
import unittest
import numpy as np
from lsl_inversion import LslInversion
from lsl_inversion.inversion.internal.common.config_errors import ConfigError, LslError
from lsl_inversion.inversion.models import MethodType


class MyTestCase(unittest.TestCase):

    def setUp(self):
        self.sut = LslInversion.get_instance()
        self.output_root = self.sut.get_output_root()
        self.folder = tempfile.TemporaryDirectory()
        self.sut.set_output_root(self.folder.name)

    def tearDown(self):
        self.sut.set_output_root(self.output_root)
        self.folder.cleanup()

    def test_singleton(self):
        self.assertIs(LslInversion.get_instance(), self.sut)
        with self.assertRaises(LslError):
            LslInversion()

    def test_load_config(self):
        config = self.sut.load_config('siso1d', ['grid.nodes=[101]'], seed=5)
        self.assertEqual(config.get_grid().node_count(), 101)
        self.assertEqual(config.get_seed(), 5)
        with self.assertRaises(ConfigError):
            self.sut.load_config('no-such-experiment')

    def test_read_missing_transfer_data(self):
        with self.assertRaises(ConfigError):
            self.sut.read_transfer_data(os.path.join(self.folder.name, 'missing.json'))

    def test_simulate_then_invert(self):
        config = self.sut.load_config('siso1d', ['grid.nodes=[101]'])
        path = os.path.join(self.folder.name, 'transfer.json')
        data = self.sut.simulate(config, path)
        restored = self.sut.read_transfer_data(path)
        self.assertTrue(np.array_equal(restored.get_values(), data.get_values()))
        inversion = self.sut.invert(config, restored)
        self.assertNotIn(MethodType.CHEATED, inversion.get_results())
        self.assertIn(MethodType.LSL, inversion.get_results())
        self.assertTrue(os.path.isfile(os.path.join(self.folder.name, 'siso1d', 'q_lsl.csv')))


if __name__ == '__main__':
    unittest.main()
