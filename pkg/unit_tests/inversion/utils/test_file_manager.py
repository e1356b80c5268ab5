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
from lsl_inversion.inversion.internal.utils.file_manager import FileManager


class MyTestCase(unittest.TestCase):

    def setUp(self):
        self.folder = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.folder.cleanup()

    def test_store_and_read(self):
        path = os.path.join(self.folder.name, 'nested', 'data.json')
        self.assertTrue(FileManager.store_files({'values': np.arange(3), 'ratio': np.float64(0.5)}, path))
        self.assertEqual(FileManager.read_files(path), {'values': [0, 1, 2], 'ratio': 0.5})

    def test_unserializable(self):
        path = os.path.join(self.folder.name, 'data.json')
        self.assertFalse(FileManager.store_files({'values': object()}, path))

    def test_read_missing(self):
        self.assertIsNone(FileManager.read_files(os.path.join(self.folder.name, 'missing.json')))
        broken = os.path.join(self.folder.name, 'broken.json')
        with open(broken, 'w') as handle:
            handle.write('{"version": ')
        self.assertIsNone(FileManager.read_files(broken))

    def test_complex_encoding(self):
        values = np.array([[1 + 2j, -0.5j], [3.0, 0.0]])
        pairs = FileManager.encode_complex(values)
        self.assertEqual(pairs[0][0], [1.0, 2.0])
        self.assertTrue(np.array_equal(FileManager.decode_complex(pairs), values))


if __name__ == '__main__':
    unittest.main()
