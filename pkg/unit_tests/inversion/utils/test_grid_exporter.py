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
from PIL import Image
from lsl_inversion.inversion.internal.common.config_errors import ExportError
from lsl_inversion.inversion.internal.utils.file_manager import FileManager
from lsl_inversion.inversion.internal.utils.grid_exporter import GridExporter
from lsl_inversion.inversion.models import Grid


class MyTestCase(unittest.TestCase):

    def setUp(self):
        self.folder = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.folder.cleanup()

    def test_csv_2d(self):
        grid = Grid([3.0, 1.0], [4, 3])
        values = np.arange(12.0) / 7.0
        path = GridExporter.write_csv(grid, values, os.path.join(self.folder.name, 'field.csv'))
        with open(path) as handle:
            self.assertEqual(handle.readline().strip(), '4,3,1.0,0.5')
            self.assertTrue(handle.readline().startswith('0,'))
        header, restored = GridExporter.read_csv(path)
        self.assertEqual(header, (4, 3, 1.0, 0.5))
        self.assertTrue(np.array_equal(restored, values))

    def test_csv_1d(self):
        grid = Grid([1.0], [5])
        path = GridExporter.write_csv(grid, np.ones(5) + 0j, os.path.join(self.folder.name, 'line.csv'))
        header, restored = GridExporter.read_csv(path)
        self.assertEqual(header, (5, 1, 0.25, 0.0))
        self.assertTrue(np.array_equal(restored, np.ones(5)))

    def test_bad_header(self):
        path = os.path.join(self.folder.name, 'bad.csv')
        with open(path, 'w') as handle:
            handle.write('a,b\n1,2\n')
        with self.assertRaises(ExportError):
            GridExporter.read_csv(path)
        with open(path, 'w') as handle:
            handle.write('3,1,0.5,0.0\n1,2\n')
        with self.assertRaises(ExportError):
            GridExporter.read_csv(path)
        with self.assertRaises(ExportError):
            GridExporter.read_csv(os.path.join(self.folder.name, 'missing.csv'))

    def test_image(self):
        grid = Grid([1.0, 1.0], [4, 3])
        path = GridExporter.write_image(grid, np.arange(12.0), os.path.join(self.folder.name, 'q.png'))
        with Image.open(path) as image:
            self.assertEqual(image.mode, 'L')
            pixels = np.array(image)
        self.assertEqual(pixels.shape, (3, 4))
        self.assertEqual(pixels.dtype, np.uint8)
        # first grid row at the bottom
        self.assertEqual(pixels[0, 0], np.rint(8 / 11 * 255))
        self.assertEqual(pixels[2, 0], 0)
        self.assertEqual(pixels[0, 3], 255)
        sidecar = FileManager.read_files(os.path.join(self.folder.name, 'q.json'))
        self.assertEqual(sidecar['min'], 0.0)
        self.assertEqual(sidecar['max'], 11.0)
        self.assertEqual(sidecar['image'], 'q.png')

    def test_constant_image(self):
        grid = Grid([1.0, 1.0], [3, 3])
        written = GridExporter.write_field(grid, np.full(9, 2.5), self.folder.name, 'flat')
        self.assertEqual([os.path.basename(p) for p in written], ['flat.csv', 'flat.png'])
        with Image.open(written[1]) as image:
            self.assertEqual(image.mode, 'L')
            self.assertTrue(np.all(np.array(image) == 0))
        sidecar = FileManager.read_files(os.path.join(self.folder.name, 'flat.json'))
        self.assertEqual(sidecar['min'], sidecar['max'])

    def test_field_1d_has_no_image(self):
        written = GridExporter.write_field(Grid([1.0], [5]), np.zeros(5), self.folder.name, 'line')
        self.assertEqual(len(written), 1)


if __name__ == '__main__':
    unittest.main()
