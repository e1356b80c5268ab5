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
This module writes grid fields as CSV files and grayscale images, and reads the CSV files back.
"""

import os
from typing import Tuple
import numpy as np
from PIL import Image
from ..common import config_constants, config_messages
from ..common.config_errors import ExportError
from .file_manager import FileManager
from .logger import Logger


class GridExporter:
    """CSV layout: a header line ``nx,ny,hx,hy`` followed by ny rows of nx values.

    Row ``j`` holds the nodes with second index ``j``; 1D fields have ny = 1 and hy = 0.
    """

    @classmethod
    def __layout(cls, grid) -> Tuple[int, int, float, float]:
        nodes = grid.get_nodes()
        spacing = grid.get_spacing()
        if grid.get_dim() == 1:
            return nodes[0], 1, spacing[0], 0.0
        return nodes[0], nodes[1], spacing[0], spacing[1]

    @classmethod
    def write_csv(cls, grid, values, file_path: str) -> str:
        """Write a real nodal vector as a CSV grid file

        Args:
            grid: Grid of the field.
            values: flat nodal values, axis 0 fastest.
            file_path: destination.
        Returns:
            The path written.
        """
        nx, ny, hx, hy = cls.__layout(grid)
        rows = np.real(np.asarray(values)).astype(float).reshape(ny, nx)
        try:
            os.makedirs(os.path.dirname(os.path.abspath(file_path)), exist_ok=True)
            with open(file_path, 'w') as handle:
                handle.write('{0},{1},{2!r},{3!r}\n'.format(nx, ny, float(hx), float(hy)))
                np.savetxt(handle, rows, delimiter=',', fmt='%.17g')
        except OSError as err:
            raise ExportError(config_messages.EXPORT_IO_ERROR + file_path + ': ' + str(err))
        return file_path

    @classmethod
    def read_csv(cls, file_path: str) -> Tuple[Tuple[int, int, float, float], np.ndarray]:
        """Read a CSV grid file

        Returns:
            ((nx, ny, hx, hy), flat values with axis 0 fastest).
        """
        try:
            with open(file_path, 'r') as handle:
                header = handle.readline().strip().split(',')
                rows = np.loadtxt(handle, delimiter=',', ndmin=2)
        except (OSError, ValueError) as err:
            raise ExportError(config_messages.EXPORT_IO_ERROR + file_path + ': ' + str(err))
        try:
            nx, ny = int(header[0]), int(header[1])
            hx, hy = float(header[2]), float(header[3])
        except (IndexError, ValueError):
            raise ExportError(config_messages.CSV_HEADER_ERROR + file_path)
        if rows.shape != (ny, nx):
            raise ExportError(config_messages.CSV_HEADER_ERROR + file_path)
        return (nx, ny, hx, hy), rows.ravel()

    @classmethod
    def write_image(cls, grid, values, file_path: str) -> str:
        """Write an 8 bit grayscale PNG of a 2D field with a JSON sidecar holding the scaling

        The first grid row is drawn at the bottom of the image.
        """
        nx, ny, _, _ = cls.__layout(grid)
        field = np.real(np.asarray(values)).reshape(ny, nx)
        low = float(np.min(field))
        high = float(np.max(field))
        if high > low:
            scaled = (field - low) / (high - low)
        else:
            scaled = np.zeros_like(field)
        pixels = np.rint(scaled * config_constants.IMAGE_LEVELS).astype(np.uint8)
        try:
            os.makedirs(os.path.dirname(os.path.abspath(file_path)), exist_ok=True)
            Image.fromarray(np.ascontiguousarray(np.flipud(pixels))).save(file_path, format='PNG')
        except (OSError, ValueError) as err:
            raise ExportError(config_messages.EXPORT_IO_ERROR + file_path + ': ' + str(err))
        sidecar = os.path.splitext(file_path)[0] + '.json'
        cls.write_json({'image': os.path.basename(file_path), 'min': low, 'max': high,
                        'scaling': 'linear', 'levels': config_constants.IMAGE_LEVELS + 1}, sidecar)
        return file_path

    @classmethod
    def write_field(cls, grid, values, folder: str, name: str) -> list:
        """CSV file plus, for 2D grids, a grayscale image"""
        written = [cls.write_csv(grid, values, os.path.join(folder, name + '.csv'))]
        if grid.get_dim() == 2:
            written.append(cls.write_image(grid, values, os.path.join(folder, name + '.png')))
        return written

    @classmethod
    def write_json(cls, json_data: dict, file_path: str) -> str:
        """Store a JSON document, raising on failure"""
        if not FileManager.store_files(json_data, file_path):
            raise ExportError(config_messages.EXPORT_IO_ERROR + file_path)
        Logger.debug('Wrote ' + file_path)
        return file_path

    @classmethod
    def write_internal_solutions(cls, solutions, folder: str, prefix: str = 'internal') -> list:
        """One CSV per spectral point and source, real and imaginary parts in separate files"""
        written = list()
        grid = solutions.get_grid()
        for j in range(solutions.get_spectra().count()):
            block = solutions.get_values(j)
            for p in range(block.shape[1]):
                name = '{0}_l{1}_s{2}'.format(prefix, j, p)
                written.append(cls.write_csv(grid, block[:, p].real, os.path.join(folder, name + '_re.csv')))
                if np.iscomplexobj(block):
                    written.append(cls.write_csv(grid, block[:, p].imag, os.path.join(folder, name + '_im.csv')))
        return written
