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
This module provides methods that perform the store and retrieve operations on the
JSON files used by the library (transfer data, checkpoints, configs and reports).
"""

import fcntl
import json
import os
from typing import Optional
import numpy as np
from .logger import Logger


class FileManager:
    """FileManager to handle the JSON files"""

    @classmethod
    def __to_builtin(cls, value):
        if isinstance(value, np.ndarray):
            return value.tolist()
        if isinstance(value, np.generic):
            return value.item()
        raise TypeError('Object of type {0} is not JSON serializable'.format(type(value).__name__))

    @classmethod
    def store_files(cls, json_data: dict, file_path: str) -> bool:
        """Store the file

        Args:
            json_data: Data to be stored.
            file_path: Destination path. Missing parent folders are created.
        Returns:
            True when the file was written.
        """
        try:
            folder = os.path.dirname(os.path.abspath(file_path))
            os.makedirs(folder, exist_ok=True)
            with open(file_path, 'w') as handle:
                fcntl.flock(handle, fcntl.LOCK_EX | fcntl.LOCK_NB)
                json.dump(json_data, handle, indent=2, sort_keys=True, default=cls.__to_builtin)
                fcntl.flock(handle, fcntl.LOCK_UN)
                return True
        except (OSError, TypeError, ValueError) as err:
            Logger.error('Unable to store {0}: {1}'.format(file_path, err))
            return False

    @classmethod
    def read_files(cls, file_path: str) -> Optional[dict]:
        """
        Read the data from a JSON file.

        Args:
            file_path: File path.
        Returns:
            Dictionary from the file, None when it can not be read.
        """
        try:
            with open(file_path, 'r') as handle:
                fcntl.flock(handle, fcntl.LOCK_EX | fcntl.LOCK_NB)
                data = json.load(handle)
                fcntl.flock(handle, fcntl.LOCK_UN)
                return data
        except (OSError, ValueError) as err:
            Logger.debug(err)
            return None

    @classmethod
    def encode_complex(cls, values) -> list:
        """Encode a complex array as nested lists ending in [re, im] pairs"""
        values = np.asarray(values, dtype=complex)
        pairs = np.stack([values.real, values.imag], axis=-1)
        return pairs.tolist()

    @classmethod
    def decode_complex(cls, pairs) -> np.ndarray:
        """Inverse of ``encode_complex``"""
        pairs = np.asarray(pairs, dtype=float)
        return pairs[..., 0] + 1j * pairs[..., 1]
