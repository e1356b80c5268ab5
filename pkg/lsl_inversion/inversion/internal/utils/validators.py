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
This module provides methods to perform the input validations.
"""
from typing import Sequence
import numpy as np


class Validators:
    """Validator class"""
    @classmethod
    def validate_string(cls, value: str) -> bool:
        """Validate the string

        Args:
            value: value to be checked
        """
        return bool(value and isinstance(value, str) and value.strip())

    @classmethod
    def validate_finite(cls, values) -> bool:
        """Check that an array holds finite numbers only

        Args:
            values: array like object
        """
        try:
            return bool(np.all(np.isfinite(np.asarray(values))))
        except TypeError:
            return False

    @classmethod
    def validate_real(cls, values, tolerance: float = 0.0) -> bool:
        """Check that an array is real valued

        Args:
            values: array like object
            tolerance: largest admissible imaginary part, relative to the largest magnitude
        """
        values = np.asarray(values)
        if not np.iscomplexobj(values):
            return True
        scale = max(float(np.max(np.abs(values), initial=0.0)), 1.0)
        return float(np.max(np.abs(values.imag), initial=0.0)) <= tolerance * scale

    @classmethod
    def validate_positive(cls, values: Sequence[float]) -> bool:
        """Check that every entry is a strictly positive finite number"""
        values = np.asarray(values, dtype=float)
        return bool(values.size > 0 and np.all(np.isfinite(values)) and np.all(values > 0))

    @classmethod
    def validate_distinct(cls, values, tolerance: float = 0.0) -> bool:
        """Check that the entries are pairwise distinct

        Args:
            values: array of complex or real numbers
            tolerance: smallest admissible distance between two entries
        """
        values = np.asarray(values).ravel()
        for i in range(values.size):
            for j in range(i + 1, values.size):
                if abs(values[i] - values[j]) <= tolerance:
                    return False
        return True

    @classmethod
    def validate_symmetric(cls, matrix, tolerance: float) -> bool:
        """Check ``matrix == matrix.T`` (no conjugation) to a relative tolerance"""
        matrix = np.asarray(matrix)
        scale = max(float(np.max(np.abs(matrix), initial=0.0)), np.finfo(float).tiny)
        return float(np.max(np.abs(matrix - matrix.T), initial=0.0)) <= tolerance * scale

