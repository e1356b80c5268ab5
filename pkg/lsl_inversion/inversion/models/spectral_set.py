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
This module defines the spectral points at which the transfer function is sampled.
"""

from typing import Sequence
import numpy as np
from ..internal.common import config_messages
from ..internal.common.config_errors import ConfigError
from ..internal.utils.validators import Validators
from .spectral_mode import SpectralMode


class SpectralSet:
    """
    Attributes:
        points (numpy.ndarray): the m spectral points. Real dtype in REAL_WITH_DERIVATIVES mode.
        mode (SpectralMode): COMPLEX (conjugate points implicit) or REAL_WITH_DERIVATIVES.
    """

    def __init__(self, points: Sequence[complex], mode: SpectralMode = SpectralMode.COMPLEX):
        mode = SpectralMode(mode)
        points = np.atleast_1d(np.asarray(points))
        if points.size == 0:
            raise ConfigError(config_messages.SPECTRAL_POINTS_EMPTY_ERROR)
        if not Validators.validate_finite(points):
            raise ConfigError(config_messages.NON_FINITE_ERROR + 'spectral points')
        if not Validators.validate_distinct(points):
            raise ConfigError(config_messages.SPECTRAL_POINTS_DISTINCT_ERROR)
        if mode is SpectralMode.COMPLEX:
            points = points.astype(complex)
            if np.any(points.imag <= 0):
                raise ConfigError(config_messages.SPECTRAL_COMPLEX_MODE_ERROR)
        else:
            if np.iscomplexobj(points) and np.any(points.imag != 0):
                raise ConfigError(config_messages.SPECTRAL_REAL_MODE_ERROR)
            points = points.real.astype(float)
        points.setflags(write=False)
        self.__points = points
        self.__mode = mode

    def get_points(self) -> np.ndarray:
        """Get the spectral points"""
        return self.__points

    def get_mode(self) -> SpectralMode:
        """Get the spectral mode"""
        return self.__mode

    def is_real(self) -> bool:
        """True in REAL_WITH_DERIVATIVES mode"""
        return self.__mode is SpectralMode.REAL_WITH_DERIVATIVES

    def count(self) -> int:
        """Number of spectral points m"""
        return self.__points.size

    def to_dict(self) -> dict:
        """Serializable description"""
        return {
            'mode': self.__mode.value,
            'points': [[float(np.real(p)), float(np.imag(p))] for p in self.__points]
        }

    @classmethod
    def from_dict(cls, spectral_data: dict) -> 'SpectralSet':
        """Build from ``to_dict`` output"""
        points = [complex(p[0], p[1]) if isinstance(p, (list, tuple)) else p
                  for p in spectral_data.get('points', list())]
        return cls(points, SpectralMode(spectral_data.get('mode', SpectralMode.COMPLEX.value)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpectralSet):
            return False
        return self.__mode is other.get_mode() and np.array_equal(self.__points, other.get_points())

    def __hash__(self):
        return hash((self.__mode, tuple(self.__points.tolist())))

    def __repr__(self):
        return 'SpectralSet({0}, {1})'.format(self.__points.tolist(), self.__mode.value)
