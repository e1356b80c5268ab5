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
This module defines the transfer function samples, the only input of the inversion.
"""

from typing import Optional
import numpy as np
from ..internal.common import config_constants, config_messages
from ..internal.common.config_errors import ConfigError
from ..internal.utils.file_manager import FileManager
from ..internal.utils.logger import Logger
from ..internal.utils.validators import Validators
from .spectral_mode import SpectralMode
from .spectral_set import SpectralSet


class TransferData:
    """Sampled transfer matrices F(lambda_j) and, for real points, dF/dlambda(lambda_j).

    The serialized form is a JSON object::

        {"version": 1, "mode": "COMPLEX", "K": 2,
         "points": [{"lambda": [re, im],
                     "F": [[[re, im], [re, im]], [[re, im], [re, im]]],
                     "dF": [[x, x], [x, x]]}]}

    ``F[r][p]`` pairs receiver source ``r`` with emitting source ``p`` (row major).
    ``dF`` is present only in REAL_WITH_DERIVATIVES mode.
    """

    def __init__(self, spectra: SpectralSet, values, derivatives=None):
        values = np.array(values, dtype=complex)
        count = spectra.count()
        if values.ndim != 3 or values.shape[0] != count or values.shape[1] != values.shape[2]:
            raise ConfigError(config_messages.TRANSFER_SHAPE_ERROR)
        if not Validators.validate_finite(values):
            raise ConfigError(config_messages.NON_FINITE_ERROR + 'transfer values')
        for j in range(count):
            if not Validators.validate_symmetric(values[j], config_constants.SYMMETRY_TOLERANCE):
                raise ConfigError(config_messages.TRANSFER_SYMMETRY_ERROR)
        if spectra.is_real():
            if derivatives is None:
                raise ConfigError(config_messages.TRANSFER_DERIVATIVE_MISSING_ERROR)
            if not Validators.validate_real(values, config_constants.SYMMETRY_TOLERANCE):
                raise ConfigError(config_messages.SPECTRAL_REAL_MODE_ERROR)
            values = values.real
            derivatives = np.array(np.real(derivatives), dtype=float)
            if derivatives.shape != values.shape or not Validators.validate_finite(derivatives):
                raise ConfigError(config_messages.TRANSFER_SHAPE_ERROR)
            for j in range(count):
                if not Validators.validate_symmetric(derivatives[j], config_constants.SYMMETRY_TOLERANCE):
                    raise ConfigError(config_messages.TRANSFER_SYMMETRY_ERROR)
            derivatives.setflags(write=False)
            self.__check_definiteness(spectra, values, derivatives)
        else:
            derivatives = None
        values.setflags(write=False)
        self.__spectra = spectra
        self.__values = values
        self.__derivatives = derivatives

    @staticmethod
    def __check_definiteness(spectra, values, derivatives):
        for j, point in enumerate(spectra.get_points()):
            if np.max(np.linalg.eigvalsh(derivatives[j])) >= 0:
                Logger.warning('dF/dlambda is not negative definite at lambda = {0}'.format(point))
            if point > 0 and np.min(np.linalg.eigvalsh(values[j])) <= 0:
                Logger.warning('F is not positive definite at lambda = {0}'.format(point))

    def get_spectra(self) -> SpectralSet:
        """Get the spectral set"""
        return self.__spectra

    def get_values(self) -> np.ndarray:
        """Get F(lambda_j) as an (m, K, K) array"""
        return self.__values

    def get_derivatives(self) -> Optional[np.ndarray]:
        """Get dF/dlambda(lambda_j) as an (m, K, K) array, None in COMPLEX mode"""
        return self.__derivatives

    def get_mode(self) -> SpectralMode:
        """Get the spectral mode"""
        return self.__spectra.get_mode()

    def source_count(self) -> int:
        """Number of sources K"""
        return self.__values.shape[1]

    def to_dict(self) -> dict:
        """Serializable form"""
        points = list()
        for j, point in enumerate(self.__spectra.get_points()):
            entry = {
                'lambda': [float(np.real(point)), float(np.imag(point))],
                'F': FileManager.encode_complex(self.__values[j])
            }
            if self.__derivatives is not None:
                entry['dF'] = self.__derivatives[j].tolist()
            points.append(entry)
        return {
            'version': config_constants.CONFIG_SCHEMA_VERSION,
            'mode': self.get_mode().value,
            'K': self.source_count(),
            'points': points
        }

    @classmethod
    def from_dict(cls, transfer_data: dict) -> 'TransferData':
        """Build from the serialized form"""
        try:
            mode = SpectralMode(transfer_data.get('mode'))
            points = transfer_data['points']
            spectra = SpectralSet([complex(p['lambda'][0], p['lambda'][1]) for p in points], mode)
            values = np.stack([FileManager.decode_complex(p['F']) for p in points])
            derivatives = None
            if mode is SpectralMode.REAL_WITH_DERIVATIVES:
                derivatives = np.array([p['dF'] for p in points], dtype=float)
        except (KeyError, TypeError, ValueError, IndexError) as err:
            raise ConfigError(config_messages.CONFIG_FIELD_ERROR + 'transfer data: ' + str(err))
        return cls(spectra, values, derivatives)
