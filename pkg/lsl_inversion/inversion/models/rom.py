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
This module defines the data driven reduced order model (S + lambda M) C = B.
"""

import numpy as np
from ..internal.common import config_constants, config_messages
from ..internal.common.config_errors import ConfigError
from ..internal.utils.file_manager import FileManager
from .spectral_set import SpectralSet


class Rom:
    """
    Attributes:
        mass (numpy.ndarray): Hermitian mass matrix M, (mK, mK).
        stiffness (numpy.ndarray): Hermitian stiffness matrix S, (mK, mK).
        moments (numpy.ndarray): moment block B, (mK, K), block rows conj(F(lambda_i)).
        spectra (SpectralSet): spectral set the ROM was built from.
    """

    def __init__(self, mass, stiffness, moments, spectra: SpectralSet):
        mass = np.array(mass)
        stiffness = np.array(stiffness)
        moments = np.array(moments)
        if moments.ndim == 1:
            moments = moments[:, None]
        size = moments.shape[0]
        if mass.shape != (size, size) or stiffness.shape != (size, size) \
                or size != spectra.count() * moments.shape[1]:
            raise ConfigError(config_messages.TRANSFER_SHAPE_ERROR)
        for block in (mass, stiffness, moments):
            block.setflags(write=False)
        self.__mass = mass
        self.__stiffness = stiffness
        self.__moments = moments
        self.__spectra = spectra

    def get_mass(self) -> np.ndarray:
        """Get M"""
        return self.__mass

    def get_stiffness(self) -> np.ndarray:
        """Get S"""
        return self.__stiffness

    def get_moments(self) -> np.ndarray:
        """Get B"""
        return self.__moments

    def get_spectra(self) -> SpectralSet:
        """Get the originating spectral set"""
        return self.__spectra

    def block_size(self) -> int:
        """Number of sources K"""
        return self.__moments.shape[1]

    def order(self) -> int:
        """Number of spectral points m"""
        return self.__spectra.count()

    def size(self) -> int:
        """Dimension mK"""
        return self.__moments.shape[0]

    def is_real(self) -> bool:
        """True when M, S and B are stored in real arithmetic"""
        return not (np.iscomplexobj(self.__mass) or np.iscomplexobj(self.__stiffness)
                    or np.iscomplexobj(self.__moments))

    def mass_eigenvalues(self) -> np.ndarray:
        """Ascending eigenvalues of M, for conditioning diagnostics"""
        return np.linalg.eigvalsh(self.__mass)

    def to_dict(self) -> dict:
        """Checkpoint form, complex entries as [re, im] pairs"""
        return {
            'version': config_constants.CONFIG_SCHEMA_VERSION,
            'spectra': self.__spectra.to_dict(),
            'M': FileManager.encode_complex(self.__mass),
            'S': FileManager.encode_complex(self.__stiffness),
            'B': FileManager.encode_complex(self.__moments)
        }

    @classmethod
    def from_dict(cls, rom_data: dict) -> 'Rom':
        """Restore a checkpoint"""
        spectra = SpectralSet.from_dict(rom_data['spectra'])
        blocks = [FileManager.decode_complex(rom_data[key]) for key in ('M', 'S', 'B')]
        if spectra.is_real():
            blocks = [block.real for block in blocks]
        return cls(blocks[0], blocks[1], blocks[2], spectra)
