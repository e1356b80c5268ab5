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
This module defines the output of the (block) M-symmetric Lanczos process.
"""

from typing import Optional
import numpy as np
from ..internal.common import config_constants
from ..internal.utils.file_manager import FileManager


class LanczosFactorization:
    """A Q = Q T with Q^* M Q = I.

    In block form the sub diagonal blocks T[k+1, k] are lower triangular with a positive
    diagonal and the super diagonal blocks T[k, k+1] are their adjoints.

    Attributes:
        tridiagonal (numpy.ndarray): (block) tridiagonal T, real unless the data forbid it.
        basis (numpy.ndarray): M-orthonormal Lanczos vectors Q.
        normalization (numpy.ndarray): K x K matrix beta = (B^* M^{-1} B)^{1/2}.
        breakdown_step (int): step of an early termination, None when all steps completed.
    """

    def __init__(self, tridiagonal, basis, normalization, breakdown_step: Optional[int] = None,
                 imaginary_residue: float = 0.0):
        normalization = np.atleast_2d(np.array(normalization))
        tridiagonal = np.array(tridiagonal)
        basis = np.array(basis)
        for block in (tridiagonal, basis, normalization):
            block.setflags(write=False)
        self.__tridiagonal = tridiagonal
        self.__basis = basis
        self.__normalization = normalization
        self.__breakdown_step = breakdown_step
        self.__imaginary_residue = float(imaginary_residue)

    def get_tridiagonal(self) -> np.ndarray:
        """Get T"""
        return self.__tridiagonal

    def get_basis(self) -> np.ndarray:
        """Get Q"""
        return self.__basis

    def get_normalization(self) -> np.ndarray:
        """Get beta as a K x K matrix (1 x 1 for SISO)"""
        return self.__normalization

    def get_breakdown_step(self) -> Optional[int]:
        """Get the breakdown step, None for a complete run"""
        return self.__breakdown_step

    def get_imaginary_residue(self) -> float:
        """Largest relative imaginary part dropped from T"""
        return self.__imaginary_residue

    def block_size(self) -> int:
        """Block size K"""
        return self.__normalization.shape[0]

    def size(self) -> int:
        """Dimension of T"""
        return self.__tridiagonal.shape[0]

    def first_block(self) -> np.ndarray:
        """E_1, the first K columns of the identity of size mK"""
        return np.eye(self.size(), self.block_size())

    def to_dict(self) -> dict:
        """Checkpoint form"""
        return {
            'version': config_constants.CONFIG_SCHEMA_VERSION,
            'T': FileManager.encode_complex(self.__tridiagonal),
            'Q': FileManager.encode_complex(self.__basis),
            'beta': FileManager.encode_complex(self.__normalization),
            'breakdown_step': self.__breakdown_step,
            'real': not np.iscomplexobj(self.__tridiagonal)
        }

    @classmethod
    def from_dict(cls, factorization_data: dict) -> 'LanczosFactorization':
        """Restore a checkpoint"""
        tridiagonal = FileManager.decode_complex(factorization_data['T'])
        normalization = FileManager.decode_complex(factorization_data['beta'])
        basis = FileManager.decode_complex(factorization_data['Q'])
        if factorization_data.get('real', False):
            tridiagonal = tridiagonal.real
            normalization = normalization.real
            if not np.any(basis.imag):
                basis = basis.real
        return cls(tridiagonal, basis, normalization, factorization_data.get('breakdown_step'))
