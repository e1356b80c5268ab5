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
This module defines the outcome of one reconstruction method.
"""

from typing import Optional
import numpy as np
from .grid_function import GridFunction
from .method_type import MethodType


class InversionResult:
    """
    Attributes:
        estimate (GridFunction): recovered real potential.
        method (MethodType): method tag.
        singular_values (numpy.ndarray): spectrum of W_real, empty for back projection.
        rank (int): retained rank, 0 when no SVD was used.
        threshold (float): relative threshold of the rank policy, None for an explicit rank.
        residual (float): ||W q - dF|| / ||dF||, 0 when dF = 0.
        flags (numpy.ndarray): nodes whose estimate was zeroed because of a degenerate denominator.
    """

    def __init__(self, estimate: GridFunction, method: MethodType, singular_values=None,
                 rank: int = 0, threshold: Optional[float] = None, residual: float = 0.0,
                 flags=None):
        self.__estimate = estimate
        self.__method = MethodType(method)
        self.__singular_values = np.array(singular_values if singular_values is not None else [],
                                          dtype=float)
        self.__rank = int(rank)
        self.__threshold = threshold
        self.__residual = float(residual)
        if flags is None:
            flags = np.zeros(estimate.get_grid().node_count(), dtype=bool)
        self.__flags = np.array(flags, dtype=bool)

    def get_estimate(self) -> GridFunction:
        """Get q_hat"""
        return self.__estimate

    def get_method(self) -> MethodType:
        """Get the method tag"""
        return self.__method

    def get_singular_values(self) -> np.ndarray:
        """Get the singular values, largest first"""
        return self.__singular_values

    def get_rank(self) -> int:
        """Get the retained rank"""
        return self.__rank

    def get_threshold(self) -> Optional[float]:
        """Get the relative threshold"""
        return self.__threshold

    def get_residual(self) -> float:
        """Get the relative residual"""
        return self.__residual

    def get_flags(self) -> np.ndarray:
        """Get the degenerate node mask"""
        return self.__flags

    def to_dict(self) -> dict:
        """JSON metadata of the result"""
        return {
            'method': self.__method.value,
            'rank': self.__rank,
            'threshold': self.__threshold,
            'residual': self.__residual,
            'singular_values': self.__singular_values.tolist(),
            'flagged_nodes': int(np.count_nonzero(self.__flags))
        }
