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
This module defines the uniform tensor grid on which every field lives.
"""

from typing import Optional, Sequence, Tuple
import numpy as np
from ..internal.common import config_messages
from ..internal.common.config_errors import ConfigError


class Grid:
    """Uniform tensor grid on a 1D interval or a 2D rectangle.

    Nodal vectors are flattened with axis 0 fastest, that is node ``(i, j)`` of a
    2D grid is stored at ``i + nx * j``. Quadrature weights are the trapezoidal
    rule, so boundary nodes carry half a cell and corners a quarter.

    Attributes:
        extents (tuple): length of the domain along each axis.
        nodes (tuple): number of nodes along each axis.
        origin (tuple): coordinates of the first node.
    """

    def __init__(self, extents: Sequence[float], nodes: Sequence[int],
                 origin: Optional[Sequence[float]] = None):
        extents = tuple(float(e) for e in np.atleast_1d(extents))
        nodes = tuple(int(n) for n in np.atleast_1d(nodes))
        if len(extents) not in (1, 2):
            raise ConfigError(config_messages.GRID_DIM_ERROR + str(len(extents)))
        if len(nodes) != len(extents) or min(nodes) < 2 or min(extents) <= 0 \
                or not np.all(np.isfinite(extents)):
            raise ConfigError(config_messages.GRID_SHAPE_ERROR)
        if origin is None:
            origin = (0.0,) * len(extents)
        origin = tuple(float(o) for o in np.atleast_1d(origin))
        if len(origin) != len(extents):
            raise ConfigError(config_messages.GRID_SHAPE_ERROR)
        self.__extents = extents
        self.__nodes = nodes
        self.__origin = origin
        self.__spacing = tuple(e / (n - 1) for e, n in zip(extents, nodes))
        self.__weights = self.__build_weights()

    def __build_weights(self) -> np.ndarray:
        weights = np.ones(1)
        # kron(later axis, earlier axis) keeps axis 0 fastest
        for axis in range(self.get_dim()):
            axis_weights = self.axis_weights(axis)
            weights = np.kron(axis_weights, weights)
        return weights

    def get_dim(self) -> int:
        """Get the grid dimension (1 or 2)"""
        return len(self.__extents)

    def get_extents(self) -> Tuple[float, ...]:
        """Get the domain extents"""
        return self.__extents

    def get_nodes(self) -> Tuple[int, ...]:
        """Get the node counts per axis"""
        return self.__nodes

    def get_origin(self) -> Tuple[float, ...]:
        """Get the coordinates of the first node"""
        return self.__origin

    def get_spacing(self) -> Tuple[float, ...]:
        """Get the spacing per axis"""
        return self.__spacing

    def node_count(self) -> int:
        """Get the total number of nodes"""
        return int(np.prod(self.__nodes))

    def get_weights(self) -> np.ndarray:
        """Get a copy of the trapezoidal quadrature weights of every node"""
        return self.__weights.copy()

    def volume(self) -> float:
        """Get the measure of the domain"""
        return float(np.prod(self.__extents))

    def axis_weights(self, axis: int) -> np.ndarray:
        """Trapezoidal weights of a single axis"""
        weights = np.full(self.__nodes[axis], self.__spacing[axis])
        weights[0] *= 0.5
        weights[-1] *= 0.5
        return weights

    def axis_coordinates(self, axis: int) -> np.ndarray:
        """Node coordinates along one axis"""
        return self.__origin[axis] + self.__spacing[axis] * np.arange(self.__nodes[axis])

    def coordinates(self) -> np.ndarray:
        """Node coordinates as a (node_count, dim) array, axis 0 fastest"""
        axes = [self.axis_coordinates(axis) for axis in range(self.get_dim())]
        mesh = np.meshgrid(*axes, indexing='ij')
        return np.stack([m.ravel(order='F') for m in mesh], axis=1)

    def contains(self, point: Sequence[float], tolerance: float = 1e-12) -> bool:
        """Check whether a point lies in the closed domain"""
        point = np.atleast_1d(np.asarray(point, dtype=float))
        if point.size != self.get_dim():
            return False
        for axis in range(self.get_dim()):
            slack = tolerance * self.__extents[axis]
            low = self.__origin[axis]
            if point[axis] < low - slack or point[axis] > low + self.__extents[axis] + slack:
                return False
        return True

    def nearest_node(self, point: Sequence[float]) -> int:
        """Flat index of the node nearest to ``point``"""
        point = np.atleast_1d(np.asarray(point, dtype=float))
        index = 0
        stride = 1
        for axis in range(self.get_dim()):
            position = (point[axis] - self.__origin[axis]) / self.__spacing[axis]
            i = int(np.clip(np.rint(position), 0, self.__nodes[axis] - 1))
            index += i * stride
            stride *= self.__nodes[axis]
        return index

    def to_array(self, values) -> np.ndarray:
        """Reshape a flat nodal vector to an array of shape ``nodes``"""
        return np.reshape(np.asarray(values), self.__nodes, order='F')

    def flatten(self, array) -> np.ndarray:
        """Flatten an array of shape ``nodes`` to a nodal vector"""
        return np.asarray(array).ravel(order='F')

    def inner(self, f, g) -> complex:
        """Quadrature inner product sum_i w_i conj(f_i) g_i"""
        return np.sum(self.__weights * np.conj(np.asarray(f)) * np.asarray(g))

    def norm(self, f) -> float:
        """Weighted L2 norm of a nodal vector or of the columns of a nodal block"""
        f = np.asarray(f)
        if f.ndim == 1:
            return float(np.sqrt(np.sum(self.__weights * np.abs(f) ** 2)))
        return float(np.sqrt(np.sum(self.__weights[:, None] * np.abs(f) ** 2)))

    def refine(self, factor: int) -> 'Grid':
        """Grid with ``factor`` times more cells per axis on the same domain"""
        factor = int(factor)
        if factor < 1:
            raise ConfigError(config_messages.GRID_SHAPE_ERROR)
        nodes = tuple((n - 1) * factor + 1 for n in self.__nodes)
        return Grid(self.__extents, nodes, self.__origin)

    def to_dict(self) -> dict:
        """Serializable description of the grid"""
        return {
            'extents': list(self.__extents),
            'nodes': list(self.__nodes),
            'origin': list(self.__origin)
        }

    @classmethod
    def from_dict(cls, grid_data: dict) -> 'Grid':
        """Build a grid from ``to_dict`` output or a config section"""
        return cls(grid_data.get('extents'), grid_data.get('nodes'), grid_data.get('origin'))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Grid):
            return False
        return self.__extents == other.get_extents() and self.__nodes == other.get_nodes() \
            and self.__origin == other.get_origin()

    def __hash__(self):
        return hash((self.__extents, self.__nodes, self.__origin))

    def __repr__(self):
        return 'Grid(extents={0}, nodes={1}, origin={2})'.format(self.__extents, self.__nodes, self.__origin)
