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
This module defines the experiment configuration read from the versioned JSON config files.
"""

import copy
import json
import os
from typing import List, Optional
from ..internal.common import config_constants, config_messages
from ..internal.common.config_errors import ConfigError
from ..internal.utils.file_manager import FileManager
from ..internal.utils.validators import Validators
from .grid import Grid
from .method_type import MethodType
from .spectral_set import SpectralSet

PLACEMENTS_2D = ('perimeter', 'top', 'bottom', 'left', 'right', 'random')
PLACEMENTS_1D = ('left', 'ends')
CONFIG_FOLDER = os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))),
                             'configs')


class Bump:
    """Gaussian bump a * exp(-|x - c|^2 / (2 sigma^2)), sigma given per axis"""

    def __init__(self, bump_data: dict, dim: int):
        center = bump_data.get('center', list())
        width = bump_data.get('width', 0.0)
        if not isinstance(center, list):
            center = [center]
        if not isinstance(width, list):
            width = [width] * dim
        if len(center) != dim or len(width) != dim:
            raise ConfigError(config_messages.CONFIG_FIELD_ERROR + 'medium.bumps')
        if not Validators.validate_positive(width):
            raise ConfigError(config_messages.BUMP_WIDTH_ERROR)
        amplitude = bump_data.get('amplitude', 0.0)
        if isinstance(amplitude, (list, dict, str)) or not Validators.validate_finite(amplitude):
            raise ConfigError(config_messages.CONFIG_FIELD_ERROR + 'medium.bumps.amplitude')
        self.__center = [float(c) for c in center]
        self.__width = [float(w) for w in width]
        self.__amplitude = float(amplitude)

    def get_center(self) -> List[float]:
        """Get the bump center"""
        return self.__center

    def get_width(self) -> List[float]:
        """Get the widths per axis"""
        return self.__width

    def get_amplitude(self) -> float:
        """Get the amplitude"""
        return self.__amplitude


class ExperimentConfig:
    """Experiment configuration.

    A config file looks like::

        {"version": 1, "name": "experiment1",
         "grid": {"extents": [1.0, 1.0], "nodes": [41, 41]},
         "data_refinement": 1,
         "medium": {"bumps": [{"center": [0.3, 0.6], "width": 0.08, "amplitude": 4.0}]},
         "sources": {"count": 8, "placement": "perimeter", "width": 0.0},
         "spectra": {"mode": "REAL_WITH_DERIVATIVES", "points": [0.5, 1.0, 2.0]},
         "inversion": {"threshold": 0.001, "rank": null, "mass_ratio": 1e-13},
         "methods": ["LSL", "BORN", "CHEATED", "BACKPROJECTION"],
         "diagnostics": {"held_out": [3.0]},
         "output": {"directory": "experiment1"},
         "seed": 0}
    """

    def __init__(self, config_data: dict):
        if not isinstance(config_data, dict):
            raise ConfigError(config_messages.CONFIG_FIELD_ERROR + 'root')
        version = config_data.get('version')
        if version != config_constants.CONFIG_SCHEMA_VERSION:
            raise ConfigError(config_messages.CONFIG_VERSION_ERROR + str(version))
        self.__config_data = copy.deepcopy(config_data)
        name = config_data.get('name', 'experiment')
        if not Validators.validate_string(name):
            raise ConfigError(config_messages.CONFIG_FIELD_ERROR + 'name')
        self.__name = name.strip()
        self.__grid = Grid.from_dict(config_data.get('grid', dict()))
        refinement = config_data.get('data_refinement', 1)
        if not isinstance(refinement, int) or refinement < 1:
            raise ConfigError(config_messages.CONFIG_FIELD_ERROR + 'data_refinement')
        self.__data_refinement = refinement
        self.__bumps = [Bump(bump, self.__grid.get_dim())
                        for bump in config_data.get('medium', dict()).get('bumps', list())]
        self.__parse_sources(config_data.get('sources', dict()))
        try:
            self.__spectra = SpectralSet.from_dict(config_data.get('spectra', dict()))
        except (TypeError, ValueError) as err:
            raise ConfigError(config_messages.CONFIG_FIELD_ERROR + 'spectra: ' + str(err))
        self.__parse_inversion(config_data.get('inversion', dict()))
        try:
            self.__methods = [MethodType(method) for method in
                              config_data.get('methods', [MethodType.LSL.value])]
        except ValueError as err:
            raise ConfigError(config_messages.METHOD_UNKNOWN_ERROR + str(err))
        diagnostics = config_data.get('diagnostics', dict())
        self.__held_out = [complex(p[0], p[1]) if isinstance(p, list) else float(p)
                           for p in diagnostics.get('held_out', list())]
        self.__output_directory = config_data.get('output', dict()).get('directory', self.__name)
        seed = config_data.get('seed', 0)
        if not isinstance(seed, int):
            raise ConfigError(config_messages.CONFIG_FIELD_ERROR + 'seed')
        self.__seed = seed

    def __parse_sources(self, source_data: dict):
        count = source_data.get('count', 1)
        placement = source_data.get('placement', 'perimeter' if self.__grid.get_dim() == 2 else 'left')
        allowed = PLACEMENTS_2D if self.__grid.get_dim() == 2 else PLACEMENTS_1D
        if not isinstance(count, int) or count < 1 or placement not in allowed:
            raise ConfigError(config_messages.CONFIG_FIELD_ERROR + 'sources')
        if placement == 'perimeter' and count % 4 != 0:
            raise ConfigError(config_messages.CONFIG_FIELD_ERROR + 'sources.count (perimeter needs 4 per side)')
        if self.__grid.get_dim() == 1 and count != (2 if placement == 'ends' else 1):
            raise ConfigError(config_messages.CONFIG_FIELD_ERROR + 'sources.count')
        width = source_data.get('width', 0.0)
        if not Validators.validate_finite(width) or width < 0:
            raise ConfigError(config_messages.CONFIG_FIELD_ERROR + 'sources.width')
        self.__source_count = count
        self.__placement = placement
        self.__source_width = float(width)

    def __parse_inversion(self, inversion_data: dict):
        threshold = inversion_data.get('threshold', config_constants.TSVD_THRESHOLD)
        rank = inversion_data.get('rank')
        if rank is not None and (not isinstance(rank, int) or rank < 1):
            raise ConfigError(config_messages.RANK_POLICY_ERROR)
        if threshold is not None and not 0 < threshold <= 1:
            raise ConfigError(config_messages.RANK_POLICY_ERROR)
        mass_ratio = inversion_data.get('mass_ratio', config_constants.MASS_EIGENVALUE_RATIO)
        if not Validators.validate_positive([mass_ratio]):
            raise ConfigError(config_messages.CONFIG_FIELD_ERROR + 'inversion.mass_ratio')
        self.__threshold = threshold
        self.__rank = rank
        self.__mass_ratio = float(mass_ratio)

    def get_name(self) -> str:
        """Get the experiment name"""
        return self.__name

    def get_grid(self) -> Grid:
        """Get the inversion grid"""
        return self.__grid

    def get_data_grid(self) -> Grid:
        """Get the data generation grid"""
        return self.__grid.refine(self.__data_refinement)

    def get_data_refinement(self) -> int:
        """Get the refinement factor of the data grid"""
        return self.__data_refinement

    def get_bumps(self) -> List[Bump]:
        """Get the medium bumps"""
        return list(self.__bumps)

    def get_source_count(self) -> int:
        """Get K"""
        return self.__source_count

    def get_placement(self) -> str:
        """Get the source placement rule"""
        return self.__placement

    def get_source_width(self) -> float:
        """Get the Gaussian source width"""
        return self.__source_width

    def get_spectra(self) -> SpectralSet:
        """Get the spectral set"""
        return self.__spectra

    def get_threshold(self) -> Optional[float]:
        """Get the TSVD threshold"""
        return self.__threshold

    def get_rank(self) -> Optional[int]:
        """Get the explicit TSVD rank"""
        return self.__rank

    def get_mass_ratio(self) -> float:
        """Get the mass eigenvalue ratio bound"""
        return self.__mass_ratio

    def get_methods(self) -> List[MethodType]:
        """Get the methods to run"""
        return list(self.__methods)

    def get_held_out(self) -> list:
        """Get the held out spectral points of the diagnostics"""
        return list(self.__held_out)

    def get_output_directory(self) -> str:
        """Get the output directory, relative to the output root unless absolute"""
        return self.__output_directory

    def get_seed(self) -> int:
        """Get the random seed"""
        return self.__seed

    def to_dict(self) -> dict:
        """Get the configuration as loaded, overrides included"""
        return copy.deepcopy(self.__config_data)

    def with_overrides(self, overrides: Optional[List[str]] = None, output_directory: Optional[str] = None,
                       seed: Optional[int] = None) -> 'ExperimentConfig':
        """Apply ``section.key=value`` overrides and return a new config

        Args:
            overrides: list of ``section.key=value`` strings, the value parsed as JSON when possible.
            output_directory: replaces ``output.directory``.
            seed: replaces ``seed``.
        Returns:
            A new validated ExperimentConfig.
        """
        config_data = copy.deepcopy(self.__config_data)
        for override in overrides or list():
            if '=' not in override:
                raise ConfigError(config_messages.OVERRIDE_FORMAT_ERROR + override)
            key, raw_value = override.split('=', 1)
            try:
                value = json.loads(raw_value)
            except ValueError:
                value = raw_value
            path = key.strip().split('.')
            if not all(path):
                raise ConfigError(config_messages.OVERRIDE_FORMAT_ERROR + override)
            section = config_data
            for part in path[:-1]:
                section = section.setdefault(part, dict())
                if not isinstance(section, dict):
                    raise ConfigError(config_messages.OVERRIDE_FORMAT_ERROR + override)
            section[path[-1]] = value
        if output_directory is not None:
            config_data.setdefault('output', dict())['directory'] = output_directory
        if seed is not None:
            config_data['seed'] = int(seed)
        return ExperimentConfig(config_data)

    @classmethod
    def load(cls, name_or_path: str) -> 'ExperimentConfig':
        """Load a config file, or a shipped config by name (``experiment1``)

        Args:
            name_or_path: path to a JSON file or the name of a shipped config.
        Returns:
            The validated ExperimentConfig.
        """
        path = name_or_path
        if not os.path.isfile(path):
            shipped = os.path.join(CONFIG_FOLDER, name_or_path if name_or_path.endswith('.json')
                                   else name_or_path + '.json')
            if os.path.isfile(shipped):
                path = shipped
        config_data = FileManager.read_files(path)
        if config_data is None:
            raise ConfigError(config_messages.CONFIG_FILE_ERROR + str(name_or_path))
        return cls(config_data)

    @classmethod
    def shipped_configs(cls) -> List[str]:
        """Names of the configs shipped with the package"""
        if not os.path.isdir(CONFIG_FOLDER):
            return list()
        return sorted(name[:-5] for name in os.listdir(CONFIG_FOLDER) if name.endswith('.json'))
