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
This module defines the report of an experiment run.
"""

from typing import Dict, List
import numpy as np
from ..internal.common import config_constants
from .inversion_result import InversionResult


class Report:
    """Per method metrics plus the internal solution and identity diagnostics.

    Everything under the ``timing`` key is wall clock time; the rest of the
    report is a deterministic function of the config.
    """

    def __init__(self, name: str, config_data: dict):
        self.__name = name
        self.__config_data = config_data
        self.__methods = dict()
        self.__internal_solutions = list()
        self.__identity = list()
        self.__interpolation = list()
        self.__timing = dict()

    def get_name(self) -> str:
        """Get the experiment name"""
        return self.__name

    def add_result(self, result: InversionResult, metrics: dict, seconds: float):
        """Record the outcome of one method"""
        entry = result.to_dict()
        entry['metrics'] = metrics
        self.__methods[result.get_method().value] = entry
        self.__timing[result.get_method().value] = float(seconds)

    def set_internal_solution_diagnostics(self, diagnostics: List[dict]):
        """Per lambda ratios ||u_data - u|| / ||u - u_0||"""
        self.__internal_solutions = diagnostics

    def set_identity_diagnostics(self, diagnostics: List[dict]):
        """Output of verify_rom_identity"""
        self.__identity = diagnostics

    def set_interpolation_residuals(self, residuals: List[dict]):
        """Reduced model interpolation residuals per lambda"""
        self.__interpolation = residuals

    def add_timing(self, stage: str, seconds: float):
        """Record the wall clock time of a pipeline stage"""
        self.__timing[stage] = float(seconds)

    def get_methods(self) -> Dict[str, dict]:
        """Get the per method entries"""
        return self.__methods

    def get_metrics(self, method: str) -> dict:
        """Get the error metrics of one method"""
        return self.__methods[method]['metrics']

    def get_internal_solution_diagnostics(self) -> List[dict]:
        """Get the internal solution diagnostics"""
        return self.__internal_solutions

    def get_identity_diagnostics(self) -> List[dict]:
        """Get the identity diagnostics"""
        return self.__identity

    def get_interpolation_residuals(self) -> List[dict]:
        """Get the reduced model interpolation residuals"""
        return self.__interpolation

    def is_finite(self) -> bool:
        """True when every reported number is finite"""
        numbers = list()

        def collect(value):
            if isinstance(value, dict):
                for item in value.values():
                    collect(item)
            elif isinstance(value, (list, tuple)):
                for item in value:
                    collect(item)
            elif isinstance(value, (int, float, np.number)) and not isinstance(value, bool):
                numbers.append(float(value))
        collect(self.to_dict(include_timing=False))
        return bool(np.all(np.isfinite(numbers)))

    def to_dict(self, include_timing: bool = True) -> dict:
        """JSON form of the report"""
        report = {
            'version': config_constants.CONFIG_SCHEMA_VERSION,
            'name': self.__name,
            'config': self.__config_data,
            'methods': self.__methods,
            'internal_solutions': self.__internal_solutions,
            'identity': self.__identity,
            'interpolation': self.__interpolation
        }
        if include_timing:
            report['timing'] = self.__timing
        return report
