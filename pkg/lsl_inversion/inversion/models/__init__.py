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
This module defines the domain models of the inversion pipeline.
"""

from .spectral_mode import SpectralMode
from .method_type import MethodType, Provenance
from .grid import Grid
from .grid_function import GridFunction
from .discrete_operator import DiscreteOperator
from .source_set import SourceSet
from .spectral_set import SpectralSet
from .transfer_data import TransferData
from .rom import Rom
from .lanczos_factorization import LanczosFactorization
from .internal_solution_set import InternalSolutionSet
from .background_kit import BackgroundKit
from .lsl_system import LslSystem, RowInfo
from .inversion_result import InversionResult
from .experiment_config import ExperimentConfig, Bump
from .report import Report
