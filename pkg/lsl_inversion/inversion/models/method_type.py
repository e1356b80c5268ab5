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
This module defines the reconstruction methods and the origin of internal solutions.
"""

import enum


class MethodType(enum.Enum):
    """Reconstruction method of an InversionResult"""
    LSL = 'LSL'
    BORN = 'BORN'
    CHEATED = 'CHEATED'
    BACKPROJECTION = 'BACKPROJECTION'
    QUOTIENT = 'QUOTIENT'


class Provenance(enum.Enum):
    """Origin of the solutions stored in an InternalSolutionSet"""
    DATA_DRIVEN = 'DATA_DRIVEN'
    CHEATED = 'CHEATED'
    BORN = 'BORN'
