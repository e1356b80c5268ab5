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
This file defines the constants used by the library.
"""

SDK_NAME = "lsl-inversion-python-sdk"
LOGGER_NAME = "lsl_inversion"
LOG_FILE_ENV = "LSL_LOG_FILE"
OUTPUT_ROOT_ENV = "LSL_OUTPUT_ROOT"
DEFAULT_OUTPUT_ROOT = "lsl_output"
CONFIG_SCHEMA_VERSION = 1

# forward
SHIFT_RESIDUAL_TOLERANCE = 1e-8
SYMMETRY_TOLERANCE = 1e-10
SOURCE_SUPPORT_RADIUS = 3.0

# romgen
MASS_EIGENVALUE_RATIO = 1e-13

# lanczos
BREAKDOWN_TOLERANCE = 1e-12
REALNESS_TOLERANCE = 1e-10

# lsl
TSVD_THRESHOLD = 1e-3
DENOMINATOR_FLOOR = 1e-14
COMPLEX_STEP = 1e-20

# exit codes of the command line interface
EXIT_SUCCESS = 0
EXIT_CONFIG_ERROR = 2
EXIT_NUMERICAL_FAILURE = 3

# artifacts
TRANSFER_FILE = "transfer.json"
REPORT_FILE = "report.json"
IMAGE_LEVELS = 255
