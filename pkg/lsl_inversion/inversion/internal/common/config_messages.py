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
This file defines the various messages used by the library.
"""

SINGLETON_EXCEPTION = "class must be initialized using the get_instance() method."
GRID_DIM_ERROR = "Grid dimension must be 1 or 2, got "
GRID_SHAPE_ERROR = "Grid needs one positive extent and at least two nodes per axis"
GRID_FUNCTION_SIZE_ERROR = "Grid function size does not match the grid node count"
GRID_MISMATCH_ERROR = "Objects are defined on different grids"
POTENTIAL_NOT_REAL_ERROR = "The potential q must be real valued"
NON_FINITE_ERROR = "Non finite values in "
NEAR_SINGULAR_SHIFT_ERROR = "Shifted system is close to singular at lambda = "
SPECTRAL_POINTS_EMPTY_ERROR = "Provide at least one spectral point"
SPECTRAL_POINTS_DISTINCT_ERROR = "Spectral points must be pairwise distinct"
SPECTRAL_COMPLEX_MODE_ERROR = "COMPLEX mode needs Im(lambda) > 0 for every spectral point"
SPECTRAL_REAL_MODE_ERROR = "REAL_WITH_DERIVATIVES mode needs real spectral points"
SPECTRAL_MODE_MISMATCH_ERROR = "Operation is not available for spectral mode "
TRANSFER_SHAPE_ERROR = "Transfer values must be an (m, K, K) array matching the spectral set"
TRANSFER_SYMMETRY_ERROR = "Transfer matrices must be complex symmetric"
TRANSFER_DERIVATIVE_MISSING_ERROR = "REAL_WITH_DERIVATIVES data needs dF/dlambda at every point"
SOURCE_OUTSIDE_ERROR = "Source position lies outside the grid: "
SOURCE_EMPTY_ERROR = "Provide at least one source"
ILL_CONDITIONED_MASS_ERROR = "Mass matrix is numerically singular, reduce the number of spectral points. " \
                             "Eigenvalue ratio = "
SINGULAR_PENCIL_ERROR = "The pencil S + lambda M is singular at lambda = "
SINGULAR_SHIFT_ERROR = "T + lambda I is singular at lambda = "
BREAKDOWN_ERROR = "Lanczos breakdown, invariant subspace reached at step "
RANK_DEFICIENT_BLOCK_ERROR = "Block Lanczos residual block is rank deficient at step "
FACTORIZATION_SIZE_ERROR = "Perturbed and background factorizations have different sizes"
ALL_TRUNCATED_ERROR = "No singular value passes the truncation threshold"
RANK_POLICY_ERROR = "Rank policy needs a positive rank or a threshold in (0, 1]"
SPECTRAL_MISMATCH_ERROR = "Internal solutions and transfer data use different spectral sets"
DERIVATIVES_MISSING_ERROR = "REAL_WITH_DERIVATIVES assembly needs lambda derivatives of internal solutions"
BUMP_OUTSIDE_ERROR = "Bump center lies outside the domain: "
BUMP_WIDTH_ERROR = "Bump widths must be positive"
CONFIG_VERSION_ERROR = "Unsupported config version "
CONFIG_FIELD_ERROR = "Invalid config field "
CONFIG_FILE_ERROR = "Unable to read config file "
METHOD_UNKNOWN_ERROR = "Unknown inversion method "
CHEATED_NEEDS_TRUTH_ERROR = "CHEATED inversion needs the true potential"
OVERRIDE_FORMAT_ERROR = "Overrides must look like section.key=value, got "
CSV_HEADER_ERROR = "Malformed grid CSV header in "
EXPORT_IO_ERROR = "Unable to write "
LANCZOS_BLOCK_SIZE_ERROR = "m_symmetric_lanczos needs a single source ROM, use block_lanczos when K > 1"
