# Copyright 2026 The posmap Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Positive maps on 2x2 matrices: certificates, extremal maps, decompositions."""

from ._core import (
    Certificate,
    Condition,
    Error,
    ExtremalParams,
    HypothesisViolated,
    InvalidParams,
    NotExtremal,
    TBranch,
    __version__,
    apply_map,
    block_positive,
    build_extremal,
    canonical_ccp_conditions,
    canonical_cp_conditions,
    ccp_check,
    cp_check,
    decompose_extremal,
    degenerate_case,
    epsilon_family,
    example_family,
    example_params,
    face_form_inequalities,
    face_membership,
    partial_transpose,
    psd_check,
    random_extremal_params,
    rank_estimate,
    uniqueness_search,
    validate_extremal,
    verify_decomposition,
)

__all__ = [name for name in dir() if not name.startswith("_")]
