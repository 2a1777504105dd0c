# Copyright (c) 2026 The deltand Authors
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

"""Exact computations in the relative singularity category of the node.

Objects are passed as text: string complexes in the DSL
(``"P-@2 <b| P*@1 <g| P+@0"``) or as JSON documents, indecomposables by
their identifiers (``"P(+)[0]"``, ``"S(-,2)[1]"``).
"""

from ._core import (
    DeltandError,
    ar_mesh,
    complex_json,
    hom_dim,
    hom_matrix,
    is_iso,
    k0,
    k0_rank,
    normalize,
    oracle_hom,
    sign_convention,
    stabilize,
    tau,
    to_dsl,
    window,
)

__all__ = [
    "DeltandError",
    "ar_mesh",
    "complex_json",
    "hom_dim",
    "hom_matrix",
    "is_iso",
    "k0",
    "k0_rank",
    "normalize",
    "oracle_hom",
    "sign_convention",
    "stabilize",
    "tau",
    "to_dsl",
    "window",
]
