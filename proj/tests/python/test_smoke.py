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

import json

import pytest

import deltand

GRID = "P-@1 <b(ab)| P*@0 |(gd)^2> P*@1 |ab> P*@2 <gd| P*@1"


def test_normalize_grid():
    assert deltand.normalize(GRID) == ["P(-)[1]"]
    assert deltand.normalize("P* |ab> P*") == []


def test_hom_and_iso():
    assert deltand.hom_dim("P(+)[0]", "P(-)[-1]") == 1
    assert deltand.hom_dim("P(+)[0]", "P(+)[2]") == 0
    assert deltand.hom_matrix(["S(+,1)[0]"], ["S(+,1)[0]", "S(-,1)[0]"]) == [[1, 0]]
    assert deltand.is_iso(GRID, "P-@1")


def test_k0_and_stabilize():
    assert deltand.k0("P-@2 <b| P*@1 <g| P+@0") == (1, 1)
    assert deltand.stabilize("P+@0") == (1, 0)
    assert deltand.stabilize("P-@2 <b| P*@1 <g| P+@0") == (0, 0)
    assert deltand.k0_rank(3) == 6


def test_ar_structure():
    assert deltand.tau("S(+,2)[0]") == "S(-,2)[1]"
    assert deltand.ar_mesh("S(+,2)[0]") == ("S(-,2)[1]", ["S(-,1)[1]", "S(+,3)[0]"], "S(+,2)[0]")
    w = json.loads(deltand.window("S(+,1)[0]", 3, 4, dot=False))
    assert len(w["nodes"]) == 14
    assert deltand.window("S(+,1)[0]").startswith("digraph")


def test_oracle_hom():
    s = "P-@2 <b| P*@1 <g| P+@0"
    r = deltand.oracle_hom(s, s, 0, field="q")
    assert r["stable"] and r["total"] == 1
    assert not deltand.oracle_hom("P*@0", "P*@0")["stable"]


def test_errors():
    with pytest.raises(deltand.DeltandError, match="NoArTranslate"):
        deltand.tau("P(+)[0]")
    with pytest.raises(deltand.DeltandError, match="BadDecoration"):
        deltand.normalize("P* <b| P*")
    assert "cone" in deltand.sign_convention()
