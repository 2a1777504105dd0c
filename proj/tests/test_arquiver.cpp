// Copyright (c) 2026 The deltand Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <map>
#include <set>

#include "deltand/arquiver.hpp"
#include "deltand/error.hpp"
#include "doctest.h"

using namespace deltand;

namespace {

Indec S(Sign s, int l, int m = 0) { return Indec::min_string(s, l, m); }
constexpr Sign P = Sign::plus;
constexpr Sign M = Sign::minus;

// The reference picture of the component through S_+(1), keyed by the
// picture's own node labels.
const std::map<int, Indec>& figure_nodes() {
  static const std::map<int, Indec> nodes{
      {2, S(P, 1, 2)},   {3, S(M, 3, 1)},   {5, S(M, 2, 1)},   {7, S(M, 1, 1)},  {8, S(P, 3, 0)},
      {10, S(P, 2, 0)},  {12, S(P, 1, 0)},  {13, S(M, 3, -1)}, {15, S(M, 2, -1)}, {17, S(M, 1, -1)},
      {18, S(P, 3, -2)}, {20, S(P, 2, -2)}, {22, S(P, 1, -2)}, {23, S(M, 3, -3)},
  };
  return nodes;
}

const std::vector<std::pair<int, int>> kSolid{{2, 5},   {3, 5},   {5, 7},   {5, 8},   {7, 10},  {8, 10},
                                              {10, 12}, {10, 13}, {12, 15}, {13, 15}, {15, 17}, {15, 18},
                                              {17, 20}, {18, 20}, {20, 22}, {20, 23}};
const std::vector<std::pair<int, int>> kDashed{{7, 2},   {8, 3},   {10, 5},  {12, 7},  {13, 8}, {15, 10},
                                               {17, 12}, {18, 13}, {20, 15}, {22, 17}, {23, 18}};

using Arc = std::pair<Indec, Indec>;

std::set<Arc> arcs(const std::vector<std::pair<int, int>>& ids) {
  std::set<Arc> out;
  for (auto [a, b] : ids) out.emplace(figure_nodes().at(a), figure_nodes().at(b));
  return out;
}

std::vector<Indec> string_panel(int max_l, int max_m) {
  std::vector<Indec> out;
  for (Sign s : {M, P}) {
    for (int l = 1; l <= max_l; ++l) {
      for (int m = -max_m; m <= max_m; ++m) out.push_back(S(s, l, m));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("tau") {
  CHECK(tau(S(P, 2, 0)) == S(M, 2, 1));
  for (const auto& a : string_panel(5, 3)) {
    CHECK(tau(tau(a)) == a.shifted(2));
    CHECK(tau_inverse(tau(a)) == a);
    CHECK(component_of(tau(a)) == component_of(a));
  }
  try {
    tau(Indec::proj(P, 0));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_ar_translate);
  }
  CHECK_THROWS_AS(ar_mesh(Indec::proj(M, 1)), Error);
}

TEST_CASE("irreducible maps") {
  CHECK(irreducible_successors(Indec::proj(P, 2)) == std::vector<Indec>{Indec::proj(M, 1)});
  CHECK(irreducible_successors(S(P, 2)) == std::vector<Indec>{S(M, 3, -1), S(P, 1)});
  CHECK(irreducible_successors(S(P, 1)) == std::vector<Indec>{S(M, 2, -1)});
  for (const auto& a : string_panel(5, 2)) {
    for (const auto& b : irreducible_successors(a)) {
      const auto pred = irreducible_predecessors(b);
      CHECK(std::find(pred.begin(), pred.end(), a) != pred.end());
      CHECK(component_of(b) == component_of(a));
    }
  }
}

TEST_CASE("meshes") {
  CHECK(ar_mesh(S(P, 2)) == ArMesh{S(M, 2, 1), {S(M, 1, 1), S(P, 3)}, S(P, 2)});
  CHECK(ar_mesh(S(P, 1)) == ArMesh{S(M, 1, 1), {S(P, 2)}, S(P, 1)});
  for (const auto& z : string_panel(6, 2)) {
    const ArMesh mesh = ar_mesh(z);
    CHECK(mesh.start == tau(mesh.end));
    CHECK_FALSE(mesh.middle.empty());
    const auto succ = irreducible_successors(tau(z));
    const auto pred = irreducible_predecessors(z);
    std::vector<Indec> both;
    std::set_intersection(succ.begin(), succ.end(), pred.begin(), pred.end(), std::back_inserter(both));
    CHECK(mesh.middle == both);
    auto k = k0(mesh.start);
    for (const auto& b : mesh.middle) {
      k[0] -= k0(b)[0];
      k[1] -= k0(b)[1];
    }
    k[0] += k0(mesh.end)[0];
    k[1] += k0(mesh.end)[1];
    CHECK(k == std::array<long long, 2>{0, 0});
  }
}

TEST_CASE("meshes agree with cones of the connecting morphism") {
  // z -> tau(z)[1] spans a one-dimensional space; its cone is the middle
  // term shifted by one.
  FingerprintOptions fp;
  fp.max_l = 7;
  for (Sign s : {M, P}) {
    for (int l = 1; l <= 5; ++l) {
      const Indec z = S(s, l);
      const ArMesh mesh = ar_mesh(z);
      const auto basis = hom_kb_basis(compile(z), compile(mesh.start), 1);
      REQUIRE(basis.size() == 1);
      const ProjComplex c = cone(basis.front());
      CHECK(fingerprint(c, fp) == fingerprint(compile(NormalForm::of(mesh.middle).shifted(1)), fp));
    }
  }
}

TEST_CASE("window reproduces the reference picture") {
  const QuiverWindow w = component_window(S(P, 1), 3, 4);
  CHECK(w.component == Component::za_plus);
  std::set<Indec> want;
  for (const auto& [id, a] : figure_nodes()) want.insert(a);
  CHECK(std::set<Indec>(w.nodes.begin(), w.nodes.end()) == want);
  CHECK(std::set<Arc>(w.irreducible.begin(), w.irreducible.end()) == arcs(kSolid));
  CHECK(std::set<Arc>(w.translates.begin(), w.translates.end()) == arcs(kDashed));
  CHECK(w.irreducible.size() == 16);
  CHECK(w.translates.size() == 11);
  // picture coordinates are x = 50 (column + 6), y = 200 - 50 row
  const std::map<int, std::pair<int, int>> xy{{2, {50, 150}}, {3, {50, 50}}, {10, {200, 100}}, {23, {450, 50}}};
  for (const auto& [id, p] : xy) {
    const GridPos g = grid_position(figure_nodes().at(id));
    CHECK(50 * (g.column + 6) == p.first);
    CHECK(200 - 50 * g.row == p.second);
  }
  const std::string dot = to_dot(w);
  CHECK(dot.find("\"S(+,2)[0]\" -> \"S(+,1)[0]\";") != std::string::npos);
  CHECK(dot.find("\"S(+,2)[0]\" -> \"S(-,2)[1]\" [style=dashed];") != std::string::npos);
}

TEST_CASE("windows of the other components") {
  const QuiverWindow proj = component_window(Indec::proj(P, 0), 1, 5);
  CHECK(proj.component == Component::proj_1);
  CHECK(proj.nodes.size() == 11);
  CHECK(proj.irreducible.size() == 10);
  CHECK(proj.translates.empty());
  std::map<Indec, int> indeg, outdeg;
  for (const auto& [a, b] : proj.irreducible) {
    ++outdeg[a];
    ++indeg[b];
  }
  for (const auto& a : proj.nodes) {
    CHECK(indeg[a] <= 1);
    CHECK(outdeg[a] <= 1);
  }
  CHECK(component_window(Indec::proj(M, 0), 1, 2).component == Component::proj_2);
  const QuiverWindow minus = component_window(S(M, 1), 3, 4);
  CHECK(minus.component == Component::za_minus);
  const QuiverWindow plus = component_window(S(P, 1), 3, 4);
  std::vector<Indec> common;
  std::set_intersection(plus.nodes.begin(), plus.nodes.end(), minus.nodes.begin(), minus.nodes.end(),
                        std::back_inserter(common));
  CHECK(common.empty());
  for (const auto& a : minus.nodes) CHECK(component_of(a) == Component::za_minus);
}

TEST_CASE("every atom lies in exactly one component") {
  std::map<Component, int> count;
  for (Sign s : {M, P}) {
    for (int n = -3; n <= 3; ++n) ++count[component_of(Indec::proj(s, n))];
  }
  for (const auto& a : string_panel(4, 3)) ++count[component_of(a)];
  CHECK(count.size() == 4);
  CHECK(count[Component::proj_1] == count[Component::proj_2]);
}

TEST_CASE("tau invariance and Serre duality") {
  const auto panel = string_panel(5, 1);
  for (const auto& a : panel) {
    for (const auto& b : panel) {
      const int d = hom_dim(a, b);
      CHECK(hom_dim(tau(a), tau(b)) == d);
      CHECK(hom_dim(b, tau(a).shifted(1)) == d);
    }
  }
}

TEST_CASE("block sums") {
  const BlockSum one = assemble_blocks(1, {NormalForm::of({Indec::proj(P, 0)})});
  CHECK(k0(one).pairs == k0(NormalForm::of({Indec::proj(P, 0)})).pairs);
  CHECK(k0_rank(1) == 2);
  CHECK(k0_rank(3) == 6);
  const BlockSum three = assemble_blocks(
      3, {NormalForm::of({Indec::proj(P, 0)}, 1), NormalForm::of({Indec::proj(P, 0)}, 3),
          NormalForm::of({S(M, 1)}, 3)});
  CHECK(three.blocks() == 3);
  CHECK(three.parts[1].atoms.empty());
  CHECK(k0(three).pairs.size() == 3);
  const auto h = hom_matrix(three, three);
  REQUIRE(h.size() == 3);
  CHECK(h[0] == std::vector<int>{1, 0, 0});
  CHECK(h[1][0] == 0);
  CHECK(h[1][1] == 1);
  CHECK_THROWS_AS(assemble_blocks(2, {NormalForm::of({}, 3)}), Error);
}
