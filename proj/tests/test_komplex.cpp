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

#include <random>

#include "deltand/error.hpp"
#include "deltand/komplex.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace deltand;

namespace {

PathMatrix entry(Vertex dom, Vertex cod, const char* path) {
  PathMatrix m({dom}, {cod});
  m.set(0, 0, PathCombo(parse_path(path)));
  return m;
}

// P_- .b-> P_* .g-> P_+ with P_+ at position 0.
ProjComplex s_plus_1() {
  ProjComplex x;
  x.set_terms(2, {Vertex::minus});
  x.set_terms(1, {Vertex::star});
  x.set_terms(0, {Vertex::plus});
  x.set_diff(2, entry(Vertex::minus, Vertex::star, "b"));
  x.set_diff(1, entry(Vertex::star, Vertex::plus, "g"));
  return x;
}

// P_+ .d-> P_* .ab-> P_* .g-> P_+
ProjComplex s_plus_2() {
  ProjComplex x;
  x.set_terms(3, {Vertex::plus});
  x.set_terms(2, {Vertex::star});
  x.set_terms(1, {Vertex::star});
  x.set_terms(0, {Vertex::plus});
  x.set_diff(3, entry(Vertex::plus, Vertex::star, "d"));
  x.set_diff(2, entry(Vertex::star, Vertex::star, "ab"));
  x.set_diff(1, entry(Vertex::star, Vertex::plus, "g"));
  return x;
}

ProjComplex star_chain(int len, int top) {
  // P_* .ab-> P_* .gd-> P_* ... alternating, a band-like all-star string
  ProjComplex x;
  for (int k = 0; k < len; ++k) x.set_terms(top - k, {Vertex::star});
  for (int k = 0; k + 1 < len; ++k) {
    x.set_diff(top - k, entry(Vertex::star, Vertex::star, k % 2 == 0 ? "ab" : "gd"));
  }
  return x;
}

}  // namespace

TEST_CASE("validate") {
  CHECK_NOTHROW(validate(s_plus_1()));
  CHECK_NOTHROW(validate(ProjComplex{}));
  ProjComplex bad;
  bad.set_terms(2, {Vertex::star});
  bad.set_terms(1, {Vertex::minus});
  bad.set_terms(0, {Vertex::star});
  bad.set_diff(2, entry(Vertex::star, Vertex::minus, "a"));
  bad.set_diff(1, entry(Vertex::minus, Vertex::star, "b"));
  CHECK_THROWS_AS(validate(bad), Error);
  try {
    validate(bad);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_a_complex);
  }
  // .g then .b composes to the zero path b g
  ProjComplex ok;
  ok.set_terms(2, {Vertex::plus});
  ok.set_terms(1, {Vertex::star});
  ok.set_terms(0, {Vertex::minus});
  ok.set_diff(2, entry(Vertex::plus, Vertex::star, "d"));
  ok.set_diff(1, entry(Vertex::star, Vertex::minus, "a"));
  CHECK_NOTHROW(validate(ok));
}

TEST_CASE("shift, direct sum and k0_raw") {
  const ProjComplex x = s_plus_1();
  CHECK(shift(x, 0) == x);
  CHECK(shift(shift(x, 1), -1) == x);
  CHECK(shift(x, 3).min_position() == 3);
  CHECK(k0_raw(x) == std::array<long long, 3>{1, -1, 1});
  CHECK(k0_raw(ProjComplex::stalk(Vertex::plus, 0)) == std::array<long long, 3>{0, 0, 1});
  const auto s1 = k0_raw(shift(x, 1));
  for (int k = 0; k < 3; ++k) CHECK(s1[static_cast<std::size_t>(k)] == -k0_raw(x)[static_cast<std::size_t>(k)]);
  CHECK(k0_raw(direct_sum(x, shift(x, 1))) == std::array<long long, 3>{0, 0, 0});
  CHECK(direct_sum(x, ProjComplex{}) == x);
  CHECK(direct_sum(x, s_plus_2()).total_rank() == x.total_rank() + s_plus_2().total_rank());
  CHECK_NOTHROW(validate(direct_sum(x, s_plus_2())));
  CHECK(shift(x, 1).diff(3).at(0, 0) == -PathCombo(parse_path("b")));
}

TEST_CASE("cones") {
  const ProjComplex x = s_plus_1();
  const ProjComplex c = cone(identity(x));
  CHECK_NOTHROW(validate(c));
  CHECK(is_zero_object(c));
  CHECK(minimize(c).empty());
  const ProjComplex y = s_plus_2();
  CHECK(cone(zero_map(x, y, 0)) == direct_sum(y, shift(x, 1)));
  ChainMap bad = zero_map(x, x, 0);
  PathMatrix m({Vertex::star}, {Vertex::star});
  m.set(0, 0, PathCombo(parse_path("ab")));
  bad.set_component(1, m);
  CHECK_THROWS_AS(cone(bad), Error);
}

TEST_CASE("minimize removes contractible pieces") {
  ProjComplex x;
  x.set_terms(1, {Vertex::star});
  x.set_terms(0, {Vertex::star});
  PathMatrix m({Vertex::star}, {Vertex::star});
  m.set(0, 0, PathCombo(Path::lazy(Vertex::star), 2));
  x.set_diff(1, m);
  CHECK(minimize(x).empty());
  CHECK(is_zero_object(x));
  CHECK(is_null_homotopic(identity(x)));
  CHECK(minimize(s_plus_2()) == s_plus_2());
}

TEST_CASE("hom_kb basics") {
  const ProjComplex s1 = s_plus_1();
  const ProjComplex s2 = s_plus_2();
  CHECK(hom_kb(s1, s1, 0).total() == 1);
  CHECK(hom_kb(s1, s1, 0).stable);
  CHECK(hom_kb(s2, s2, 0).total() == 1);
  for (int m = -5; m <= 5; ++m) {
    const auto p = ProjComplex::stalk(Vertex::star, m);
    CHECK(hom_kb(p, s2, 0).total() == 0);
    CHECK(hom_kb(s2, p, 0).total() == 0);
    CHECK(hom_kb(p, s1, 0).total() == 0);
  }
  CHECK(hom_kb(ProjComplex::stalk(Vertex::plus, 0), s1, 0).total() == 1);
  CHECK(hom_kb(ProjComplex::stalk(Vertex::minus, 0), s1, 0).total() == 0);
  // P_* is not Hom-finite upstairs
  const auto p = ProjComplex::stalk(Vertex::star, 0);
  CHECK_FALSE(hom_kb(p, p, 0).stable);
  CHECK(hom_kb(p, p, 0).total() >= 1);
  CHECK_FALSE(is_null_homotopic(identity(s1)));
  CHECK(is_null_homotopic(zero_map(s1, s1, 0)));
}

TEST_CASE("hom_kb agrees with the word oracle") {
  std::vector<ProjComplex> pool = {s_plus_1(), s_plus_2(), star_chain(3, 1),
                                   ProjComplex::stalk(Vertex::plus, 0),
                                   ProjComplex::stalk(Vertex::minus, 1),
                                   ProjComplex::stalk(Vertex::star, 0)};
  pool.push_back(direct_sum(s_plus_1(), shift(s_plus_2(), -1)));
  for (const auto& x : pool) {
    for (const auto& y : pool) {
      const auto all = hom_kb_range(x, y);
      for (const auto& [n, rep] : all) {
        if (!rep.stable) continue;
        CHECK(rep.total() == oracle::brute_hom(x, y, n));
        CHECK(rep.total() == hom_kb(x, y, n).total());
      }
    }
  }
}

TEST_CASE("hom_kb properties") {
  const ProjComplex s1 = s_plus_1();
  const ProjComplex s2 = s_plus_2();
  for (int k = -2; k <= 2; ++k) {
    for (int n = -4; n <= 4; ++n) {
      CHECK(hom_kb(s1, s2, n).total() == hom_kb(shift(s1, k), shift(s2, k), n).total());
      CHECK(hom_kb(direct_sum(s1, s2), s2, n).total() ==
            hom_kb(s1, s2, n).total() + hom_kb(s2, s2, n).total());
    }
  }
  // field choice does not change dimensions here
  HomOptions q;
  q.field = Field::rationals();
  for (int n = -4; n <= 4; ++n) CHECK(hom_kb(s1, s2, n, q).total() == hom_kb(s1, s2, n).total());
}

TEST_CASE("hom basis representatives are chain maps") {
  const ProjComplex s1 = s_plus_1();
  const ProjComplex s2 = s_plus_2();
  for (int n = -4; n <= 4; ++n) {
    const auto basis = hom_kb_basis(s2, s1, n);
    CHECK(static_cast<long long>(basis.size()) == hom_kb(s2, s1, n).total());
    for (const auto& f : basis) {
      CHECK_NOTHROW(validate_chain_map(f));
      CHECK_FALSE(is_null_homotopic(f));
    }
  }
}

TEST_CASE("grading and components") {
  const auto g = grading(s_plus_2());
  CHECK(g.at(3)[0] == 0);
  CHECK(g.at(2)[0] == 1);
  CHECK(g.at(1)[0] == 3);
  CHECK(g.at(0)[0] == 4);
  const auto parts = connected_components(direct_sum(s_plus_1(), s_plus_2()));
  CHECK(parts.size() == 2);
  CHECK(parts[0] == s_plus_1());
  CHECK(parts[1] == s_plus_2());
  CHECK(is_in_star_subcategory(star_chain(4, 0)));
  CHECK_FALSE(is_in_star_subcategory(s_plus_1()));
  CHECK(is_in_star_subcategory(ProjComplex{}));
}
