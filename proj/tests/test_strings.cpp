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

#include "deltand/error.hpp"
#include "deltand/strings.hpp"
#include "doctest.h"
#include "support/generators.hpp"

using namespace deltand;

namespace {

Errc code_of(const StringSpec& s) {
  try {
    validate_string(s);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::invalid_argument;  // sentinel: no error
}

const char* kGrid = "P-@1 <b(ab)| P*@0 |(gd)^2> P*@1 |ab> P*@2 <gd| P*@1";

}  // namespace

TEST_CASE("minimal string shapes") {
  const StringSpec s1 = MinStringSpec{Sign::plus, 1, 0}.to_spec();
  CHECK(to_dsl(s1) == "P-@2 <b| P*@1 <g| P+@0");
  const StringSpec s2 = MinStringSpec{Sign::plus, 2, 0}.to_spec();
  CHECK(to_dsl(s2) == "P+@3 <d| P*@2 <ab| P*@1 <g| P+@0");
  CHECK(to_dsl(MinStringSpec{Sign::minus, 1, 0}.to_spec()) == "P+@2 <d| P*@1 <a| P-@0");
  for (Sign tau : {Sign::minus, Sign::plus}) {
    for (int l = 1; l <= 8; ++l) {
      for (int m : {-3, 0, 2}) {
        const MinStringSpec ms{tau, l, m};
        const ProjComplex x = compile(ms);
        CHECK_NOTHROW(validate(x));
        long stars = 0;
        for (const auto& [p, t] : x.terms()) {
          for (Vertex v : t) stars += v == Vertex::star ? 1 : 0;
        }
        CHECK(stars == l);
        CHECK(x.at(m) == std::vector<Vertex>{vertex_of(tau)});
        CHECK(x.at(m + l + 1) == std::vector<Vertex>{vertex_of(ms.sigma())});
        CHECK((ms.sigma() == tau) == (l % 2 == 0));
        for (const auto& e : ms.to_spec().edges) CHECK(e.decoration.is_minimal());
      }
    }
  }
  CHECK_THROWS_AS(MinStringSpec({Sign::plus, 0, 0}).to_spec(), Error);
}

TEST_CASE("grid example") {
  const StringSpec grid = parse_string(kGrid);
  CHECK_NOTHROW(validate_string(grid));
  const ProjComplex x = compile(grid);
  CHECK(x.at(2) == std::vector<Vertex>{Vertex::star});
  CHECK(x.at(1) == std::vector<Vertex>{Vertex::minus, Vertex::star, Vertex::star});
  CHECK(x.at(0) == std::vector<Vertex>{Vertex::star});
  const PathMatrix d1 = x.diff(2);
  CHECK(d1.at(0, 0).is_zero());
  CHECK(d1.at(1, 0) == PathCombo(parse_path("ab")));
  CHECK(d1.at(2, 0) == PathCombo(parse_path("gd")));
  const PathMatrix d2 = x.diff(1);
  CHECK(d2.at(0, 0) == PathCombo(parse_path("b(ab)")));
  CHECK(d2.at(0, 1) == PathCombo(parse_path("(gd)^2")));
  CHECK(d2.at(0, 2).is_zero());
  CHECK_NOTHROW(validate(x));
  CHECK(to_dsl(parse_string(to_dsl(grid))) == to_dsl(grid));
  CHECK(to_dsl(grid) == std::string("P-@1 <bab| P*@0 |(gd)^2> P*@1 |ab> P*@2 <gd| P*@1"));
}

TEST_CASE("validation errors") {
  CHECK(code_of(parse_string("P+")) == Errc::invalid_argument);
  CHECK(code_of(parse_string("P* <ab| P* <ab| P*")) == Errc::zero_composition_violated);
  // (ab) then (gd) composes to zero, so this one is a valid string
  CHECK(code_of(parse_string("P* <ab| P* <gd| P*")) == Errc::invalid_argument);
  CHECK(code_of(parse_string("P* <ab| P* |ab> P*")) == Errc::bad_alternation);
  CHECK(code_of(parse_string("P* <ab| P- <b| P*")) == Errc::bad_endpoints);
  CHECK(code_of(parse_string("P* <e*| P*")) == Errc::zero_decoration);
  CHECK(code_of(parse_string("P* <b| P*")) == Errc::bad_decoration);
  StringSpec s = parse_string("P- <b| P*");
  s.nodes[1].position = 7;
  CHECK(code_of(s) == Errc::bad_position);
  CHECK_THROWS_AS(parse_string("P-@3 <b| P*@0"), Error);
  CHECK_THROWS_AS(parse_string("Q-"), Error);
  CHECK_THROWS_AS(parse_string("P- <b P*"), Error);
  CHECK(parse_string("P- <b| P*").nodes[0].position == 1);
  CHECK(parse_string("P-@5 <b| P*").nodes[1].position == 4);
}

TEST_CASE("sums, stalks and star detection") {
  const auto sum = parse_string_sum("P+@0 # a stalk\nP- <b| P*; P* |ab> P*\n\n");
  CHECK(sum.size() == 3);
  CHECK(compile(StringSpec::stalk(Vertex::plus, 0)) == ProjComplex::stalk(Vertex::plus, 0));
  CHECK(is_in_star_subcategory(compile(parse_string("P* <ab| P*"))));
  CHECK_FALSE(is_in_star_subcategory(compile(MinStringSpec{Sign::plus, 1, 0})));
}

TEST_CASE("random strings compile, round trip and decompile") {
  gen::StringGen g(2024);
  for (int iter = 0; iter < 300; ++iter) {
    const StringSpec s = g();
    REQUIRE_NOTHROW(validate_string(s));
    const ProjComplex x = compile(s);
    CHECK_NOTHROW(validate(x));
    CHECK(parse_string(to_dsl(s)) == s);
    CHECK(compile(parse_string(to_dsl(s))) == x);
    CHECK(compile(s.reversed()).total_rank() == x.total_rank());
    const auto back = decompile(x);
    REQUIRE(back.has_value());
    CHECK(same_string(*back, s));
    CHECK(compile(s.shifted(2)) == shift(x, 2));
  }
}
