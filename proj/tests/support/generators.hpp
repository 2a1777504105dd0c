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

// Random valid strings for property tests.

#ifndef DELTAND_TESTS_GENERATORS_HPP_
#define DELTAND_TESTS_GENERATORS_HPP_

#include <random>

#include "deltand/strings.hpp"

namespace gen {

using namespace deltand;

struct StringGen {
  std::mt19937_64 rng;
  int max_edges = 10;
  int max_extra = 2;  // extra loops (ab)/(gd) per decoration
  bool all_star = false;

  explicit StringGen(std::uint64_t seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Vertex label() { return all_star ? Vertex::star : kVertices[static_cast<std::size_t>(uniform(0, 2))]; }

  StringSpec operator()() { return make(uniform(0, max_edges)); }

  StringSpec make(int edges) {
    StringSpec s;
    const int anchor = uniform(-3, 3);
    if (edges == 0) return StringSpec::stalk(label(), anchor);
    Vertex first = label();
    Side side = first == Vertex::minus ? Side::alpha_beta
                : first == Vertex::plus ? Side::gamma_delta
                                        : (uniform(0, 1) ? Side::alpha_beta : Side::gamma_delta);
    std::vector<Side> sides;
    for (int k = 0; k < edges; ++k) {
      sides.push_back(side);
      side = side == Side::alpha_beta ? Side::gamma_delta : Side::alpha_beta;
    }
    Vertex last = label();
    const Side end_side = sides.back();
    if (last == Vertex::minus && end_side != Side::alpha_beta) last = uniform(0, 1) && !all_star ? Vertex::plus : Vertex::star;
    if (last == Vertex::plus && end_side != Side::gamma_delta) last = uniform(0, 1) && !all_star ? Vertex::minus : Vertex::star;
    s.nodes.push_back({first, anchor});
    for (int k = 1; k < edges; ++k) s.nodes.push_back({Vertex::star, 0});
    s.nodes.push_back({last, 0});
    for (int k = 0; k < edges; ++k) {
      const Direction dir = uniform(0, 1) ? Direction::forward : Direction::backward;
      const auto& a = s.nodes[static_cast<std::size_t>(k)];
      auto& b = s.nodes[static_cast<std::size_t>(k + 1)];
      b.position = a.position + (dir == Direction::forward ? -1 : 1);
      const Vertex dom = dir == Direction::forward ? a.vertex : b.vertex;
      const Vertex cod = dir == Direction::forward ? b.vertex : a.vertex;
      const unsigned base = (dom == Vertex::star) != (cod == Vertex::star) ? 1 : 2;
      // mostly minimal, sometimes longer
      const int extra = uniform(0, 2) == 0 ? uniform(1, max_extra) : 0;
      const auto p = Path::along(cod, sides[static_cast<std::size_t>(k)], base + 2 * static_cast<unsigned>(extra));
      s.edges.push_back({dir, *p});
    }
    return s;
  }
};

}  // namespace gen

#endif  // DELTAND_TESTS_GENERATORS_HPP_
