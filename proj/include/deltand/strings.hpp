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

// String data: a walk of projectives with decorated edges, compiled to a
// complex by summing the nodes that share a position.
//
// Text syntax (one summand per line or ';'-separated, '#' comments):
//
//   P-@1 <b(ab)| P*@0 |(gd)^2> P*@1 |ab> P*@2 <gd| P*@1
//
// "<w|" is the map .w from the left node to the right node, "|w>" the map
// from the right node to the left one.  A map lowers the position by one.
// Positions are optional; without any "@" the last node sits at 0.

#ifndef DELTAND_STRINGS_HPP_
#define DELTAND_STRINGS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deltand/komplex.hpp"
#include "deltand/pathalg.hpp"

namespace deltand {

enum class Sign : std::int8_t { minus = -1, plus = 1 };

constexpr Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr Vertex vertex_of(Sign s) { return s == Sign::plus ? Vertex::plus : Vertex::minus; }
constexpr Side side_of(Sign s) { return s == Sign::plus ? Side::gamma_delta : Side::alpha_beta; }
constexpr char sign_symbol(Sign s) { return s == Sign::plus ? '+' : '-'; }
std::optional<Sign> parse_sign(std::string_view text);

// forward: node i -> node i+1; backward: node i+1 -> node i.
enum class Direction : std::uint8_t { forward, backward };

struct WalkNode {
  Vertex vertex;
  int position;
  friend bool operator==(const WalkNode&, const WalkNode&) = default;
};

struct WalkEdge {
  Direction direction;
  // A path from the codomain node's vertex to the domain node's vertex.
  Path decoration;
  friend bool operator==(const WalkEdge&, const WalkEdge&) = default;
};

struct StringSpec {
  std::vector<WalkNode> nodes;
  std::vector<WalkEdge> edges;

  static StringSpec stalk(Vertex v, int position) { return StringSpec{{{v, position}}, {}}; }
  StringSpec shifted(int n) const;
  StringSpec reversed() const;

  friend bool operator==(const StringSpec&, const StringSpec&) = default;
};

// S_tau(l)[shift]: P_sigma at position l+1, l copies of P_* and P_tau at 0,
// every edge forward and decorated by a minimal path.
struct MinStringSpec {
  Sign tau;
  int l;
  int shift = 0;

  // sigma = tau iff l is even.
  Sign sigma() const { return l % 2 == 0 ? tau : flip(tau); }
  StringSpec to_spec() const;
};

// Throws Error with one of bad_endpoints, bad_position, zero_decoration,
// bad_decoration, zero_composition_violated, bad_alternation.
void validate_string(const StringSpec& s);

ProjComplex compile(const StringSpec& s);
ProjComplex compile(const MinStringSpec& s);

// Reads a connected complex with at most two entries per term, no cycles,
// monomial entries and star interior terms back as a walk.  The walk starts
// at the endpoint of higher position.  nullopt if the shape does not fit or
// the walk is not a valid string.
std::optional<StringSpec> decompile(const ProjComplex& x);

// Equal up to reading the walk backwards.
bool same_string(const StringSpec& a, const StringSpec& b);

std::string to_dsl(const StringSpec& s);
StringSpec parse_string(std::string_view text);
// Summands of a sum, see the syntax above.
std::vector<StringSpec> parse_string_sum(std::string_view text);

}  // namespace deltand

#endif  // DELTAND_STRINGS_HPP_
