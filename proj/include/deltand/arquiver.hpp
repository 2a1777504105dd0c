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

// Auslander-Reiten structure of the quotient: two ZA_inf components of
// minimal strings, two A_inf^inf chains of stalks, and block sums over
// several nodes.
//
// Layout: a minimal string S_sigma(l)[m] sits in column -(2m + l), row l;
// a stalk P_sigma[n] in column -n, row 0.  tau moves two columns left.

#ifndef DELTAND_ARQUIVER_HPP_
#define DELTAND_ARQUIVER_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "deltand/delta.hpp"

namespace deltand {

enum class Component : std::uint8_t { za_plus, za_minus, proj_1, proj_2 };

// "ZAinf-plus", "ZAinf-minus", "Ainf-proj-1", "Ainf-proj-2".
std::string_view component_name(Component c) noexcept;
// ZAinf-plus contains S_+(1)[0], Ainf-proj-1 contains P_+[0].
Component component_of(const Indec& a);

// Throws Error(no_ar_translate) for stalks.
Indec tau(const Indec& a);
Indec tau_inverse(const Indec& a);

std::vector<Indec> irreducible_successors(const Indec& a);
std::vector<Indec> irreducible_predecessors(const Indec& a);

struct ArMesh {
  Indec start;  // tau(end)
  std::vector<Indec> middle;
  Indec end;
  friend bool operator==(const ArMesh&, const ArMesh&) = default;
};

// Throws Error(no_ar_translate) for stalks.
ArMesh ar_mesh(const Indec& z);

struct GridPos {
  int column = 0;
  int row = 0;
  friend bool operator==(const GridPos&, const GridPos&) = default;
};

GridPos grid_position(const Indec& a);

struct QuiverWindow {
  Component component = Component::za_plus;
  std::vector<Indec> nodes;  // sorted
  std::vector<std::pair<Indec, Indec>> irreducible;
  // z -> tau(z)
  std::vector<std::pair<Indec, Indec>> translates;
};

// Nodes of the seed's component with row in [1, rows] (ignored for stalks)
// and column within cols of the seed's column.
QuiverWindow component_window(const Indec& seed, int rows, int cols);

// Solid arrows for irreducible maps, dashed for tau; nodes pinned to the grid.
std::string to_dot(const QuiverWindow& w);

// Direct sum over p nodes; parts[k] lives on node k + 1.
struct BlockSum {
  std::vector<NormalForm> parts;

  int blocks() const noexcept { return static_cast<int>(parts.size()); }
  friend bool operator==(const BlockSum&, const BlockSum&) = default;
};

// Groups the inputs by node.  Throws Error(invalid_argument) for a node
// outside [1, p].
BlockSum assemble_blocks(int p, const std::vector<NormalForm>& inputs);

// One (c_minus, c_plus) pair per block.
K0Class k0(const BlockSum& x);
// Rank of the lattice spanned by the classes of all stalks on p nodes.
int k0_rank(int p);
// Rows and columns run over the atoms of all parts in node order.
std::vector<std::vector<int>> hom_matrix(const BlockSum& x, const BlockSum& y);

}  // namespace deltand

#endif  // DELTAND_ARQUIVER_HPP_
