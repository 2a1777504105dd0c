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

#include "deltand/arquiver.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "deltand/error.hpp"
#include "deltand/linalg.hpp"

namespace deltand {

namespace {

int parity(int n) { return (n % 2 == 0) ? 1 : -1; }

void require_string(const Indec& a, const char* what) {
  if (a.is_proj()) {
    throw Error(Errc::no_ar_translate, std::string(what) + " is not defined on the stalk " + to_string(a));
  }
}

std::vector<Indec> sorted(std::vector<Indec> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::string_view component_name(Component c) noexcept {
  switch (c) {
    case Component::za_plus: return "ZAinf-plus";
    case Component::za_minus: return "ZAinf-minus";
    case Component::proj_1: return "Ainf-proj-1";
    case Component::proj_2: return "Ainf-proj-2";
  }
  return "?";
}

Component component_of(const Indec& a) {
  const int c = static_cast<int>(a.sign) * parity(a.shift);
  if (a.is_proj()) return c > 0 ? Component::proj_1 : Component::proj_2;
  return c > 0 ? Component::za_plus : Component::za_minus;
}

Indec tau(const Indec& a) {
  require_string(a, "tau");
  return Indec::min_string(flip(a.sign), a.l, a.shift + 1);
}

Indec tau_inverse(const Indec& a) {
  require_string(a, "tau");
  return Indec::min_string(flip(a.sign), a.l, a.shift - 1);
}

std::vector<Indec> irreducible_successors(const Indec& a) {
  if (a.is_proj()) return {Indec::proj(flip(a.sign), a.shift - 1)};
  std::vector<Indec> out;
  if (a.l >= 2) out.push_back(Indec::min_string(a.sign, a.l - 1, a.shift));
  out.push_back(Indec::min_string(flip(a.sign), a.l + 1, a.shift - 1));
  return sorted(std::move(out));
}

std::vector<Indec> irreducible_predecessors(const Indec& a) {
  if (a.is_proj()) return {Indec::proj(flip(a.sign), a.shift + 1)};
  std::vector<Indec> out;
  out.push_back(Indec::min_string(a.sign, a.l + 1, a.shift));
  if (a.l >= 2) out.push_back(Indec::min_string(flip(a.sign), a.l - 1, a.shift + 1));
  return sorted(std::move(out));
}

ArMesh ar_mesh(const Indec& z) {
  require_string(z, "the AR mesh");
  std::vector<Indec> middle;
  if (z.l >= 2) middle.push_back(Indec::min_string(flip(z.sign), z.l - 1, z.shift + 1));
  middle.push_back(Indec::min_string(z.sign, z.l + 1, z.shift));
  return ArMesh{tau(z), sorted(std::move(middle)), z};
}

GridPos grid_position(const Indec& a) {
  if (a.is_proj()) return {-a.shift, 0};
  return {-(2 * a.shift + a.l), a.l};
}

QuiverWindow component_window(const Indec& seed, int rows, int cols) {
  QuiverWindow w;
  w.component = component_of(seed);
  const int c0 = grid_position(seed).column;
  auto inside = [&](const Indec& a) {
    const GridPos g = grid_position(a);
    if (std::abs(g.column - c0) > cols) return false;
    return a.is_proj() || (g.row >= 1 && g.row <= rows);
  };
  std::set<Indec> seen;
  std::deque<Indec> queue;
  if (inside(seed)) {
    seen.insert(seed);
    queue.push_back(seed);
  }
  while (!queue.empty()) {
    const Indec a = queue.front();
    queue.pop_front();
    std::vector<Indec> next = irreducible_successors(a);
    const auto pred = irreducible_predecessors(a);
    next.insert(next.end(), pred.begin(), pred.end());
    if (a.is_min_string()) {
      next.push_back(tau(a));
      next.push_back(tau_inverse(a));
    }
    for (const auto& b : next) {
      if (inside(b) && seen.insert(b).second) queue.push_back(b);
    }
  }
  w.nodes.assign(seen.begin(), seen.end());
  for (const auto& a : w.nodes) {
    for (const auto& b : irreducible_successors(a)) {
      if (seen.count(b)) w.irreducible.emplace_back(a, b);
    }
    if (a.is_min_string()) {
      const Indec t = tau(a);
      if (seen.count(t)) w.translates.emplace_back(a, t);
    }
  }
  return w;
}

std::string to_dot(const QuiverWindow& w) {
  std::ostringstream out;
  out << "digraph \"" << component_name(w.component) << "\" {\n";
  out << "  node [shape=plaintext];\n";
  for (const auto& a : w.nodes) {
    const GridPos g = grid_position(a);
    out << "  \"" << to_string(a) << "\" [pos=\"" << 50 * g.column << ',' << 50 * g.row << "!\"];\n";
  }
  for (const auto& [a, b] : w.irreducible) {
    out << "  \"" << to_string(a) << "\" -> \"" << to_string(b) << "\";\n";
  }
  for (const auto& [a, b] : w.translates) {
    out << "  \"" << to_string(a) << "\" -> \"" << to_string(b) << "\" [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

BlockSum assemble_blocks(int p, const std::vector<NormalForm>& inputs) {
  if (p < 1) throw Error(Errc::invalid_argument, "need at least one block");
  BlockSum out;
  for (int k = 1; k <= p; ++k) out.parts.push_back(NormalForm::of({}, k));
  for (const auto& x : inputs) {
    if (x.node < 1 || x.node > p) {
      throw Error(Errc::invalid_argument,
                  "node " + std::to_string(x.node) + " outside 1.." + std::to_string(p));
    }
    auto& part = out.parts[static_cast<std::size_t>(x.node - 1)];
    part = part + x;
  }
  return out;
}

K0Class k0(const BlockSum& x) {
  K0Class out;
  for (const auto& part : x.parts) out.pairs.push_back(k0(part).pairs.front());
  return out;
}

int k0_rank(int p) {
  Matrix<Rationals> m;
  for (int k = 1; k <= p; ++k) {
    for (Sign s : {Sign::minus, Sign::plus}) {
      for (int n : {0, 1}) {
        const BlockSum b = assemble_blocks(p, {NormalForm::of({Indec::proj(s, n)}, k)});
        std::vector<mpq_class> row;
        for (const auto& pair : k0(b).pairs) {
          row.emplace_back(static_cast<long>(pair[0]));
          row.emplace_back(static_cast<long>(pair[1]));
        }
        m.push_back(std::move(row));
      }
    }
  }
  return static_cast<int>(rank(Rationals{}, std::move(m)));
}

std::vector<std::vector<int>> hom_matrix(const BlockSum& x, const BlockSum& y) {
  std::vector<std::vector<int>> out;
  for (const auto& p : x.parts) {
    std::vector<std::vector<int>> rows(p.atoms.size());
    for (const auto& q : y.parts) {
      const auto block = hom_matrix(p, q);
      for (std::size_t i = 0; i < p.atoms.size(); ++i) rows[i].insert(rows[i].end(), block[i].begin(), block[i].end());
    }
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

}  // namespace deltand
