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

// Independent reference computations used by the unit and acceptance
// suites.  Nothing here calls the engine's path arithmetic or Hom builder:
// paths are plain written words and composition is concatenation followed by
// a scan for the forbidden factors.

#ifndef DELTAND_TESTS_ORACLES_HPP_
#define DELTAND_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "deltand/komplex.hpp"
#include "deltand/pathalg.hpp"

namespace oracle {

using deltand::Arrow;
using deltand::Vertex;
using Word = std::vector<Arrow>;  // written order, rightmost applied first

inline constexpr Arrow kArrows[] = {Arrow::alpha, Arrow::beta, Arrow::gamma, Arrow::delta};

inline bool forbidden(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == Arrow::delta && w[i + 1] == Arrow::alpha) return true;
    if (w[i] == Arrow::beta && w[i + 1] == Arrow::gamma) return true;
  }
  return false;
}

struct Elem {
  // lazy paths are words of length 0 tagged with their vertex
  Vertex from;
  Word word;
  auto operator<=>(const Elem&) const = default;
};

inline Vertex target_of(const Elem& e) {
  return e.word.empty() ? e.from : deltand::arrow_target(e.word.front());
}

// Nonzero words from `from` to `to` of length len.
inline std::vector<Elem> words(Vertex from, Vertex to, unsigned len) {
  std::vector<Elem> out;
  Word applied;
  auto rec = [&](auto&& self, Vertex at) -> void {
    if (applied.size() == len) {
      if (at != to) return;
      Word written(applied.rbegin(), applied.rend());
      if (!forbidden(written)) out.push_back({from, written});
      return;
    }
    for (Arrow a : kArrows) {
      if (deltand::arrow_source(a) != at) continue;
      applied.push_back(a);
      self(self, deltand::arrow_target(a));
      applied.pop_back();
    }
  };
  rec(rec, from);
  return out;
}

// Map ".q then .e": the written word q e; nullopt when zero.
inline std::optional<Elem> then(const Elem& q, const Elem& e) {
  Word w = q.word;
  w.insert(w.end(), e.word.begin(), e.word.end());
  if (forbidden(w)) return std::nullopt;
  return Elem{e.from, w};
}

inline Elem from_path(const deltand::Path& p) { return Elem{p.source(), p.word()}; }

// Grades by relaxation over the entries; -1 marks failure.
using Grades = std::map<std::pair<int, std::size_t>, int>;

inline std::optional<Grades> grades(const deltand::ProjComplex& x) {
  Grades g;
  for (const auto& [p, t] : x.terms()) {
    for (std::size_t k = 0; k < t.size(); ++k) g[{p, k}] = INT32_MIN;
  }
  struct Edge {
    std::pair<int, std::size_t> dom, cod;
    int len;
  };
  std::vector<Edge> edges;
  for (const auto& [p, d] : x.diffs()) {
    for (std::size_t i = 0; i < d.rows(); ++i) {
      for (std::size_t j = 0; j < d.cols(); ++j) {
        if (d.at(i, j).is_zero()) continue;
        const int len = static_cast<int>(d.at(i, j).terms().front().first.length());
        for (const auto& t : d.at(i, j).terms()) {
          if (static_cast<int>(t.first.length()) != len) return std::nullopt;
        }
        edges.push_back({{p, j}, {p - 1, i}, len});
      }
    }
  }
  for (auto& [key, val] : g) {
    if (val != INT32_MIN) continue;
    val = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& e : edges) {
        int& a = g[e.dom];
        int& b = g[e.cod];
        if (a != INT32_MIN && b == INT32_MIN) {
          b = a + e.len;
          changed = true;
        } else if (b != INT32_MIN && a == INT32_MIN) {
          a = b - e.len;
          changed = true;
        } else if (a != INT32_MIN && b != INT32_MIN && b != a + e.len) {
          return std::nullopt;
        }
      }
    }
  }
  return g;
}

inline std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  auto inv = [p](std::uint64_t a) {
    std::uint64_t res = 1, e = p - 2;
    while (e) {
      if (e & 1) res = res * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return res;
  };
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const std::uint64_t iv = inv(m[r][c]);
    for (auto& v : m[r]) v = v * iv % p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::uint64_t f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = (m[i][k] + p - f * m[r][k] % p) % p;
    }
    ++r;
  }
  return r;
}

// dim Hom_{K^b}(X, Y[n]) summed over internal degrees in [lo, hi]
// (defaults wide enough for the complexes in the test suites).
inline long brute_hom(const deltand::ProjComplex& x, const deltand::ProjComplex& y, int n, int extra = 14) {
  constexpr std::uint64_t kP = 32003;
  if (x.empty() || y.empty()) return 0;
  const auto gx = grades(x);
  const auto gy = grades(y);
  if (!gx || !gy) return -1;
  int gmax = 0;
  for (const auto& [k, v] : *gx) gmax = std::max(gmax, v);
  for (const auto& [k, v] : *gy) gmax = std::max(gmax, v);
  // normalise grades per complex so that they are nonnegative
  auto coeff = [&](const mpq_class& q) {
    const std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), kP);
    std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kP), r = 1, e = kP - 2;
    while (e) {
      if (e & 1) r = r * den % kP;
      den = den * den % kP;
      e >>= 1;
    }
    return num * r % kP;
  };
  int gxmin = 0, gymin = 0, gymax = 0;
  for (const auto& [k, v] : *gx) gxmin = std::min(gxmin, v);
  for (const auto& [k, v] : *gy) {
    gymin = std::min(gymin, v);
    gymax = std::max(gymax, v);
  }
  using Key = std::tuple<int, std::size_t, std::size_t, Elem>;
  auto basis = [&](int k, int d) {
    std::map<Key, std::size_t> idx;
    for (const auto& [p, tx] : x.terms()) {
      const auto& ty = y.at(p - k);
      for (std::size_t j = 0; j < tx.size(); ++j) {
        for (std::size_t i = 0; i < ty.size(); ++i) {
          const int len = gy->at({p - k, i}) - gx->at({p, j}) + d;
          if (len < 0) continue;
          for (const auto& w : words(ty[i], tx[j], static_cast<unsigned>(len))) {
            idx.emplace(Key{p, j, i, w}, idx.size());
          }
        }
      }
    }
    return idx;
  };
  auto rank_d = [&](int k, int d) -> std::size_t {
    const auto src = basis(k, d);
    const auto dst = basis(k + 1, d);
    if (src.empty() || dst.empty()) return 0;
    std::vector<std::vector<std::uint64_t>> m(dst.size(), std::vector<std::uint64_t>(src.size(), 0));
    const std::uint64_t sign = (k % 2 == 0) ? kP - 1 : 1;
    for (const auto& [key, c] : src) {
      const auto& [p, j, i, q] = key;
      const auto dy = y.diff(p - k);
      for (std::size_t i2 = 0; i2 < dy.rows(); ++i2) {
        if (i >= dy.cols()) break;
        for (const auto& [path, cf] : dy.at(i2, i).terms()) {
          auto r = then(q, from_path(path));
          if (!r) continue;
          auto& cell = m[dst.at(Key{p, j, i2, *r})][c];
          cell = (cell + coeff(cf)) % kP;
        }
      }
      const auto dx = x.diff(p + 1);
      for (std::size_t j0 = 0; j0 < dx.cols(); ++j0) {
        if (j >= dx.rows()) break;
        for (const auto& [path, cf] : dx.at(j, j0).terms()) {
          auto r = then(from_path(path), q);
          if (!r) continue;
          auto& cell = m[dst.at(Key{p + 1, j0, i, *r})][c];
          cell = (cell + sign * coeff(cf)) % kP;
        }
      }
    }
    return rank_mod(std::move(m), kP);
  };
  long total = 0;
  for (int d = gxmin - gymax - 1; d <= gmax - gymin + extra; ++d) {
    const long dim = static_cast<long>(basis(n, d).size());
    total += dim - static_cast<long>(rank_d(n, d)) - static_cast<long>(rank_d(n - 1, d));
  }
  return total;
}

// Closed formula for Hom(P_sigma[j], P_tau[k]) in the quotient.
inline int proj_hom_formula(bool same_sign, int j, int k) {
  const int n = k - j;
  if (n > 0) return 0;
  if (n % 2 == 0) return same_sign ? 1 : 0;
  return same_sign ? 0 : 1;
}

}  // namespace oracle

#endif  // DELTAND_TESTS_ORACLES_HPP_
