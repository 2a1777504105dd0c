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

#include "deltand/komplex.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "deltand/error.hpp"

namespace deltand {

std::string_view sign_convention() {
  return "homological indexing; d lowers position; X[1]_p = X_{p-1}, d_{X[1]} = -d_X; "
         "cone(f: X -> Y[n])_p = Y[n]_p + X_{p-1}, d = [[d_{Y[n]}, f], [0, -d_X]]; "
         "entry (i,j) of a map is a path combination p with .p : P_target(p) -> P_source(p)";
}

PathMatrix::PathMatrix(std::vector<Vertex> domain, std::vector<Vertex> codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  entries_.reserve(domain_.size() * codomain_.size());
  for (Vertex r : codomain_) {
    for (Vertex c : domain_) entries_.emplace_back(r, c);
  }
}

PathMatrix PathMatrix::identity(const std::vector<Vertex>& terms) {
  PathMatrix m(terms, terms);
  for (std::size_t i = 0; i < terms.size(); ++i) m.set(i, i, PathCombo(Path::lazy(terms[i])));
  return m;
}

void PathMatrix::set(std::size_t i, std::size_t j, PathCombo value) {
  if (i >= rows() || j >= cols()) throw Error(Errc::invalid_argument, "matrix index out of range");
  if (value.source() != codomain_[i] || value.target() != domain_[j]) {
    throw Error(Errc::non_composable, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                          ") has the wrong endpoints");
  }
  entries_[i * cols() + j] = std::move(value);
}

void PathMatrix::add(std::size_t i, std::size_t j, const PathCombo& value) {
  if (i >= rows() || j >= cols()) throw Error(Errc::invalid_argument, "matrix index out of range");
  entries_[i * cols() + j] += value;
}

bool PathMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const PathCombo& c) { return c.is_zero(); });
}

PathMatrix& PathMatrix::operator*=(const Scalar& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

PathMatrix& PathMatrix::operator+=(const PathMatrix& other) {
  if (other.domain_ != domain_ || other.codomain_ != codomain_) {
    throw Error(Errc::invalid_argument, "matrix shapes differ");
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

PathMatrix then(const PathMatrix& a, const PathMatrix& b) {
  if (a.codomain() != b.domain()) throw Error(Errc::invalid_argument, "matrices do not compose");
  PathMatrix out(a.domain(), b.codomain());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      PathCombo acc(b.codomain()[i], a.domain()[k]);
      for (std::size_t j = 0; j < a.rows(); ++j) {
        if (a.at(j, k).is_zero() || b.at(i, j).is_zero()) continue;
        acc += compose(a.at(j, k), b.at(i, j));
      }
      out.set(i, k, std::move(acc));
    }
  }
  return out;
}

ProjComplex ProjComplex::stalk(Vertex v, int position) {
  ProjComplex x;
  x.set_terms(position, {v});
  return x;
}

const std::vector<Vertex>& ProjComplex::at(int p) const {
  static const std::vector<Vertex> kEmpty;
  auto it = terms_.find(p);
  return it == terms_.end() ? kEmpty : it->second;
}

PathMatrix ProjComplex::diff(int p) const {
  auto it = diffs_.find(p);
  if (it != diffs_.end()) return it->second;
  return PathMatrix(at(p), at(p - 1));
}

void ProjComplex::set_terms(int p, std::vector<Vertex> terms) {
  diffs_.erase(p);
  diffs_.erase(p + 1);
  if (terms.empty()) {
    terms_.erase(p);
  } else {
    terms_[p] = std::move(terms);
  }
}

void ProjComplex::set_diff(int p, PathMatrix d) {
  if (d.domain() != at(p) || d.codomain() != at(p - 1)) {
    throw Error(Errc::not_a_complex, "differential at position " + std::to_string(p) +
                                         " does not match the terms");
  }
  if (d.is_zero()) {
    diffs_.erase(p);
  } else {
    diffs_[p] = std::move(d);
  }
}

int ProjComplex::min_position() const {
  if (terms_.empty()) throw Error(Errc::invalid_argument, "empty complex");
  return terms_.begin()->first;
}

int ProjComplex::max_position() const {
  if (terms_.empty()) throw Error(Errc::invalid_argument, "empty complex");
  return terms_.rbegin()->first;
}

std::size_t ProjComplex::total_rank() const {
  std::size_t n = 0;
  for (const auto& [p, t] : terms_) n += t.size();
  return n;
}

PathMatrix ChainMap::component(int p) const {
  auto it = components.find(p);
  if (it != components.end()) return it->second;
  return PathMatrix(source.at(p), target.at(p - shift));
}

void ChainMap::set_component(int p, PathMatrix m) {
  if (m.domain() != source.at(p) || m.codomain() != target.at(p - shift)) {
    throw Error(Errc::invalid_chain_map, "component at position " + std::to_string(p) +
                                             " has the wrong shape");
  }
  if (m.is_zero()) {
    components.erase(p);
  } else {
    components[p] = std::move(m);
  }
}

void validate(const ProjComplex& x) {
  for (const auto& [p, d] : x.diffs()) {
    if (d.domain() != x.at(p) || d.codomain() != x.at(p - 1)) {
      throw Error(Errc::not_a_complex, "shape mismatch at position " + std::to_string(p));
    }
  }
  for (const auto& [p, d] : x.diffs()) {
    auto next = x.diffs().find(p - 1);
    if (next == x.diffs().end()) continue;
    if (!then(d, next->second).is_zero()) {
      throw Error(Errc::not_a_complex, "d o d != 0 from position " + std::to_string(p));
    }
  }
}

void validate_chain_map(const ChainMap& f) {
  validate(f.source);
  validate(f.target);
  for (const auto& [p, m] : f.components) {
    if (m.domain() != f.source.at(p) || m.codomain() != f.target.at(p - f.shift)) {
      throw Error(Errc::invalid_chain_map, "component shape mismatch at position " + std::to_string(p));
    }
  }
  if (f.source.empty() || f.target.empty()) return;
  const Scalar sign = (f.shift % 2 == 0) ? 1 : -1;
  for (int p = f.source.min_position(); p <= f.source.max_position() + 1; ++p) {
    // (-1)^n (f_p then d_Y) = (d_X then f_{p-1}) as maps X_p -> Y_{p-1-n}
    PathMatrix lhs = sign * then(f.component(p), f.target.diff(p - f.shift));
    PathMatrix rhs = then(f.source.diff(p), f.component(p - 1));
    if (!(lhs == rhs)) {
      throw Error(Errc::invalid_chain_map, "does not commute with differentials at position " +
                                               std::to_string(p));
    }
  }
}

ProjComplex shift(const ProjComplex& x, int n) {
  ProjComplex out;
  for (const auto& [p, t] : x.terms()) out.set_terms(p + n, t);
  const Scalar sign = (n % 2 == 0) ? 1 : -1;
  for (const auto& [p, d] : x.diffs()) out.set_diff(p + n, sign * d);
  return out;
}

namespace {

std::vector<Vertex> concat(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Copies m into out at the given offsets.
void place(PathMatrix& out, const PathMatrix& m, std::size_t row0, std::size_t col0) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).is_zero()) out.set(row0 + i, col0 + j, m.at(i, j));
    }
  }
}

std::set<int> positions_of(const ProjComplex& x) {
  std::set<int> out;
  for (const auto& [p, t] : x.terms()) out.insert(p);
  return out;
}

}  // namespace

ProjComplex direct_sum(const ProjComplex& x, const ProjComplex& y) {
  ProjComplex out;
  std::set<int> pos = positions_of(x);
  for (const auto& [p, t] : y.terms()) pos.insert(p);
  for (int p : pos) out.set_terms(p, concat(x.at(p), y.at(p)));
  for (int p : pos) {
    if (!pos.count(p - 1)) continue;
    PathMatrix d(out.at(p), out.at(p - 1));
    place(d, x.diff(p), 0, 0);
    place(d, y.diff(p), x.at(p - 1).size(), x.at(p).size());
    out.set_diff(p, std::move(d));
  }
  return out;
}

ProjComplex cone(const ChainMap& f) {
  validate_chain_map(f);
  const ProjComplex ys = shift(f.target, f.shift);
  const ProjComplex xs = shift(f.source, 1);
  ProjComplex out;
  std::set<int> pos = positions_of(ys);
  for (const auto& [p, t] : xs.terms()) pos.insert(p);
  for (int p : pos) out.set_terms(p, concat(ys.at(p), xs.at(p)));
  for (int p : pos) {
    if (!pos.count(p - 1)) continue;
    PathMatrix d(out.at(p), out.at(p - 1));
    place(d, ys.diff(p), 0, 0);
    if (!f.source.at(p - 1).empty() && !ys.at(p - 1).empty()) {
      place(d, f.component(p - 1), 0, ys.at(p).size());
    }
    place(d, xs.diff(p), ys.at(p - 1).size(), ys.at(p).size());
    out.set_diff(p, std::move(d));
  }
  return out;
}

ChainMap identity(const ProjComplex& x) {
  ChainMap f{x, x, 0, {}};
  for (const auto& [p, t] : x.terms()) f.set_component(p, PathMatrix::identity(t));
  return f;
}

ChainMap zero_map(const ProjComplex& x, const ProjComplex& y, int n) {
  return ChainMap{x, y, n, {}};
}

std::array<long long, 3> k0_raw(const ProjComplex& x) {
  std::array<long long, 3> out{0, 0, 0};
  for (const auto& [p, t] : x.terms()) {
    const long long sign = (p % 2 == 0) ? 1 : -1;
    for (Vertex v : t) out[static_cast<std::size_t>(v)] += sign;
  }
  return out;
}

bool is_in_star_subcategory(const ProjComplex& x) {
  for (const auto& [p, t] : x.terms()) {
    for (Vertex v : t) {
      if (v != Vertex::star) return false;
    }
  }
  return true;
}

namespace {

template <class T>
std::vector<T> erase_index(const std::vector<T>& v, std::size_t k) {
  std::vector<T> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != k) out.push_back(v[i]);
  }
  return out;
}

// Removes domain term j at p and codomain term i at p-1, invertible entry c.
ProjComplex eliminate(const ProjComplex& x, int p, std::size_t i, std::size_t j, const Scalar& c) {
  const PathMatrix d = x.diff(p);
  const std::vector<Vertex> src = erase_index(x.at(p), j);
  const std::vector<Vertex> dst = erase_index(x.at(p - 1), i);
  ProjComplex out;
  for (const auto& [q, t] : x.terms()) {
    if (q == p) {
      out.set_terms(q, src);
    } else if (q == p - 1) {
      out.set_terms(q, dst);
    } else {
      out.set_terms(q, t);
    }
  }
  PathMatrix nd(src, dst);
  const Scalar cinv = 1 / c;
  for (std::size_t r = 0, rr = 0; r < d.rows(); ++r) {
    if (r == i) continue;
    for (std::size_t s = 0, ss = 0; s < d.cols(); ++s) {
      if (s == j) continue;
      PathCombo e = d.at(r, s);
      if (!d.at(i, s).is_zero() && !d.at(r, j).is_zero()) {
        e -= cinv * compose(d.at(i, s), d.at(r, j));
      }
      nd.set(rr, ss, std::move(e));
      ++ss;
    }
    ++rr;
  }
  for (const auto& [q, m] : x.diffs()) {
    if (q == p) {
      out.set_diff(q, nd);
    } else if (q == p + 1) {
      // drop the row of the removed domain term
      PathMatrix r(m.domain(), src);
      for (std::size_t a = 0, aa = 0; a < m.rows(); ++a) {
        if (a == j) continue;
        for (std::size_t b = 0; b < m.cols(); ++b) r.set(aa, b, m.at(a, b));
        ++aa;
      }
      out.set_diff(q, std::move(r));
    } else if (q == p - 1) {
      // drop the column of the removed codomain term
      PathMatrix r(dst, m.codomain());
      for (std::size_t a = 0; a < m.rows(); ++a) {
        for (std::size_t b = 0, bb = 0; b < m.cols(); ++b) {
          if (b == i) continue;
          r.set(a, bb, m.at(a, b));
          ++bb;
        }
      }
      out.set_diff(q, std::move(r));
    } else {
      out.set_diff(q, m);
    }
  }
  return out;
}

}  // namespace

ProjComplex minimize(const ProjComplex& x) {
  ProjComplex cur = x;
  for (;;) {
    bool done = true;
    for (const auto& [p, d] : cur.diffs()) {
      for (std::size_t i = 0; i < d.rows() && done; ++i) {
        for (std::size_t j = 0; j < d.cols(); ++j) {
          if (auto c = d.at(i, j).as_lazy_scalar()) {
            cur = eliminate(cur, p, i, j, *c);
            done = false;
            break;
          }
        }
      }
      if (!done) break;
    }
    if (done) return cur;
  }
}

namespace {

struct TermId {
  int pos;
  std::size_t idx;
  auto operator<=>(const TermId&) const = default;
};

// Adjacency of the underlying graph.
std::map<TermId, std::vector<std::pair<TermId, const PathCombo*>>> term_graph(const ProjComplex& x) {
  std::map<TermId, std::vector<std::pair<TermId, const PathCombo*>>> adj;
  for (const auto& [p, t] : x.terms()) {
    for (std::size_t k = 0; k < t.size(); ++k) adj[{p, k}];
  }
  for (const auto& [p, d] : x.diffs()) {
    for (std::size_t i = 0; i < d.rows(); ++i) {
      for (std::size_t j = 0; j < d.cols(); ++j) {
        if (d.at(i, j).is_zero()) continue;
        adj[{p, j}].push_back({{p - 1, i}, &d.at(i, j)});
        adj[{p - 1, i}].push_back({{p, j}, &d.at(i, j)});
      }
    }
  }
  return adj;
}

}  // namespace

std::vector<ProjComplex> connected_components(const ProjComplex& x) {
  const auto adj = term_graph(x);
  std::map<TermId, int> comp;
  int ncomp = 0;
  for (const auto& [start, nb] : adj) {
    if (comp.count(start)) continue;
    std::queue<TermId> q;
    q.push(start);
    comp[start] = ncomp;
    while (!q.empty()) {
      const TermId t = q.front();
      q.pop();
      for (const auto& [u, e] : adj.at(t)) {
        if (comp.emplace(u, ncomp).second) q.push(u);
      }
    }
    ++ncomp;
  }
  std::vector<ProjComplex> out(static_cast<std::size_t>(ncomp));
  // index maps from old term index to new
  std::map<TermId, std::size_t> new_index;
  for (const auto& [p, t] : x.terms()) {
    std::vector<std::vector<Vertex>> per(static_cast<std::size_t>(ncomp));
    for (std::size_t k = 0; k < t.size(); ++k) {
      const int c = comp.at({p, k});
      new_index[{p, k}] = per[static_cast<std::size_t>(c)].size();
      per[static_cast<std::size_t>(c)].push_back(t[k]);
    }
    for (int c = 0; c < ncomp; ++c) {
      if (!per[static_cast<std::size_t>(c)].empty()) {
        out[static_cast<std::size_t>(c)].set_terms(p, per[static_cast<std::size_t>(c)]);
      }
    }
  }
  for (const auto& [p, d] : x.diffs()) {
    std::vector<PathMatrix> per;
    per.reserve(static_cast<std::size_t>(ncomp));
    for (int c = 0; c < ncomp; ++c) {
      per.emplace_back(out[static_cast<std::size_t>(c)].at(p), out[static_cast<std::size_t>(c)].at(p - 1));
    }
    for (std::size_t i = 0; i < d.rows(); ++i) {
      for (std::size_t j = 0; j < d.cols(); ++j) {
        if (d.at(i, j).is_zero()) continue;
        const int c = comp.at({p, j});
        per[static_cast<std::size_t>(c)].set(new_index.at({p - 1, i}), new_index.at({p, j}), d.at(i, j));
      }
    }
    for (int c = 0; c < ncomp; ++c) {
      auto& y = out[static_cast<std::size_t>(c)];
      if (!y.at(p).empty() && !y.at(p - 1).empty()) y.set_diff(p, std::move(per[static_cast<std::size_t>(c)]));
    }
  }
  return out;
}

Grading grading(const ProjComplex& x) {
  const auto adj = term_graph(x);
  std::map<TermId, int> grade;
  for (const auto& [start, nb] : adj) {
    if (grade.count(start)) continue;
    std::vector<TermId> members{start};
    grade[start] = 0;
    std::queue<TermId> q;
    q.push(start);
    while (!q.empty()) {
      const TermId t = q.front();
      q.pop();
      for (const auto& [u, e] : adj.at(t)) {
        const auto len = e->homogeneous_length();
        if (!len) {
          throw Error(Errc::not_gradable, "inhomogeneous entry next to position " + std::to_string(t.pos));
        }
        // codomain grade = domain grade + length; the codomain sits lower
        const int g = (u.pos < t.pos) ? grade[t] + static_cast<int>(*len)
                                      : grade[t] - static_cast<int>(*len);
        auto [it, fresh] = grade.emplace(u, g);
        if (fresh) {
          members.push_back(u);
          q.push(u);
        } else if (it->second != g) {
          throw Error(Errc::not_gradable, "inconsistent grading at position " + std::to_string(u.pos));
        }
      }
    }
    int lo = grade[start];
    for (const auto& m : members) lo = std::min(lo, grade[m]);
    for (const auto& m : members) grade[m] -= lo;
  }
  Grading out;
  for (const auto& [p, t] : x.terms()) {
    auto& g = out[p];
    for (std::size_t k = 0; k < t.size(); ++k) g.push_back(grade.at({p, k}));
  }
  return out;
}

}  // namespace deltand
