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
#include <numeric>
#include <tuple>

#include "deltand/error.hpp"
#include "deltand/komplex.hpp"

namespace deltand {

long long GradedHomReport::total() const {
  return std::accumulate(dims.begin(), dims.end(), 0LL);
}

std::pair<int, int> hom_shift_range(const ProjComplex& x, const ProjComplex& y) {
  if (x.empty() || y.empty()) return {0, -1};
  return {x.min_position() - y.max_position(), x.max_position() - y.min_position()};
}

namespace {

int max_grade(const Grading& g) {
  int m = 0;
  for (const auto& [p, v] : g) {
    for (int x : v) m = std::max(m, x);
  }
  return m;
}

// Basis element of C_k: the path `path` as a component X_p[j] -> Y_{p-k}[i].
struct Elem {
  int p;
  std::size_t j;
  std::size_t i;
  Path path;
  auto operator<=>(const Elem&) const = default;
};

struct Basis {
  std::vector<Elem> elems;
  std::map<Elem, std::size_t> index;
};

template <class F>
struct DiffEntry {
  std::size_t row;  // codomain term
  std::size_t col;  // domain term
  std::vector<std::pair<Path, typename F::T>> terms;
};

template <class F>
class HomBuilder {
 public:
  using T = typename F::T;

  HomBuilder(const ProjComplex& x, const ProjComplex& y, F f)
      : x_(x), y_(y), f_(f), gx_(grading(x)), gy_(grading(y)) {
    convert(x_, dx_);
    convert(y_, dy_);
  }

  int min_degree() const { return -max_grade(gy_); }
  int default_cutoff() const { return std::max(max_grade(gx_), max_grade(gy_)) + 8; }

  const Grading& gx() const { return gx_; }
  const Grading& gy() const { return gy_; }

  const Basis& basis(int k, int d) {
    auto key = std::make_pair(k, d);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Basis b;
    for (const auto& [p, tx] : x_.terms()) {
      const auto& ty = y_.at(p - k);
      if (ty.empty()) continue;
      const auto& gxp = gx_.at(p);
      const auto& gyq = gy_.at(p - k);
      for (std::size_t j = 0; j < tx.size(); ++j) {
        for (std::size_t i = 0; i < ty.size(); ++i) {
          const int len = gyq[i] - gxp[j] + d;
          if (len < 0) continue;
          for (const Path& q : path_basis(ty[i], tx[j], static_cast<unsigned>(len))) {
            b.index.emplace(Elem{p, j, i, q}, b.elems.size());
            b.elems.push_back(Elem{p, j, i, q});
          }
        }
      }
    }
    return cache_.emplace(key, std::move(b)).first->second;
  }

  // D : C_{k,d} -> C_{k+1,d}, as a list of rows.
  Matrix<F> differential(int k, int d) {
    const Basis& src = basis(k, d);
    const Basis& dst = basis(k + 1, d);
    Matrix<F> m(dst.elems.size(), std::vector<T>(src.elems.size(), f_.zero()));
    const T minus_sign = (k % 2 == 0) ? f_.neg(f_.one()) : f_.one();
    for (std::size_t c = 0; c < src.elems.size(); ++c) {
      const Elem& e = src.elems[c];
      // f then d_Y
      if (auto it = dy_.find(e.p - k); it != dy_.end()) {
        for (const auto& ent : it->second) {
          if (ent.col != e.i) continue;
          for (const auto& [path, coeff] : ent.terms) {
            auto r = compose_paths(e.path, path);
            if (!r) continue;
            const std::size_t row = dst.index.at(Elem{e.p, e.j, ent.row, *r});
            m[row][c] = f_.add(m[row][c], coeff);
          }
        }
      }
      // -(-1)^k (d_X then f)
      if (auto it = dx_.find(e.p + 1); it != dx_.end()) {
        for (const auto& ent : it->second) {
          if (ent.row != e.j) continue;
          for (const auto& [path, coeff] : ent.terms) {
            auto r = compose_paths(path, e.path);
            if (!r) continue;
            const std::size_t row = dst.index.at(Elem{e.p + 1, ent.col, e.i, *r});
            m[row][c] = f_.add(m[row][c], f_.mul(minus_sign, coeff));
          }
        }
      }
    }
    return m;
  }

  std::size_t rank_of(int k, int d) {
    if (basis(k, d).elems.empty() || basis(k + 1, d).elems.empty()) return 0;
    return rank(f_, differential(k, d));
  }

  // Columns of D_{k,d} spanning the image inside C_{k+1,d}.
  EchelonBasis<F> image(int k, int d) {
    const std::size_t dim = basis(k + 1, d).elems.size();
    EchelonBasis<F> out(f_, dim);
    const std::size_t cols = basis(k, d).elems.size();
    if (dim == 0 || cols == 0) return out;
    const Matrix<F> m = differential(k, d);
    for (std::size_t c = 0; c < cols; ++c) {
      std::vector<T> v(dim);
      for (std::size_t r = 0; r < dim; ++r) v[r] = m[r][c];
      out.insert(v);
    }
    return out;
  }

  F field() const { return f_; }

 private:
  void convert(const ProjComplex& z, std::map<int, std::vector<DiffEntry<F>>>& out) {
    for (const auto& [p, d] : z.diffs()) {
      auto& list = out[p];
      for (std::size_t i = 0; i < d.rows(); ++i) {
        for (std::size_t j = 0; j < d.cols(); ++j) {
          if (d.at(i, j).is_zero()) continue;
          DiffEntry<F> e{i, j, {}};
          for (const auto& [path, coeff] : d.at(i, j).terms()) e.terms.emplace_back(path, f_.from(coeff));
          list.push_back(std::move(e));
        }
      }
    }
  }

  const ProjComplex& x_;
  const ProjComplex& y_;
  F f_;
  Grading gx_;
  Grading gy_;
  std::map<int, std::vector<DiffEntry<F>>> dx_;
  std::map<int, std::vector<DiffEntry<F>>> dy_;
  std::map<std::pair<int, int>, Basis> cache_;
};

GradedHomReport empty_report(int n, const HomOptions& o) {
  GradedHomReport r;
  r.shift = n;
  r.window = o.window;
  r.cutoff = o.cutoff.value_or(0);
  r.stable = true;
  return r;
}

void finish(GradedHomReport& r) {
  const auto w = static_cast<std::size_t>(std::max(r.window, 0));
  r.stable = r.dims.size() >= w &&
             std::all_of(r.dims.end() - static_cast<std::ptrdiff_t>(w), r.dims.end(),
                         [](long long v) { return v == 0; });
}

template <class F>
std::map<int, GradedHomReport> compute_range(const ProjComplex& x, const ProjComplex& y, int lo, int hi,
                                             const HomOptions& o, F f) {
  std::map<int, GradedHomReport> out;
  if (lo > hi) return out;
  HomBuilder<F> b(x, y, f);
  const int dmin = b.min_degree();
  const int cutoff = o.cutoff.value_or(b.default_cutoff());
  for (int n = lo; n <= hi; ++n) {
    GradedHomReport r;
    r.shift = n;
    r.min_degree = dmin;
    r.cutoff = cutoff;
    r.window = o.window;
    out.emplace(n, std::move(r));
  }
  for (int d = dmin; d <= cutoff; ++d) {
    std::map<int, std::size_t> ranks;
    for (int k = lo - 1; k <= hi; ++k) ranks[k] = b.rank_of(k, d);
    for (int n = lo; n <= hi; ++n) {
      const auto dim = static_cast<long long>(b.basis(n, d).elems.size());
      out[n].dims.push_back(dim - static_cast<long long>(ranks[n]) - static_cast<long long>(ranks[n - 1]));
    }
  }
  for (auto& [n, r] : out) finish(r);
  return out;
}

}  // namespace

std::map<int, GradedHomReport> hom_kb_range(const ProjComplex& x, const ProjComplex& y,
                                            const HomOptions& options) {
  const auto [lo, hi] = hom_shift_range(x, y);
  return with_field(options.field, [&](auto f) { return compute_range(x, y, lo, hi, options, f); });
}

GradedHomReport hom_kb(const ProjComplex& x, const ProjComplex& y, int n, const HomOptions& options) {
  const auto [lo, hi] = hom_shift_range(x, y);
  if (n < lo || n > hi) {
    GradedHomReport r = empty_report(n, options);
    if (!x.empty() && !y.empty()) {
      // keep the degree bookkeeping consistent with in-range reports
      auto full = with_field(options.field, [&](auto f) { return compute_range(x, y, lo, lo, options, f); });
      r.min_degree = full.at(lo).min_degree;
      r.cutoff = full.at(lo).cutoff;
      r.dims.assign(full.at(lo).dims.size(), 0);
      finish(r);
    }
    return r;
  }
  auto one = with_field(options.field, [&](auto f) { return compute_range(x, y, n, n, options, f); });
  return one.at(n);
}

std::vector<ChainMap> hom_kb_basis(const ProjComplex& x, const ProjComplex& y, int n,
                                   const HomOptions& options) {
  std::vector<ChainMap> out;
  const auto [lo, hi] = hom_shift_range(x, y);
  if (n < lo || n > hi) return out;
  const Rationals f;
  HomBuilder<Rationals> b(x, y, f);
  const int cutoff = options.cutoff.value_or(b.default_cutoff());
  for (int d = b.min_degree(); d <= cutoff; ++d) {
    const Basis& cn = b.basis(n, d);
    if (cn.elems.empty()) continue;
    std::vector<std::vector<mpq_class>> kernel;
    if (b.basis(n + 1, d).elems.empty()) {
      for (std::size_t c = 0; c < cn.elems.size(); ++c) {
        std::vector<mpq_class> v(cn.elems.size(), 0);
        v[c] = 1;
        kernel.push_back(std::move(v));
      }
    } else {
      kernel = nullspace(f, b.differential(n, d), cn.elems.size());
    }
    EchelonBasis<Rationals> span = b.image(n - 1, d);
    for (const auto& v : kernel) {
      if (!span.insert(v)) continue;
      ChainMap m{x, y, n, {}};
      std::map<int, PathMatrix> comps;
      for (std::size_t c = 0; c < v.size(); ++c) {
        if (sgn(v[c]) == 0) continue;
        const Elem& e = cn.elems[c];
        auto it = comps.find(e.p);
        if (it == comps.end()) it = comps.emplace(e.p, m.component(e.p)).first;
        it->second.add(e.i, e.j, PathCombo(e.path, v[c]));
      }
      for (auto& [p, mat] : comps) m.set_component(p, std::move(mat));
      out.push_back(std::move(m));
    }
  }
  return out;
}

namespace {

template <class F>
bool null_homotopic_in(const ChainMap& g, const HomOptions& o, F f) {
  HomBuilder<F> b(g.source, g.target, f);
  std::map<int, std::vector<typename F::T>> by_degree;
  for (const auto& [p, m] : g.components) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        for (const auto& [path, coeff] : m.at(i, j).terms()) {
          const int d = static_cast<int>(path.length()) - b.gy().at(p - g.shift)[i] + b.gx().at(p)[j];
          const Basis& cb = b.basis(g.shift, d);
          auto& v = by_degree.try_emplace(d, cb.elems.size(), f.zero()).first->second;
          const std::size_t idx = cb.index.at(Elem{p, j, i, path});
          v[idx] = f.add(v[idx], f.from(coeff));
        }
      }
    }
  }
  (void)o;
  for (const auto& [d, v] : by_degree) {
    if (!b.image(g.shift - 1, d).contains(v)) return false;
  }
  return true;
}

}  // namespace

bool is_null_homotopic(const ChainMap& f, const HomOptions& options) {
  validate_chain_map(f);
  return with_field(options.field, [&](auto fld) { return null_homotopic_in(f, options, fld); });
}

bool is_zero_object(const ProjComplex& x, const HomOptions& options) {
  if (x.empty()) return true;
  return is_null_homotopic(identity(x), options);
}

}  // namespace deltand
