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

// Exact dense linear algebra over a prime field or over Q.

#ifndef DELTAND_LINALG_HPP_
#define DELTAND_LINALG_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "deltand/error.hpp"

namespace deltand {

// Runtime choice of coefficient field: F_p for prime p, or Q when p == 0.
class Field {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  Field() = default;
  static Field prime(std::uint32_t p = kDefaultPrime);
  static Field rationals() { return Field(0); }
  // "q" / "Q" for rationals, otherwise a prime number.
  static Field parse(std::string_view text);

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = kDefaultPrime;
};

struct ModP {
  using T = std::uint32_t;
  std::uint32_t p;

  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(T a) const { return a == 0; }
  T add(T a, T b) const { return static_cast<T>((std::uint64_t{a} + b) % p); }
  T sub(T a, T b) const { return static_cast<T>((std::uint64_t{a} + p - b) % p); }
  T mul(T a, T b) const { return static_cast<T>((std::uint64_t{a} * b) % p); }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
  T inv(T a) const {
    // Fermat; a != 0
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<T>(r);
  }
  T from(const mpq_class& q) const {
    const unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
    if (den == 0) {
      throw Error(Errc::field_error, "denominator divisible by the characteristic");
    }
    const unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
    return mul(static_cast<T>(num), inv(static_cast<T>(den)));
  }
  mpq_class to_rational(T a) const {
    // symmetric representative
    const long v = a > p / 2 ? static_cast<long>(a) - static_cast<long>(p) : static_cast<long>(a);
    return mpq_class(v);
  }
};

struct Rationals {
  using T = mpq_class;

  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T neg(const T& a) const { return -a; }
  T inv(const T& a) const { return 1 / a; }
  T from(const mpq_class& q) const { return q; }
  mpq_class to_rational(const T& a) const { return a; }
};

// Calls fn(ModP{...}) or fn(Rationals{}) according to the runtime field.
template <class Fn>
decltype(auto) with_field(const Field& field, Fn&& fn) {
  if (field.is_rational()) return fn(Rationals{});
  return fn(ModP{field.characteristic()});
}

template <class F>
using Matrix = std::vector<std::vector<typename F::T>>;

// Incrementally maintained row-echelon basis of a subspace.
template <class F>
class EchelonBasis {
 public:
  using T = typename F::T;

  EchelonBasis(F field, std::size_t dim) : f_(field), dim_(dim) {}

  std::size_t rank() const { return rows_.size(); }

  // Reduces v against the basis; returns the reduced vector.
  std::vector<T> reduce(std::vector<T> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t c = pivots_[r];
      if (f_.is_zero(v[c])) continue;
      const T factor = v[c];
      const auto& row = rows_[r];
      for (std::size_t k = c; k < dim_; ++k) {
        if (!f_.is_zero(row[k])) v[k] = f_.sub(v[k], f_.mul(factor, row[k]));
      }
    }
    return v;
  }

  bool contains(const std::vector<T>& v) const {
    const auto r = reduce(v);
    for (const auto& x : r) {
      if (!f_.is_zero(x)) return false;
    }
    return true;
  }

  // Adds v; returns false when v was already in the span.
  bool insert(const std::vector<T>& v) {
    auto r = reduce(v);
    std::size_t c = 0;
    while (c < dim_ && f_.is_zero(r[c])) ++c;
    if (c == dim_) return false;
    const T inv = f_.inv(r[c]);
    for (std::size_t k = c; k < dim_; ++k) r[k] = f_.mul(r[k], inv);
    // rows stay sorted by pivot so reduce() sweeps left to right
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < c) ++at;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(r));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), c);
    return true;
  }

 private:
  F f_;
  std::size_t dim_;
  std::vector<std::vector<T>> rows_;
  std::vector<std::size_t> pivots_;
};

// Rank of a rows x cols matrix given as a row list.
template <class F>
std::size_t rank(const F& f, Matrix<F> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && f.is_zero(m[piv][c])) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const auto inv = f.inv(m[r][c]);
    for (std::size_t k = c; k < cols; ++k) m[r][k] = f.mul(m[r][k], inv);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (f.is_zero(m[i][c])) continue;
      const auto factor = m[i][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!f.is_zero(m[r][k])) m[i][k] = f.sub(m[i][k], f.mul(factor, m[r][k]));
      }
    }
    ++r;
  }
  return r;
}

// Basis of {x : m x = 0} for an rows x cols matrix.
template <class F>
std::vector<std::vector<typename F::T>> nullspace(const F& f, Matrix<F> m, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && f.is_zero(m[piv][c])) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const auto inv = f.inv(m[r][c]);
    for (std::size_t k = 0; k < cols; ++k) m[r][k] = f.mul(m[r][k], inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || f.is_zero(m[i][c])) continue;
      const auto factor = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) {
        if (!f.is_zero(m[r][k])) m[i][k] = f.sub(m[i][k], f.mul(factor, m[r][k]));
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<typename F::T>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::T> v(cols, f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = f.neg(m[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace deltand

#endif  // DELTAND_LINALG_HPP_
