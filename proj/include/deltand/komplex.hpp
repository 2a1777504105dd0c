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

// Bounded complexes of indecomposable projectives over the nodal algebra.
//
// Conventions (homological indexing, differentials lower the position):
//   * .p : P_y -> P_x for a path p from x to y.  A matrix entry (i, j) of a
//     map U -> V is a PathCombo from V[i] to U[j].
//   * then(A, B) is "first A, then B".
//   * X[1]_p = X_{p-1} and d_{X[1]} = -d_X.
//   * A chain map f : X -> Y[n] has components f_p : X_p -> Y_{p-n} with
//     (-1)^n (f_p then d_Y) = (d_X then f_{p-1}).
//   * cone(f)_p = Y[n]_p (+) X_{p-1} with differential
//     [[d_{Y[n]}, f_{p-1}], [0, -d_X]].

#ifndef DELTAND_KOMPLEX_HPP_
#define DELTAND_KOMPLEX_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deltand/linalg.hpp"
#include "deltand/pathalg.hpp"

namespace deltand {

// One-line statement of the conventions above, for output headers.
std::string_view sign_convention();

class PathMatrix {
 public:
  PathMatrix() = default;
  PathMatrix(std::vector<Vertex> domain, std::vector<Vertex> codomain);
  static PathMatrix identity(const std::vector<Vertex>& terms);

  const std::vector<Vertex>& domain() const noexcept { return domain_; }
  const std::vector<Vertex>& codomain() const noexcept { return codomain_; }
  std::size_t rows() const noexcept { return codomain_.size(); }
  std::size_t cols() const noexcept { return domain_.size(); }

  const PathCombo& at(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  void set(std::size_t i, std::size_t j, PathCombo value);
  void add(std::size_t i, std::size_t j, const PathCombo& value);

  bool is_zero() const;

  PathMatrix& operator*=(const Scalar& c);
  PathMatrix& operator+=(const PathMatrix& other);
  friend PathMatrix operator*(const Scalar& c, PathMatrix m) { return m *= c; }
  friend PathMatrix operator-(PathMatrix m) { return m *= Scalar(-1); }
  friend bool operator==(const PathMatrix&, const PathMatrix&) = default;

 private:
  std::vector<Vertex> domain_;
  std::vector<Vertex> codomain_;
  std::vector<PathCombo> entries_;
};

// First a, then b.
PathMatrix then(const PathMatrix& a, const PathMatrix& b);

class ProjComplex {
 public:
  ProjComplex() = default;
  static ProjComplex stalk(Vertex v, int position);

  // Only nonempty positions are stored.
  const std::map<int, std::vector<Vertex>>& terms() const noexcept { return terms_; }
  // Only nonzero differentials are stored; key p is the map p -> p-1.
  const std::map<int, PathMatrix>& diffs() const noexcept { return diffs_; }

  const std::vector<Vertex>& at(int p) const;
  PathMatrix diff(int p) const;

  // Replacing the terms at p drops the differentials touching p.
  void set_terms(int p, std::vector<Vertex> terms);
  // Shapes are checked against the current terms.
  void set_diff(int p, PathMatrix d);

  bool empty() const noexcept { return terms_.empty(); }
  int min_position() const;
  int max_position() const;
  std::size_t total_rank() const;

  friend bool operator==(const ProjComplex&, const ProjComplex&) = default;

 private:
  std::map<int, std::vector<Vertex>> terms_;
  std::map<int, PathMatrix> diffs_;
};

// f : source -> target[shift].
struct ChainMap {
  ProjComplex source;
  ProjComplex target;
  int shift = 0;
  std::map<int, PathMatrix> components;

  // Zero matrix when absent.
  PathMatrix component(int p) const;
  void set_component(int p, PathMatrix m);
};

// Throws Error(not_a_complex) naming the offending position.
void validate(const ProjComplex& x);
// Throws Error(invalid_chain_map).
void validate_chain_map(const ChainMap& f);

ProjComplex shift(const ProjComplex& x, int n);
ProjComplex direct_sum(const ProjComplex& x, const ProjComplex& y);
ProjComplex cone(const ChainMap& f);
ChainMap identity(const ProjComplex& x);
ChainMap zero_map(const ProjComplex& x, const ProjComplex& y, int n);

// Alternating counts of P_-, P_*, P_+.
std::array<long long, 3> k0_raw(const ProjComplex& x);

bool is_in_star_subcategory(const ProjComplex& x);

// Gaussian elimination of every entry that is an invertible multiple of a
// lazy path.  The result is homotopy equivalent to the input.
ProjComplex minimize(const ProjComplex& x);

// Summands of the underlying graph (terms joined by nonzero entries),
// ordered by their first term.
std::vector<ProjComplex> connected_components(const ProjComplex& x);

// Per-term internal grades, parallel to x.terms(): every nonzero entry is
// homogeneous and the codomain grade is the domain grade plus the path
// length.  Each connected component is normalised to minimum 0.  Throws
// Error(not_gradable).
using Grading = std::map<int, std::vector<int>>;
Grading grading(const ProjComplex& x);

struct HomOptions {
  Field field = Field::prime();
  // Highest internal degree examined; default is max grade + 8.
  std::optional<int> cutoff;
  // Stability requires this many trailing zero degrees.
  int window = 4;
};

struct GradedHomReport {
  int shift = 0;
  int min_degree = 0;
  int cutoff = 0;
  int window = 0;
  // dims[k] belongs to internal degree min_degree + k.
  std::vector<long long> dims;
  bool stable = true;

  long long total() const;
};

// dim Hom_{K^b}(X, Y[n]) per internal degree.
GradedHomReport hom_kb(const ProjComplex& x, const ProjComplex& y, int n,
                       const HomOptions& options = {});

// Shifts n for which the Hom complex can be nonzero.
std::pair<int, int> hom_shift_range(const ProjComplex& x, const ProjComplex& y);

// Reports for every n in hom_shift_range at once.
std::map<int, GradedHomReport> hom_kb_range(const ProjComplex& x, const ProjComplex& y,
                                            const HomOptions& options = {});

// Cocycles representing a basis of Hom_{K^b}(X, Y[n]) up to the cutoff.
// Always computed over Q so that the representatives are exact.
std::vector<ChainMap> hom_kb_basis(const ProjComplex& x, const ProjComplex& y, int n,
                                   const HomOptions& options = {});

bool is_null_homotopic(const ChainMap& f, const HomOptions& options = {});

// True iff End_{K^b}(X) = 0.
bool is_zero_object(const ProjComplex& x, const HomOptions& options = {});

}  // namespace deltand

#endif  // DELTAND_KOMPLEX_HPP_
