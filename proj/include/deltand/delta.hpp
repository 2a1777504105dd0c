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

// The quotient category: string complexes modulo the thick subcategory
// generated by P_*.  Its indecomposables are the stalks P_{+-}[n] and the
// minimal strings S_{+-}(l)[n].

#ifndef DELTAND_DELTA_HPP_
#define DELTAND_DELTA_HPP_

#include <array>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "deltand/komplex.hpp"
#include "deltand/strings.hpp"

namespace deltand {

struct Indec {
  enum class Kind : std::uint8_t { proj, min_string };

  Kind kind = Kind::proj;
  Sign sign = Sign::plus;  // sigma for Proj, tau for MinString
  int l = 0;               // 0 for Proj
  int shift = 0;

  static Indec proj(Sign sigma, int n) { return Indec{Kind::proj, sigma, 0, n}; }
  // Throws Error(invalid_argument) for l < 1.
  static Indec min_string(Sign tau, int l, int n);

  bool is_proj() const noexcept { return kind == Kind::proj; }
  bool is_min_string() const noexcept { return kind == Kind::min_string; }
  Indec shifted(int n) const {
    Indec out = *this;
    out.shift += n;
    return out;
  }

  friend bool operator==(const Indec&, const Indec&) = default;
  // Proj before MinString, then sign (minus first), shift, l.
  friend bool operator<(const Indec& a, const Indec& b) {
    return std::make_tuple(a.kind, a.sign, a.shift, a.l) < std::make_tuple(b.kind, b.sign, b.shift, b.l);
  }
};

// "P(+)[0]", "S(-,2)[1]".
std::string to_string(const Indec& a);
Indec parse_indec(std::string_view text);

struct NormalForm {
  int node = 1;
  // Sorted; empty means the zero object.
  std::vector<Indec> atoms;

  static NormalForm of(std::vector<Indec> atoms, int node = 1);
  void canonicalize();
  NormalForm shifted(int n) const;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm operator+(const NormalForm& a, const NormalForm& b);

NormalForm normalize(const StringSpec& s);
NormalForm normalize(std::span<const StringSpec> sum);
// Splits a complex into summands and normalizes each.  Throws
// Error(not_a_string_complex) when a summand is not a string.
NormalForm normalize_complex(const ProjComplex& x);

ProjComplex compile(const Indec& a);
ProjComplex compile(const NormalForm& x);

// Pair (c_minus, c_plus) per node.
struct K0Class {
  std::vector<std::array<long long, 2>> pairs;
  friend bool operator==(const K0Class&, const K0Class&) = default;
};

std::array<long long, 2> k0(const Indec& a);
K0Class k0(const NormalForm& x);
// Drops the P_* coordinate.
std::array<long long, 2> k0_of_complex(const ProjComplex& x);

// Hom dimensions between indecomposables.  Pairs of stalks use the closed
// formula; pairs involving a minimal string are computed in K^b on compiled
// representatives and cached per relative shift.
class HomOracle {
 public:
  explicit HomOracle(HomOptions options = {}) : options_(std::move(options)) {}

  // Throws Error(cutoff_not_stabilized).
  int hom_dim(const Indec& a, const Indec& b);
  const HomOptions& options() const noexcept { return options_; }
  std::size_t cache_size() const;

 private:
  struct Key {
    Indec::Kind ka;
    Sign sa;
    int la;
    Indec::Kind kb;
    Sign sb;
    int lb;
    auto operator<=>(const Key&) const = default;
  };
  struct Entry {
    std::map<int, long long> dims;  // absent shifts are zero
    std::map<int, bool> unstable;
  };

  HomOptions options_;
  mutable std::mutex mutex_;
  std::map<Key, Entry> cache_;
};

HomOracle& default_oracle();

int proj_hom_dim(Sign sigma, int j, Sign tau, int k);
int hom_dim(const Indec& a, const Indec& b);
int hom_dim(const Indec& a, const Indec& b, HomOracle& oracle);
// Rows indexed by X's atoms, columns by Y's; zero across nodes.
std::vector<std::vector<int>> hom_matrix(const NormalForm& x, const NormalForm& y);
std::vector<std::vector<int>> hom_matrix(const NormalForm& x, const NormalForm& y, HomOracle& oracle);

bool is_iso(const NormalForm& x, const NormalForm& y);

// The cone of S_tau(l)[m] -> S_sigma(1)[l+1+m] (identity on the P_sigma
// end), computed explicitly and identified.
Indec cone_minimal(Sign tau, int l, int m = 0);
ProjComplex cone_minimal_complex(Sign tau, int l, int m = 0);

// Cone of the nonzero map P_sigma -> P_tau[n], n < 0, realised by a roof
// through a string that is isomorphic to P_sigma in the quotient.
Indec cone_proj_map(Sign sigma, Sign tau, int n);
ProjComplex cone_proj_map_complex(Sign sigma, Sign tau, int n);

struct McmClass {
  long long branch_u = 0;
  long long branch_v = 0;
  friend bool operator==(const McmClass&, const McmClass&) = default;
};

// Proj(+, even) and Proj(-, odd) go to branch_u, the other stalks to
// branch_v, minimal strings to nothing.
McmClass stabilize(const NormalForm& x);
std::string_view stabilize_convention();

struct FingerprintOptions {
  int max_l = 6;
  int max_shift = 16;
  HomOptions hom;
};

struct Fingerprint {
  std::array<long long, 2> k0{0, 0};
  // dim Hom_K(X, S_tau(l)[m]) for tau in (-, +), l = 1..max_l,
  // m = -max_shift..max_shift, in that nesting order.
  std::vector<long long> homs;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const ProjComplex& x, const FingerprintOptions& options = {});

}  // namespace deltand

#endif  // DELTAND_DELTA_HPP_
