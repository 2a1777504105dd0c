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

// The nodal quiver algebra
//
//         alpha         delta
//     -  ------>  *  ------->  +
//        <------     <-------
//          beta         gamma
//
// with relations  delta alpha = 0  and  beta gamma = 0.  Words are written
// with right-to-left composition: "delta alpha" means alpha first, then
// delta.  The relations are monomial, so a word either is a nonzero basis
// path or is zero; there is no normal-form rewriting beyond rejection.
//
// Every nonzero path of positive length uses arrows from one "side" only:
// {alpha, beta} (living on the vertices -, *) or {gamma, delta} (living on
// *, +).  A path is therefore determined by its source, its side and its
// length, which is the representation used by `Path`.

#ifndef DELTAND_PATHALG_HPP_
#define DELTAND_PATHALG_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace deltand {

enum class Vertex : std::uint8_t { minus = 0, star = 1, plus = 2 };

enum class Arrow : std::uint8_t { alpha, beta, gamma, delta };

enum class Side : std::uint8_t { none, alpha_beta, gamma_delta };

inline constexpr Vertex kVertices[] = {Vertex::minus, Vertex::star,
                                       Vertex::plus};

constexpr Vertex arrow_source(Arrow a) {
  switch (a) {
    case Arrow::alpha: return Vertex::minus;
    case Arrow::beta: return Vertex::star;
    case Arrow::gamma: return Vertex::plus;
    case Arrow::delta: return Vertex::star;
  }
  return Vertex::star;
}

constexpr Vertex arrow_target(Arrow a) {
  switch (a) {
    case Arrow::alpha: return Vertex::star;
    case Arrow::beta: return Vertex::minus;
    case Arrow::gamma: return Vertex::star;
    case Arrow::delta: return Vertex::plus;
  }
  return Vertex::star;
}

constexpr Side arrow_side(Arrow a) {
  return (a == Arrow::alpha || a == Arrow::beta) ? Side::alpha_beta
                                                 : Side::gamma_delta;
}

// "minus", "star", "plus"
std::string_view vertex_name(Vertex v) noexcept;
// "-", "*", "+"
char vertex_symbol(Vertex v) noexcept;
// Accepts both spellings above.
std::optional<Vertex> parse_vertex(std::string_view text);

// ASCII letter used by the path syntax: a, b, g, d.
char arrow_letter(Arrow a) noexcept;

// A nonzero path of the quiver with relations (the zero element is not a
// Path; operations that may produce zero return std::optional).
class Path {
 public:
  static Path lazy(Vertex v) { return Path(v, Side::none, 0); }

  // The unique path of the given side and length starting at `source`, if
  // one exists.  Length 0 yields the lazy path regardless of `side`.
  static std::optional<Path> along(Vertex source, Side side,
                                   unsigned length);

  // Interprets a written word (leftmost arrow applied last).  Returns
  // nullopt when the word contains delta-alpha or beta-gamma; throws
  // Error(non_composable) when consecutive arrows do not compose.  An empty
  // word is rejected since its endpoints are undetermined.
  static std::optional<Path> from_word(std::span<const Arrow> word);

  Vertex source() const noexcept { return source_; }
  Vertex target() const noexcept;
  unsigned length() const noexcept { return length_; }
  Side side() const noexcept { return side_; }
  bool is_lazy() const noexcept { return length_ == 0; }

  // Written word, leftmost arrow applied last.
  std::vector<Arrow> word() const;

  // True iff the written word contains the factor `first second`.
  bool contains_factor(Arrow first, Arrow second) const;

  // No factor beta-alpha or delta-gamma.
  bool is_minimal() const { return !contains_factor(Arrow::beta, Arrow::alpha) &&
                                   !contains_factor(Arrow::delta, Arrow::gamma); }

  friend bool operator==(const Path&, const Path&) = default;
  friend std::strong_ordering operator<=>(const Path& x, const Path& y) {
    if (auto c = x.length_ <=> y.length_; c != 0) return c;
    if (auto c = x.side_ <=> y.side_; c != 0) return c;
    return x.source_ <=> y.source_;
  }

 private:
  Path(Vertex source, Side side, unsigned length)
      : source_(source), side_(side), length_(length) {}

  Vertex source_;
  Side side_;
  unsigned length_;
};

// Word p q: q is applied first.  Requires target(q) == source(p), otherwise
// throws Error(non_composable).  nullopt means the product is zero.
std::optional<Path> compose_paths(const Path& p, const Path& q);

// Nonzero paths from `from` to `to` of the given length, alpha-beta side
// first.  Never more than two.
std::vector<Path> path_basis(Vertex from, Vertex to, unsigned length);

// Path syntax: letters a b g d, lazy paths e- e* e+, groups with exponents,
// e.g. "d(gd)^2".  Written order equals word order.
std::string to_string(const Path& p);
// Throws Error(parse_error); a word that evaluates to zero is rejected with
// Error(zero_decoration).
Path parse_path(std::string_view text);

using Scalar = mpq_class;

// A finite linear combination of paths sharing one source and one target.
class PathCombo {
 public:
  using Term = std::pair<Path, Scalar>;

  PathCombo(Vertex source, Vertex target) : source_(source), target_(target) {}
  explicit PathCombo(const Path& p, const Scalar& c = 1);

  Vertex source() const noexcept { return source_; }
  Vertex target() const noexcept { return target_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  // Sorted by path, coefficients nonzero.
  const std::vector<Term>& terms() const noexcept { return terms_; }

  // Common length of all terms; nullopt for zero or inhomogeneous combos.
  std::optional<unsigned> homogeneous_length() const;
  PathCombo graded_component(unsigned length) const;
  // c for a combo equal to c * e_x.
  std::optional<Scalar> as_lazy_scalar() const;
  // The single term of a one-term combo.
  std::optional<Term> as_monomial() const;

  void add_term(const Path& p, const Scalar& c);

  PathCombo& operator+=(const PathCombo& other);
  PathCombo& operator-=(const PathCombo& other);
  PathCombo& operator*=(const Scalar& c);

  friend PathCombo operator+(PathCombo x, const PathCombo& y) { return x += y; }
  friend PathCombo operator-(PathCombo x, const PathCombo& y) { return x -= y; }
  friend PathCombo operator*(const Scalar& c, PathCombo x) { return x *= c; }
  friend PathCombo operator-(PathCombo x) { return x *= Scalar(-1); }
  friend bool operator==(const PathCombo&, const PathCombo&) = default;

 private:
  Vertex source_;
  Vertex target_;
  std::vector<Term> terms_;
};

// Bilinear extension of compose_paths: the word f g, g applied first as a
// path.  As maps of projectives, .f followed by .g equals .(f g).
PathCombo compose(const PathCombo& f, const PathCombo& g);

// Terms joined by + and -, optional rational coefficients separated by '*',
// e.g. "ab - 2*gd" or "3/2*b(ab)".  "0" is the zero combo.
std::string to_string(const PathCombo& c);
PathCombo parse_path_combo(std::string_view text, Vertex source,
                           Vertex target);

}  // namespace deltand

#endif  // DELTAND_PATHALG_HPP_
