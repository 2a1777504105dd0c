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

#include "deltand/pathalg.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "deltand/error.hpp"

namespace deltand {

namespace {

Vertex step_target(Vertex at, Side side) {
  // on either side the walk alternates between * and the side's outer vertex
  if (at != Vertex::star) return Vertex::star;
  return side == Side::alpha_beta ? Vertex::minus : Vertex::plus;
}

Arrow step_arrow(Vertex at, Side side) {
  if (side == Side::alpha_beta) {
    return at == Vertex::minus ? Arrow::alpha : Arrow::beta;
  }
  return at == Vertex::plus ? Arrow::gamma : Arrow::delta;
}

bool side_contains(Side side, Vertex v) {
  if (v == Vertex::star) return side != Side::none;
  if (side == Side::alpha_beta) return v == Vertex::minus;
  if (side == Side::gamma_delta) return v == Vertex::plus;
  return false;
}

}  // namespace

std::string_view vertex_name(Vertex v) noexcept {
  switch (v) {
    case Vertex::minus: return "minus";
    case Vertex::star: return "star";
    case Vertex::plus: return "plus";
  }
  return "?";
}

char vertex_symbol(Vertex v) noexcept {
  switch (v) {
    case Vertex::minus: return '-';
    case Vertex::star: return '*';
    case Vertex::plus: return '+';
  }
  return '?';
}

std::optional<Vertex> parse_vertex(std::string_view text) {
  if (text == "-" || text == "minus") return Vertex::minus;
  if (text == "*" || text == "star") return Vertex::star;
  if (text == "+" || text == "plus") return Vertex::plus;
  return std::nullopt;
}

char arrow_letter(Arrow a) noexcept {
  switch (a) {
    case Arrow::alpha: return 'a';
    case Arrow::beta: return 'b';
    case Arrow::gamma: return 'g';
    case Arrow::delta: return 'd';
  }
  return '?';
}

std::optional<Path> Path::along(Vertex source, Side side, unsigned length) {
  if (length == 0) return lazy(source);
  if (side == Side::none || !side_contains(side, source)) return std::nullopt;
  return Path(source, side, length);
}

std::optional<Path> Path::from_word(std::span<const Arrow> word) {
  if (word.empty()) {
    throw Error(Errc::parse_error, "empty word has no endpoints");
  }
  // rightmost letter is applied first
  for (std::size_t i = word.size() - 1; i > 0; --i) {
    if (arrow_target(word[i]) != arrow_source(word[i - 1])) {
      throw Error(Errc::non_composable,
                  std::string("arrows ") + arrow_letter(word[i - 1]) +
                      arrow_letter(word[i]) + " do not compose");
    }
  }
  const Side side = arrow_side(word.back());
  for (Arrow a : word) {
    if (arrow_side(a) != side) return std::nullopt;
  }
  return Path(arrow_source(word.back()), side,
              static_cast<unsigned>(word.size()));
}

Vertex Path::target() const noexcept {
  if (length_ % 2 == 0) return source_;
  return step_target(source_, side_);
}

std::vector<Arrow> Path::word() const {
  std::vector<Arrow> out;
  out.reserve(length_);
  Vertex at = source_;
  for (unsigned i = 0; i < length_; ++i) {
    out.push_back(step_arrow(at, side_));
    at = step_target(at, side_);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool Path::contains_factor(Arrow first, Arrow second) const {
  const auto w = word();
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == first && w[i + 1] == second) return true;
  }
  return false;
}

std::optional<Path> compose_paths(const Path& p, const Path& q) {
  if (q.target() != p.source()) {
    throw Error(Errc::non_composable,
                "cannot compose " + to_string(p) + " after " + to_string(q));
  }
  if (q.is_lazy()) return p;
  if (p.is_lazy()) return q;
  if (p.side() != q.side()) return std::nullopt;
  return Path::along(q.source(), q.side(), q.length() + p.length());
}

std::vector<Path> path_basis(Vertex from, Vertex to, unsigned length) {
  std::vector<Path> out;
  if (length == 0) {
    if (from == to) out.push_back(Path::lazy(from));
    return out;
  }
  for (Side side : {Side::alpha_beta, Side::gamma_delta}) {
    auto p = Path::along(from, side, length);
    if (p && p->target() == to) out.push_back(*p);
  }
  return out;
}

std::string to_string(const Path& p) {
  if (p.is_lazy()) return std::string("e") + vertex_symbol(p.source());
  const auto w = p.word();
  std::string letters;
  for (Arrow a : w) letters.push_back(arrow_letter(a));
  const std::size_t n = letters.size();
  const std::size_t head = n % 2;
  const std::size_t reps = (n - head) / 2;
  if (reps < 2) return letters;
  std::string out = letters.substr(0, head);
  out += "(" + letters.substr(head, 2) + ")^" + std::to_string(reps);
  return out;
}

namespace {

class PathParser {
 public:
  explicit PathParser(std::string_view text) : text_(text) {}

  // Arrows in written order; lazy markers are recorded separately so that a
  // purely lazy word still has an endpoint.
  void parse(std::vector<Arrow>& out, std::vector<Vertex>& lazies) {
    sequence(out, lazies);
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
  }

 private:
  void sequence(std::vector<Arrow>& out, std::vector<Vertex>& lazies) {
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')') return;
      std::vector<Arrow> item;
      const char c = text_[pos_];
      if (c == '(') {
        ++pos_;
        sequence(item, lazies);
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
        ++pos_;
      } else if (c == 'e') {
        ++pos_;
        if (pos_ >= text_.size()) fail("lazy path needs a vertex");
        auto v = parse_vertex(text_.substr(pos_, 1));
        if (!v) fail("bad vertex after 'e'");
        ++pos_;
        lazies.push_back(*v);
      } else if (auto a = letter()) {
        item.push_back(*a);
      } else {
        fail("unexpected character");
      }
      unsigned reps = 1;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("exponent expected");
        reps = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      }
      for (unsigned r = 0; r < reps; ++r) out.insert(out.end(), item.begin(), item.end());
    }
  }

  std::optional<Arrow> letter() {
    static constexpr std::pair<std::string_view, Arrow> kNames[] = {
        {"\xCE\xB1", Arrow::alpha}, {"\xCE\xB2", Arrow::beta},
        {"\xCE\xB3", Arrow::gamma}, {"\xCE\xB4", Arrow::delta},
        {"a", Arrow::alpha},        {"b", Arrow::beta},
        {"g", Arrow::gamma},        {"d", Arrow::delta}};
    for (const auto& [name, arrow] : kNames) {
      if (text_.substr(pos_, name.size()) == name) {
        pos_ += name.size();
        return arrow;
      }
    }
    return std::nullopt;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::parse_error, what + " at offset " + std::to_string(pos_) +
                                       " in path '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Path parse_path(std::string_view text) {
  std::vector<Arrow> word;
  std::vector<Vertex> lazies;
  PathParser(text).parse(word, lazies);
  if (word.empty()) {
    if (lazies.empty()) throw Error(Errc::parse_error, "empty path");
    for (Vertex v : lazies) {
      if (v != lazies.front()) throw Error(Errc::non_composable, "lazy paths at different vertices");
    }
    return Path::lazy(lazies.front());
  }
  auto p = Path::from_word(word);
  if (!p) throw Error(Errc::zero_decoration, "path '" + std::string(text) + "' is zero");
  for (Vertex v : lazies) {
    if (v != p->source() && v != p->target()) {
      throw Error(Errc::non_composable, "lazy path does not match '" + std::string(text) + "'");
    }
  }
  return *p;
}

PathCombo::PathCombo(const Path& p, const Scalar& c)
    : source_(p.source()), target_(p.target()) {
  add_term(p, c);
}

std::optional<unsigned> PathCombo::homogeneous_length() const {
  if (terms_.empty()) return std::nullopt;
  const unsigned len = terms_.front().first.length();
  for (const auto& t : terms_) {
    if (t.first.length() != len) return std::nullopt;
  }
  return len;
}

PathCombo PathCombo::graded_component(unsigned length) const {
  PathCombo out(source_, target_);
  for (const auto& t : terms_) {
    if (t.first.length() == length) out.terms_.push_back(t);
  }
  return out;
}

std::optional<Scalar> PathCombo::as_lazy_scalar() const {
  if (terms_.size() != 1 || !terms_.front().first.is_lazy()) return std::nullopt;
  return terms_.front().second;
}

std::optional<PathCombo::Term> PathCombo::as_monomial() const {
  if (terms_.size() != 1) return std::nullopt;
  return terms_.front();
}

void PathCombo::add_term(const Path& p, const Scalar& c) {
  if (p.source() != source_ || p.target() != target_) {
    throw Error(Errc::non_composable, "path " + to_string(p) + " has the wrong endpoints");
  }
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                             [](const Term& t, const Path& q) { return t.first < q; });
  if (it != terms_.end() && it->first == p) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term(p, c));
  }
}

PathCombo& PathCombo::operator+=(const PathCombo& other) {
  if (other.source_ != source_ || other.target_ != target_) {
    throw Error(Errc::non_composable, "adding combos with different endpoints");
  }
  for (const auto& t : other.terms_) add_term(t.first, t.second);
  return *this;
}

PathCombo& PathCombo::operator-=(const PathCombo& other) {
  if (other.source_ != source_ || other.target_ != target_) {
    throw Error(Errc::non_composable, "subtracting combos with different endpoints");
  }
  for (const auto& t : other.terms_) add_term(t.first, -t.second);
  return *this;
}

PathCombo& PathCombo::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

PathCombo compose(const PathCombo& f, const PathCombo& g) {
  if (g.target() != f.source()) {
    throw Error(Errc::non_composable, "combos do not compose");
  }
  PathCombo out(g.source(), f.target());
  for (const auto& [p, a] : f.terms()) {
    for (const auto& [q, b] : g.terms()) {
      if (auto r = compose_paths(p, q)) out.add_term(*r, a * b);
    }
  }
  return out;
}

std::string to_string(const PathCombo& c) {
  if (c.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, coeff] : c.terms()) {
    Scalar mag = coeff;
    if (coeff < 0) {
      out += first ? "-" : " - ";
      mag = -coeff;
    } else if (!first) {
      out += " + ";
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += to_string(p);
    first = false;
  }
  return out;
}

namespace {

Scalar parse_scalar(const std::string& text) {
  Scalar q(text, 10);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace

PathCombo parse_path_combo(std::string_view text, Vertex source, Vertex target) {
  PathCombo out(source, target);
  auto trimmed = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  const std::string_view body = trimmed(text);
  if (body == "0") return out;
  if (body.empty()) throw Error(Errc::parse_error, "empty path combination");

  // split on top-level + and -, treating the character after 'e' as a vertex
  std::vector<std::pair<int, std::string_view>> pieces;
  int sign = 1;
  std::size_t start = 0;
  bool have_content = false;
  for (std::size_t i = 0; i < body.size(); ++i) {
    const char c = body[i];
    if (c == 'e') {
      ++i;
      have_content = true;
      continue;
    }
    if ((c == '+' || c == '-') && !(i > 0 && body[i - 1] == '/')) {
      if (have_content) {
        pieces.emplace_back(sign, trimmed(body.substr(start, i - start)));
        sign = (c == '-') ? -1 : 1;
      } else if (c == '-') {
        sign = -sign;
      }
      start = i + 1;
      have_content = false;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) have_content = true;
  }
  if (!have_content) throw Error(Errc::parse_error, "dangling sign in '" + std::string(body) + "'");
  pieces.emplace_back(sign, trimmed(body.substr(start)));

  for (const auto& [s, piece] : pieces) {
    Scalar coeff(s);
    std::string_view path_text = piece;
    const auto star = piece.find('*');
    // a '*' directly after 'e' is the star vertex, not a multiplication
    if (star != std::string_view::npos && !(star > 0 && piece[star - 1] == 'e')) {
      const std::string num(trimmed(piece.substr(0, star)));
      try {
        coeff *= parse_scalar(num);
      } catch (const std::invalid_argument&) {
        throw Error(Errc::parse_error, "bad coefficient '" + num + "'");
      }
      path_text = trimmed(piece.substr(star + 1));
    } else if (!piece.empty() && (std::isdigit(static_cast<unsigned char>(piece.front())))) {
      try {
        coeff *= parse_scalar(std::string(piece));
      } catch (const std::invalid_argument&) {
        throw Error(Errc::parse_error, "bad coefficient '" + std::string(piece) + "'");
      }
      if (source != target) throw Error(Errc::non_composable, "scalar term between different vertices");
      out.add_term(Path::lazy(source), coeff);
      continue;
    }
    const Path p = parse_path(path_text);
    if (p.source() != source || p.target() != target) {
      throw Error(Errc::non_composable, "path '" + std::string(path_text) + "' has the wrong endpoints");
    }
    out.add_term(p, coeff);
  }
  return out;
}

}  // namespace deltand
