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

#include "deltand/strings.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>

#include "deltand/error.hpp"

namespace deltand {

std::optional<Sign> parse_sign(std::string_view text) {
  if (text == "+" || text == "plus") return Sign::plus;
  if (text == "-" || text == "minus") return Sign::minus;
  return std::nullopt;
}

StringSpec StringSpec::shifted(int n) const {
  StringSpec out = *this;
  for (auto& node : out.nodes) node.position += n;
  return out;
}

StringSpec StringSpec::reversed() const {
  StringSpec out;
  out.nodes.assign(nodes.rbegin(), nodes.rend());
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
    out.edges.push_back({it->direction == Direction::forward ? Direction::backward : Direction::forward,
                         it->decoration});
  }
  return out;
}

StringSpec MinStringSpec::to_spec() const {
  if (l < 1) throw Error(Errc::invalid_argument, "minimal strings need l >= 1");
  StringSpec s;
  s.nodes.push_back({vertex_of(sigma()), l + 1 + shift});
  for (int k = 0; k < l; ++k) s.nodes.push_back({Vertex::star, l - k + shift});
  s.nodes.push_back({vertex_of(tau), shift});
  const Side last = side_of(tau);
  const Side other = last == Side::alpha_beta ? Side::gamma_delta : Side::alpha_beta;
  for (int k = 0; k <= l; ++k) {
    const Side side = (l - k) % 2 == 0 ? last : other;
    const Vertex dom = s.nodes[static_cast<std::size_t>(k)].vertex;
    const Vertex cod = s.nodes[static_cast<std::size_t>(k + 1)].vertex;
    const unsigned len = (dom == Vertex::star && cod == Vertex::star) ? 2 : 1;
    auto p = Path::along(cod, side, len);
    s.edges.push_back({Direction::forward, *p});
  }
  return s;
}

namespace {

[[noreturn]] void fail(Errc code, std::size_t edge, const std::string& what) {
  throw Error(code, "edge " + std::to_string(edge) + ": " + what);
}

}  // namespace

void validate_string(const StringSpec& s) {
  if (s.nodes.empty()) throw Error(Errc::bad_endpoints, "empty walk");
  if (s.edges.size() + 1 != s.nodes.size()) {
    throw Error(Errc::bad_endpoints, "a walk with " + std::to_string(s.nodes.size()) + " nodes needs " +
                                         std::to_string(s.nodes.size() - 1) + " edges");
  }
  for (std::size_t k = 1; k + 1 < s.nodes.size(); ++k) {
    if (s.nodes[k].vertex != Vertex::star) {
      throw Error(Errc::bad_endpoints, "interior node " + std::to_string(k) + " is not P*");
    }
  }
  for (std::size_t k = 0; k < s.edges.size(); ++k) {
    const auto& e = s.edges[k];
    const auto& a = s.nodes[k];
    const auto& b = s.nodes[k + 1];
    const bool fwd = e.direction == Direction::forward;
    if (b.position != a.position + (fwd ? -1 : 1)) fail(Errc::bad_position, k, "positions do not match the direction");
    if (e.decoration.is_lazy()) fail(Errc::zero_decoration, k, "decoration must be a path of positive length");
    const Vertex dom = fwd ? a.vertex : b.vertex;
    const Vertex cod = fwd ? b.vertex : a.vertex;
    if (e.decoration.source() != cod || e.decoration.target() != dom) {
      fail(Errc::bad_decoration, k, "decoration " + to_string(e.decoration) + " does not join the nodes");
    }
  }
  for (std::size_t k = 0; k + 1 < s.edges.size(); ++k) {
    const auto& e = s.edges[k];
    const auto& f = s.edges[k + 1];
    if (e.direction == f.direction) {
      const auto composite = e.direction == Direction::forward ? compose_paths(e.decoration, f.decoration)
                                                               : compose_paths(f.decoration, e.decoration);
      if (composite) fail(Errc::zero_composition_violated, k + 1, "composite with the previous edge is nonzero");
    } else if (e.decoration.side() == f.decoration.side()) {
      fail(Errc::bad_alternation, k + 1, "decorations at an orientation change must alternate");
    }
  }
}

ProjComplex compile(const StringSpec& s) {
  validate_string(s);
  std::map<int, std::vector<Vertex>> terms;
  std::vector<std::size_t> slot(s.nodes.size());
  for (std::size_t k = 0; k < s.nodes.size(); ++k) {
    auto& t = terms[s.nodes[k].position];
    slot[k] = t.size();
    t.push_back(s.nodes[k].vertex);
  }
  ProjComplex x;
  for (auto& [p, t] : terms) x.set_terms(p, t);
  std::map<int, PathMatrix> diffs;
  for (std::size_t k = 0; k < s.edges.size(); ++k) {
    const bool fwd = s.edges[k].direction == Direction::forward;
    const std::size_t dom = fwd ? k : k + 1;
    const std::size_t cod = fwd ? k + 1 : k;
    const int p = s.nodes[dom].position;
    auto it = diffs.find(p);
    if (it == diffs.end()) it = diffs.emplace(p, x.diff(p)).first;
    it->second.set(slot[cod], slot[dom], PathCombo(s.edges[k].decoration));
  }
  for (auto& [p, d] : diffs) x.set_diff(p, std::move(d));
  return x;
}

ProjComplex compile(const MinStringSpec& s) { return compile(s.to_spec()); }

std::optional<StringSpec> decompile(const ProjComplex& x) {
  if (x.empty()) return std::nullopt;
  struct Id {
    int pos;
    std::size_t idx;
    auto operator<=>(const Id&) const = default;
  };
  std::map<Id, std::vector<std::pair<Id, Path>>> adj;
  for (const auto& [p, t] : x.terms()) {
    for (std::size_t k = 0; k < t.size(); ++k) adj[{p, k}];
  }
  std::size_t edges = 0;
  for (const auto& [p, d] : x.diffs()) {
    for (std::size_t i = 0; i < d.rows(); ++i) {
      for (std::size_t j = 0; j < d.cols(); ++j) {
        if (d.at(i, j).is_zero()) continue;
        const auto mono = d.at(i, j).as_monomial();
        if (!mono) return std::nullopt;
        adj[{p, j}].push_back({{p - 1, i}, mono->first});
        adj[{p - 1, i}].push_back({{p, j}, mono->first});
        ++edges;
      }
    }
  }
  if (edges + 1 != adj.size()) return std::nullopt;
  std::optional<Id> start;
  for (const auto& [id, nb] : adj) {
    if (nb.size() > 2) return std::nullopt;
    if (nb.size() <= 1 && (!start || id.pos > start->pos)) start = id;
  }
  if (!start) return std::nullopt;
  StringSpec s;
  std::optional<Id> prev;
  Id cur = *start;
  for (;;) {
    s.nodes.push_back({x.at(cur.pos)[cur.idx], cur.pos});
    const auto& nb = adj.at(cur);
    const std::pair<Id, Path>* next = nullptr;
    for (const auto& e : nb) {
      if (!prev || !(e.first == *prev)) next = &e;
    }
    if (!next) break;
    const Direction dir = next->first.pos < cur.pos ? Direction::forward : Direction::backward;
    s.edges.push_back({dir, next->second});
    prev = cur;
    cur = next->first;
    if (s.nodes.size() > adj.size()) return std::nullopt;
  }
  if (s.nodes.size() != adj.size()) return std::nullopt;
  try {
    validate_string(s);
  } catch (const Error&) {
    return std::nullopt;
  }
  return s;
}

bool same_string(const StringSpec& a, const StringSpec& b) { return a == b || a == b.reversed(); }

std::string to_dsl(const StringSpec& s) {
  std::string out;
  for (std::size_t k = 0; k < s.nodes.size(); ++k) {
    if (k > 0) {
      const auto& e = s.edges[k - 1];
      const std::string w = to_string(e.decoration);
      out += e.direction == Direction::forward ? " <" + w + "| " : " |" + w + "> ";
    }
    out += std::string("P") + vertex_symbol(s.nodes[k].vertex) + "@" + std::to_string(s.nodes[k].position);
  }
  return out;
}

StringSpec parse_string(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto bad = [&](const std::string& what) -> Error {
    return Error(Errc::parse_error, what + " at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
  };
  StringSpec s;
  std::vector<std::optional<int>> given;
  for (;;) {
    skip();
    if (pos >= text.size() || text[pos] != 'P') throw bad("node 'P-', 'P*' or 'P+' expected");
    ++pos;
    if (pos >= text.size()) throw bad("vertex expected");
    const auto v = parse_vertex(text.substr(pos, 1));
    if (!v) throw bad("vertex expected");
    ++pos;
    std::optional<int> at;
    if (pos < text.size() && text[pos] == '@') {
      ++pos;
      const std::size_t start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      const std::string num(text.substr(start, pos - start));
      if (num.empty() || num == "-" || num == "+") throw bad("position expected");
      at = std::stoi(num);
    }
    s.nodes.push_back({*v, 0});
    given.push_back(at);
    skip();
    if (pos >= text.size()) break;
    const char open = text[pos];
    if (open != '<' && open != '|') throw bad("edge '<w|' or '|w>' expected");
    const char close = open == '<' ? '|' : '>';
    const std::size_t end = text.find(close, pos + 1);
    if (end == std::string_view::npos) throw bad("unterminated edge");
    const Path w = parse_path(text.substr(pos + 1, end - pos - 1));
    s.edges.push_back({open == '<' ? Direction::forward : Direction::backward, w});
    pos = end + 1;
  }
  // positions: propagate from the first annotated node, else end at 0
  std::size_t anchor = s.nodes.size() - 1;
  int anchor_pos = 0;
  for (std::size_t k = 0; k < given.size(); ++k) {
    if (given[k]) {
      anchor = k;
      anchor_pos = *given[k];
      break;
    }
  }
  s.nodes[anchor].position = anchor_pos;
  for (std::size_t k = anchor; k + 1 < s.nodes.size(); ++k) {
    s.nodes[k + 1].position = s.nodes[k].position + (s.edges[k].direction == Direction::forward ? -1 : 1);
  }
  for (std::size_t k = anchor; k > 0; --k) {
    s.nodes[k - 1].position = s.nodes[k].position - (s.edges[k - 1].direction == Direction::forward ? -1 : 1);
  }
  for (std::size_t k = 0; k < given.size(); ++k) {
    if (given[k] && *given[k] != s.nodes[k].position) {
      throw Error(Errc::bad_position, "node " + std::to_string(k) + " is annotated @" + std::to_string(*given[k]) +
                                          " but the walk puts it at " + std::to_string(s.nodes[k].position));
    }
  }
  return s;
}

std::vector<StringSpec> parse_string_sum(std::string_view text) {
  std::vector<StringSpec> out;
  std::string current;
  auto flush = [&] {
    const bool blank = std::all_of(current.begin(), current.end(),
                                   [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (!blank) out.push_back(parse_string(current));
    current.clear();
  };
  bool comment = false;
  for (char c : text) {
    if (c == '\n') {
      comment = false;
      flush();
    } else if (comment) {
      continue;
    } else if (c == '#') {
      comment = true;
    } else if (c == ';') {
      flush();
    } else {
      current.push_back(c);
    }
  }
  flush();
  return out;
}

}  // namespace deltand
