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

#include "deltand/json_io.hpp"

#include <cctype>

#include "deltand/error.hpp"

namespace deltand {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::parse_error, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string vertex_text(Vertex v) { return std::string(1, vertex_symbol(v)); }

Vertex vertex_from(const Json& j) {
  if (!j.is_string()) bad("vertex must be a string");
  const auto v = parse_vertex(j.get<std::string>());
  if (!v) bad("unknown vertex '" + j.get<std::string>() + "'");
  return *v;
}

int int_from(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

template <class Fn>
auto guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    bad(e.what());
  }
}

}  // namespace

Json to_json(const ProjComplex& x) {
  Json terms = Json::array();
  for (const auto& [p, t] : x.terms()) {
    Json vs = Json::array();
    for (Vertex v : t) vs.push_back(vertex_text(v));
    terms.push_back({{"position", p}, {"vertices", vs}});
  }
  Json diffs = Json::array();
  for (const auto& [p, d] : x.diffs()) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < d.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < d.cols(); ++k) row.push_back(to_string(d.at(i, k)));
      rows.push_back(row);
    }
    diffs.push_back({{"position", p}, {"matrix", rows}});
  }
  return {{"convention", std::string(sign_convention())}, {"terms", terms}, {"differentials", diffs}};
}

ProjComplex complex_from_json(const Json& j) {
  return guarded([&] {
    ProjComplex x;
    for (const auto& t : field(j, "terms")) {
      std::vector<Vertex> vs;
      for (const auto& v : field(t, "vertices")) vs.push_back(vertex_from(v));
      x.set_terms(int_from(field(t, "position"), "position"), vs);
    }
    if (j.contains("differentials")) {
      for (const auto& d : j.at("differentials")) {
        const int p = int_from(field(d, "position"), "position");
        PathMatrix m(x.at(p), x.at(p - 1));
        const auto& rows = field(d, "matrix");
        if (!rows.is_array() || rows.size() != m.rows()) bad("differential at " + std::to_string(p) + " has the wrong number of rows");
        for (std::size_t i = 0; i < m.rows(); ++i) {
          if (!rows[i].is_array() || rows[i].size() != m.cols()) {
            bad("differential at " + std::to_string(p) + " has the wrong number of columns");
          }
          for (std::size_t k = 0; k < m.cols(); ++k) {
            m.set(i, k, parse_path_combo(rows[i][k].get<std::string>(), m.codomain()[i], m.domain()[k]));
          }
        }
        x.set_diff(p, std::move(m));
      }
    }
    validate(x);
    return x;
  });
}

Json to_json(const StringSpec& s) {
  Json nodes = Json::array();
  for (const auto& n : s.nodes) nodes.push_back({{"vertex", vertex_text(n.vertex)}, {"position", n.position}});
  Json edges = Json::array();
  for (const auto& e : s.edges) {
    edges.push_back({{"direction", e.direction == Direction::forward ? "forward" : "backward"},
                     {"decoration", to_string(e.decoration)}});
  }
  return {{"nodes", nodes}, {"edges", edges}, {"dsl", to_dsl(s)}};
}

StringSpec string_from_json(const Json& j) {
  return guarded([&] {
    StringSpec s;
    for (const auto& n : field(j, "nodes")) {
      s.nodes.push_back({vertex_from(field(n, "vertex")), int_from(field(n, "position"), "position")});
    }
    if (j.contains("edges")) {
      for (const auto& e : j.at("edges")) {
        const std::string dir = field(e, "direction").get<std::string>();
        if (dir != "forward" && dir != "backward") bad("direction must be forward or backward");
        s.edges.push_back({dir == "forward" ? Direction::forward : Direction::backward,
                           parse_path(field(e, "decoration").get<std::string>())});
      }
    }
    validate_string(s);
    return s;
  });
}

Json to_json(const NormalForm& x) {
  Json atoms = Json::array();
  for (const auto& a : x.atoms) atoms.push_back(to_string(a));
  return {{"node", x.node}, {"atoms", atoms}};
}

NormalForm normal_form_from_json(const Json& j) {
  return guarded([&] {
    std::vector<Indec> atoms;
    for (const auto& a : field(j, "atoms")) atoms.push_back(parse_indec(a.get<std::string>()));
    const int node = j.contains("node") ? int_from(j.at("node"), "node") : 1;
    return NormalForm::of(std::move(atoms), node);
  });
}

Json to_json(const GradedHomReport& r) {
  return {{"shift", r.shift},   {"min_degree", r.min_degree}, {"cutoff", r.cutoff},
          {"window", r.window}, {"dims", r.dims},             {"stable", r.stable},
          {"total", r.total()}};
}

Json to_json(const std::map<int, GradedHomReport>& reports) {
  Json out = Json::array();
  for (const auto& [n, r] : reports) out.push_back(to_json(r));
  return out;
}

Json to_json(const K0Class& k) {
  Json out = Json::array();
  for (const auto& p : k.pairs) out.push_back({p[0], p[1]});
  return out;
}

Json to_json(const McmClass& c) {
  return {{"convention", std::string(stabilize_convention())}, {"u", c.branch_u}, {"v", c.branch_v}};
}

Json to_json(const ArMesh& m) {
  Json middle = Json::array();
  for (const auto& a : m.middle) middle.push_back(to_string(a));
  return {{"start", to_string(m.start)}, {"middle", middle}, {"end", to_string(m.end)}};
}

Json to_json(const QuiverWindow& w) {
  Json nodes = Json::array();
  for (const auto& a : w.nodes) {
    const GridPos g = grid_position(a);
    nodes.push_back({{"id", to_string(a)}, {"column", g.column}, {"row", g.row}});
  }
  auto arcs = [](const auto& list) {
    Json out = Json::array();
    for (const auto& [a, b] : list) out.push_back({to_string(a), to_string(b)});
    return out;
  };
  return {{"component", std::string(component_name(w.component))},
          {"nodes", nodes},
          {"irreducible", arcs(w.irreducible)},
          {"translates", arcs(w.translates)}};
}

Json to_json(const BlockSum& b) {
  Json parts = Json::array();
  for (const auto& p : b.parts) parts.push_back(to_json(p));
  return {{"blocks", b.blocks()}, {"parts", parts}, {"k0", to_json(k0(b))}, {"k0_rank", k0_rank(b.blocks())}};
}

Payload parse_payload(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  Payload p;
  if (i < text.size() && (text[i] == '{' || text[i] == '[')) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      bad(e.what());
    }
    if (j.is_array()) {
      p.kind = Payload::Kind::strings;
      for (const auto& s : j) p.strings.push_back(string_from_json(s));
    } else if (j.contains("atoms")) {
      p.kind = Payload::Kind::normal_form;
      p.normal_form = normal_form_from_json(j);
    } else if (j.contains("terms")) {
      p.kind = Payload::Kind::complex;
      p.complex = complex_from_json(j);
    } else if (j.contains("nodes")) {
      p.kind = Payload::Kind::strings;
      p.strings.push_back(string_from_json(j));
    } else {
      bad("unrecognised JSON payload");
    }
    return p;
  }
  p.kind = Payload::Kind::strings;
  p.strings = parse_string_sum(text);
  return p;
}

NormalForm normalize(const Payload& p) {
  switch (p.kind) {
    case Payload::Kind::complex: return normalize_complex(p.complex);
    case Payload::Kind::normal_form: return p.normal_form;
    case Payload::Kind::strings: break;
  }
  return normalize(std::span<const StringSpec>(p.strings));
}

ProjComplex compile(const Payload& p) {
  switch (p.kind) {
    case Payload::Kind::complex: return p.complex;
    case Payload::Kind::normal_form: return compile(p.normal_form);
    case Payload::Kind::strings: break;
  }
  ProjComplex out;
  for (const auto& s : p.strings) out = direct_sum(out, compile(s));
  return out;
}

}  // namespace deltand
