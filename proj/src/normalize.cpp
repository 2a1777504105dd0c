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

#include <stdexcept>
#include <string>

#include "deltand/delta.hpp"
#include "deltand/error.hpp"

namespace deltand {

namespace {

[[noreturn]] void broken(const std::string& what) {
  throw std::logic_error("normalization invariant violated: " + what);
}

// Slot of walk node k inside its position's term list, matching compile().
std::size_t slot_of(const StringSpec& s, std::size_t k) {
  std::size_t slot = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (s.nodes[i].position == s.nodes[k].position) ++slot;
  }
  return slot;
}

PathMatrix unit_entry(const std::vector<Vertex>& dom, const std::vector<Vertex>& cod, std::size_t i,
                      std::size_t j, const Path& p) {
  PathMatrix m(dom, cod);
  m.set(i, j, PathCombo(p));
  return m;
}

// The projection X -> P_v[n] that is the identity on node k.
ChainMap projection(const ProjComplex& x, const StringSpec& s, std::size_t k) {
  const Vertex v = s.nodes[k].vertex;
  const int n = s.nodes[k].position;
  ChainMap f{x, ProjComplex::stalk(v, 0), n, {}};
  f.set_component(n, unit_entry(x.at(n), {v}, 0, slot_of(s, k), Path::lazy(v)));
  validate_chain_map(f);
  return f;
}

// The inclusion P_v[n] -> X onto node k.
ChainMap inclusion(const ProjComplex& x, const StringSpec& s, std::size_t k) {
  const Vertex v = s.nodes[k].vertex;
  const int n = s.nodes[k].position;
  ChainMap f{ProjComplex::stalk(v, n), x, 0, {}};
  f.set_component(n, unit_entry({v}, x.at(n), slot_of(s, k), 0, Path::lazy(v)));
  validate_chain_map(f);
  return f;
}

std::vector<Indec> reduce(const StringSpec& s);

std::vector<Indec> reduce_complex(const ProjComplex& x) {
  std::vector<Indec> out;
  for (const auto& part : connected_components(minimize(x))) {
    auto spec = decompile(part);
    if (!spec) throw Error(Errc::not_a_string_complex, "a summand is not a string complex");
    auto atoms = reduce(*spec);
    out.insert(out.end(), atoms.begin(), atoms.end());
  }
  return out;
}

bool is_star(const WalkNode& n) { return n.vertex == Vertex::star; }

Sign sign_of(Vertex v) { return v == Vertex::plus ? Sign::plus : Sign::minus; }

std::vector<Indec> reduce(const StringSpec& s) {
  validate_string(s);
  const std::size_t last = s.nodes.size() - 1;
  const bool star_first = is_star(s.nodes.front());
  const bool star_last = is_star(s.nodes.back());

  if (star_first && star_last) return {};  // lies in K^b(add P_*)
  if (last == 0) return {Indec::proj(sign_of(s.nodes[0].vertex), s.nodes[0].position)};

  const ProjComplex x = compile(s);

  // one star endpoint: X is the stalk of the other endpoint
  if (star_first != star_last) {
    const std::size_t e = star_first ? last : 0;
    const WalkEdge& edge = s.edges[e == 0 ? 0 : last - 1];
    const bool e_is_domain = (e == 0) == (edge.direction == Direction::forward);
    const ProjComplex c = e_is_domain ? cone(projection(x, s, e)) : cone(inclusion(x, s, e));
    if (!is_in_star_subcategory(minimize(c))) broken("endpoint absorption left a non-star cone");
    return {Indec::proj(sign_of(s.nodes[e].vertex), s.nodes[e].position)};
  }

  // split at the first orientation change
  for (std::size_t k = 1; k < last; ++k) {
    const Direction in = s.edges[k - 1].direction;
    const Direction out = s.edges[k].direction;
    if (in == out) continue;
    const bool sink = in == Direction::forward;
    const int pos = s.nodes[k].position;
    ProjComplex rest;
    if (sink) {
      ChainMap f{ProjComplex::stalk(Vertex::star, pos), x, 0, {}};
      f.set_component(pos, unit_entry({Vertex::star}, x.at(pos), slot_of(s, k), 0, Path::lazy(Vertex::star)));
      rest = cone(f);
    } else {
      ChainMap f{x, ProjComplex::stalk(Vertex::star, 0), pos, {}};
      f.set_component(pos, unit_entry(x.at(pos), {Vertex::star}, 0, slot_of(s, k), Path::lazy(Vertex::star)));
      rest = shift(cone(f), -1);
    }
    const auto parts = connected_components(minimize(rest));
    if (parts.size() != 2) broken("orientation split did not produce two pieces");
    return reduce_complex(rest);
  }

  // linear: read forward
  const StringSpec fwd = s.edges.front().direction == Direction::forward ? s : s.reversed();
  for (std::size_t k = 0; k < fwd.edges.size(); ++k) {
    const Path& w = fwd.edges[k].decoration;
    if (w.is_minimal()) continue;
    // w = a b with a ending in beta or delta and b starting with alpha or gamma
    const auto word = w.word();
    std::size_t cut = 0;
    while (!((word[cut] == Arrow::beta && word[cut + 1] == Arrow::alpha) ||
             (word[cut] == Arrow::delta && word[cut + 1] == Arrow::gamma))) {
      ++cut;
    }
    const std::vector<Arrow> wa(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(cut + 1));
    const std::vector<Arrow> wb(word.begin() + static_cast<std::ptrdiff_t>(cut + 1), word.end());
    const Path a = *Path::from_word(wa);
    const Path b = *Path::from_word(wb);

    StringSpec left, right;
    left.nodes.assign(fwd.nodes.begin(), fwd.nodes.begin() + static_cast<std::ptrdiff_t>(k + 1));
    left.edges.assign(fwd.edges.begin(), fwd.edges.begin() + static_cast<std::ptrdiff_t>(k));
    right.nodes.assign(fwd.nodes.begin() + static_cast<std::ptrdiff_t>(k + 1), fwd.nodes.end());
    right.edges.assign(fwd.edges.begin() + static_cast<std::ptrdiff_t>(k + 1), fwd.edges.end());
    const ProjComplex lx = shift(compile(left), -1);
    const ProjComplex rx = compile(right);
    const int s_pos = fwd.nodes[k + 1].position;

    // phi = g then h through P_*[s]
    ChainMap g{lx, ProjComplex::stalk(Vertex::star, 0), s_pos, {}};
    g.set_component(s_pos, unit_entry(lx.at(s_pos), {Vertex::star}, 0, slot_of(left, k), a));
    ChainMap h{ProjComplex::stalk(Vertex::star, s_pos), rx, 0, {}};
    h.set_component(s_pos, unit_entry({Vertex::star}, rx.at(s_pos), 0, 0, b));
    ChainMap phi{lx, rx, 0, {}};
    phi.set_component(s_pos, unit_entry(lx.at(s_pos), rx.at(s_pos), 0, slot_of(left, k), w));
    validate_chain_map(g);
    validate_chain_map(h);
    if (!(then(g.component(s_pos), h.component(s_pos)) == phi.component(s_pos))) {
      broken("factorization through P_* does not reproduce the edge");
    }
    const auto back = decompile(cone(phi));
    if (!back || !same_string(*back, fwd)) broken("cone of the split map is not the string");

    auto atoms = reduce(left);
    auto more = reduce(right);
    atoms.insert(atoms.end(), more.begin(), more.end());
    return atoms;
  }

  // linearly oriented with minimal decorations: a minimal string
  const WalkNode& end = fwd.nodes.back();
  const Indec atom = Indec::min_string(sign_of(end.vertex), static_cast<int>(fwd.nodes.size()) - 2, end.position);
  if (!same_string(MinStringSpec{atom.sign, atom.l, atom.shift}.to_spec(), fwd)) {
    broken("linear minimal string does not match the canonical shape");
  }
  return {atom};
}

}  // namespace

NormalForm normalize(const StringSpec& s) { return NormalForm::of(reduce(s)); }

NormalForm normalize(std::span<const StringSpec> sum) {
  std::vector<Indec> atoms;
  for (const auto& s : sum) {
    auto more = reduce(s);
    atoms.insert(atoms.end(), more.begin(), more.end());
  }
  return NormalForm::of(std::move(atoms));
}

NormalForm normalize_complex(const ProjComplex& x) {
  validate(x);
  return NormalForm::of(reduce_complex(x));
}

namespace {

Indec single_min_string(const ProjComplex& c, const char* what) {
  const NormalForm nf = normalize_complex(c);
  if (nf.atoms.size() != 1 || !nf.atoms[0].is_min_string()) broken(std::string(what) + " is not a minimal string");
  return nf.atoms[0];
}

}  // namespace

ProjComplex cone_minimal_complex(Sign tau, int l, int m) {
  const MinStringSpec src{tau, l, m};
  const ProjComplex x = compile(src);
  const ProjComplex y = compile(MinStringSpec{src.sigma(), 1, 0});
  const int n = l + 1 + m;
  ChainMap f{x, y, n, {}};
  f.set_component(n, unit_entry(x.at(n), y.at(0), 0, 0, Path::lazy(vertex_of(src.sigma()))));
  return cone(f);
}

Indec cone_minimal(Sign tau, int l, int m) {
  return single_min_string(cone_minimal_complex(tau, l, m), "cone of the minimal-degree map");
}

ProjComplex cone_proj_map_complex(Sign sigma, Sign tau, int n) {
  if (n == 0 && sigma == tau) throw Error(Errc::identity_cone, "the cone of an isomorphism is zero");
  if (proj_hom_dim(sigma, 0, tau, n) == 0) {
    throw Error(Errc::no_nonzero_map, "Hom(P(" + std::string(1, sign_symbol(sigma)) + ")[0], P(" +
                                          std::string(1, sign_symbol(tau)) + ")[" + std::to_string(n) + "]) = 0");
  }
  // roof P_sigma <- Q -> P_tau[n] with Q = P_sigma -> P_* -> ... -> P_* (position n)
  const int len = -n;
  const Side last = side_of(tau);
  const Side other = last == Side::alpha_beta ? Side::gamma_delta : Side::alpha_beta;
  StringSpec q;
  q.nodes.push_back({vertex_of(sigma), 0});
  for (int k = 1; k <= len; ++k) q.nodes.push_back({Vertex::star, -k});
  for (int k = 0; k < len; ++k) {
    const Side side = (len - k) % 2 == 0 ? last : other;
    const Vertex dom = q.nodes[static_cast<std::size_t>(k)].vertex;
    const unsigned plen = dom == Vertex::star ? 2 : 1;
    q.edges.push_back({Direction::forward, *Path::along(Vertex::star, side, plen)});
  }
  const ProjComplex qx = compile(q);
  if (!is_in_star_subcategory(minimize(cone(projection(qx, q, 0))))) broken("roof leg is not invertible");
  ChainMap g{qx, ProjComplex::stalk(vertex_of(tau), 0), n, {}};
  g.set_component(n, unit_entry(qx.at(n), {vertex_of(tau)}, 0, 0, *Path::along(vertex_of(tau), last, 1)));
  return cone(g);
}

Indec cone_proj_map(Sign sigma, Sign tau, int n) {
  return single_min_string(cone_proj_map_complex(sigma, tau, n), "cone of the stalk map");
}

}  // namespace deltand
