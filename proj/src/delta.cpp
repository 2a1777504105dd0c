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

#include "deltand/delta.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "deltand/error.hpp"

namespace deltand {

Indec Indec::min_string(Sign tau, int l, int n) {
  if (l < 1) throw Error(Errc::invalid_argument, "minimal strings need l >= 1");
  return Indec{Kind::min_string, tau, l, n};
}

std::string to_string(const Indec& a) {
  std::string out = a.is_proj() ? std::string("P(") + sign_symbol(a.sign) + ")"
                                : std::string("S(") + sign_symbol(a.sign) + "," + std::to_string(a.l) + ")";
  return out + "[" + std::to_string(a.shift) + "]";
}

Indec parse_indec(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto bad = [&]() { return Error(Errc::parse_error, "bad atom '" + std::string(text) + "'"); };
  if (s.size() < 4 || (s[0] != 'P' && s[0] != 'S') || s[1] != '(') throw bad();
  const auto close = s.find(')');
  if (close == std::string::npos) throw bad();
  const std::string inner = s.substr(2, close - 2);
  int shift = 0;
  const std::string rest = s.substr(close + 1);
  if (!rest.empty()) {
    if (rest.front() != '[' || rest.back() != ']') throw bad();
    try {
      std::size_t used = 0;
      shift = std::stoi(rest.substr(1, rest.size() - 2), &used);
      if (used != rest.size() - 2) throw bad();
    } catch (const std::logic_error&) {
      throw bad();
    }
  }
  if (s[0] == 'P') {
    const auto sign = parse_sign(inner);
    if (!sign) throw bad();
    return Indec::proj(*sign, shift);
  }
  const auto comma = inner.find(',');
  if (comma == std::string::npos) throw bad();
  const auto sign = parse_sign(inner.substr(0, comma));
  if (!sign) throw bad();
  int l = 0;
  try {
    std::size_t used = 0;
    l = std::stoi(inner.substr(comma + 1), &used);
    if (used != inner.size() - comma - 1) throw bad();
  } catch (const std::logic_error&) {
    throw bad();
  }
  return Indec::min_string(*sign, l, shift);
}

NormalForm NormalForm::of(std::vector<Indec> atoms, int node) {
  NormalForm x{node, std::move(atoms)};
  x.canonicalize();
  return x;
}

void NormalForm::canonicalize() { std::sort(atoms.begin(), atoms.end()); }

NormalForm NormalForm::shifted(int n) const {
  NormalForm out = *this;
  for (auto& a : out.atoms) a.shift += n;
  return out;
}

NormalForm operator+(const NormalForm& a, const NormalForm& b) {
  if (a.node != b.node) throw Error(Errc::invalid_argument, "normal forms live on different nodes");
  std::vector<Indec> atoms = a.atoms;
  atoms.insert(atoms.end(), b.atoms.begin(), b.atoms.end());
  return NormalForm::of(std::move(atoms), a.node);
}

ProjComplex compile(const Indec& a) {
  if (a.is_proj()) return ProjComplex::stalk(vertex_of(a.sign), a.shift);
  return compile(MinStringSpec{a.sign, a.l, a.shift});
}

ProjComplex compile(const NormalForm& x) {
  ProjComplex out;
  for (const auto& a : x.atoms) out = direct_sum(out, compile(a));
  return out;
}

std::array<long long, 2> k0(const Indec& a) {
  const long long sign = (a.shift % 2 == 0) ? 1 : -1;
  if (a.is_proj()) {
    return a.sign == Sign::minus ? std::array<long long, 2>{sign, 0} : std::array<long long, 2>{0, sign};
  }
  if (a.l % 2 == 0) return {0, 0};
  return {sign, sign};
}

K0Class k0(const NormalForm& x) {
  std::array<long long, 2> acc{0, 0};
  for (const auto& a : x.atoms) {
    const auto c = k0(a);
    acc[0] += c[0];
    acc[1] += c[1];
  }
  return K0Class{{acc}};
}

std::array<long long, 2> k0_of_complex(const ProjComplex& x) {
  const auto raw = k0_raw(x);
  return {raw[0], raw[2]};
}

int proj_hom_dim(Sign sigma, int j, Sign tau, int k) {
  const int n = k - j;
  if (n > 0) return 0;
  const bool even = (n % 2 == 0);
  return (even == (sigma == tau)) ? 1 : 0;
}

std::size_t HomOracle::cache_size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.size();
}

int HomOracle::hom_dim(const Indec& a, const Indec& b) {
  if (a.is_proj() && b.is_proj()) return proj_hom_dim(a.sign, a.shift, b.sign, b.shift);
  const Key key{a.kind, a.sign, a.l, b.kind, b.sign, b.l};
  const int rel = b.shift - a.shift;
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    const ProjComplex x = compile(a.shifted(-a.shift));
    const ProjComplex y = compile(b.shifted(-b.shift));
    Entry e;
    for (const auto& [n, rep] : hom_kb_range(x, y, options_)) {
      if (rep.total() != 0) e.dims[n] = rep.total();
      if (!rep.stable) e.unstable[n] = true;
    }
    it = cache_.emplace(key, std::move(e)).first;
  }
  if (it->second.unstable.count(rel)) {
    throw Error(Errc::cutoff_not_stabilized, "Hom(" + to_string(a) + ", " + to_string(b) +
                                                 ") did not stabilize below the cutoff");
  }
  auto d = it->second.dims.find(rel);
  return d == it->second.dims.end() ? 0 : static_cast<int>(d->second);
}

HomOracle& default_oracle() {
  static HomOracle oracle;
  return oracle;
}

int hom_dim(const Indec& a, const Indec& b, HomOracle& oracle) { return oracle.hom_dim(a, b); }
int hom_dim(const Indec& a, const Indec& b) { return default_oracle().hom_dim(a, b); }

std::vector<std::vector<int>> hom_matrix(const NormalForm& x, const NormalForm& y, HomOracle& oracle) {
  std::vector<std::vector<int>> out(x.atoms.size(), std::vector<int>(y.atoms.size(), 0));
  if (x.node != y.node) return out;
  for (std::size_t i = 0; i < x.atoms.size(); ++i) {
    for (std::size_t j = 0; j < y.atoms.size(); ++j) out[i][j] = oracle.hom_dim(x.atoms[i], y.atoms[j]);
  }
  return out;
}

std::vector<std::vector<int>> hom_matrix(const NormalForm& x, const NormalForm& y) {
  return hom_matrix(x, y, default_oracle());
}

bool is_iso(const NormalForm& x, const NormalForm& y) {
  if (x.atoms.empty() && y.atoms.empty()) return true;
  NormalForm a = x, b = y;
  a.canonicalize();
  b.canonicalize();
  return a.node == b.node && a.atoms == b.atoms;
}

McmClass stabilize(const NormalForm& x) {
  McmClass out;
  for (const auto& a : x.atoms) {
    if (!a.is_proj()) continue;
    const bool even = (a.shift % 2 == 0);
    if ((a.sign == Sign::plus) == even) {
      ++out.branch_u;
    } else {
      ++out.branch_v;
    }
  }
  return out;
}

std::string_view stabilize_convention() {
  return "P(+)[even] -> u, P(+)[odd] -> v, P(-)[even] -> v, P(-)[odd] -> u; minimal strings -> 0";
}

Fingerprint fingerprint(const ProjComplex& x, const FingerprintOptions& options) {
  Fingerprint fp;
  fp.k0 = k0_of_complex(x);
  for (Sign tau : {Sign::minus, Sign::plus}) {
    for (int l = 1; l <= options.max_l; ++l) {
      const ProjComplex y = compile(MinStringSpec{tau, l, 0});
      const auto reports = hom_kb_range(x, y, options.hom);
      for (int m = -options.max_shift; m <= options.max_shift; ++m) {
        auto it = reports.find(m);
        if (it == reports.end()) {
          fp.homs.push_back(0);
          continue;
        }
        if (!it->second.stable) {
          throw Error(Errc::cutoff_not_stabilized, "fingerprint entry did not stabilize");
        }
        fp.homs.push_back(it->second.total());
      }
    }
  }
  return fp;
}

}  // namespace deltand
