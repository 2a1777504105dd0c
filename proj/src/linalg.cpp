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

#include "deltand/linalg.hpp"

#include <string>

namespace deltand {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31)) {
    throw Error(Errc::field_error, std::to_string(p) + " is not a usable prime");
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  std::uint64_t v = 0;
  if (text.empty()) throw Error(Errc::field_error, "empty field name");
  for (char c : text) {
    if (c < '0' || c > '9') throw Error(Errc::field_error, "bad field '" + std::string(text) + "'");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
    if (v >= (1ull << 31)) throw Error(Errc::field_error, "prime too large");
  }
  return prime(static_cast<std::uint32_t>(v));
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

}  // namespace deltand
