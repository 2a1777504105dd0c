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

#ifndef DELTAND_ERROR_HPP_
#define DELTAND_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace deltand {

enum class Errc {
  non_composable,
  not_a_complex,
  invalid_chain_map,
  cutoff_not_stabilized,
  bad_alternation,
  zero_decoration,
  bad_endpoints,
  zero_composition_violated,
  bad_position,
  bad_decoration,
  not_a_string_complex,
  not_gradable,
  no_nonzero_map,
  identity_cone,
  no_ar_translate,
  parse_error,
  field_error,
  invalid_argument,
};

// CamelCase name used in diagnostics, e.g. "NotAComplex".
std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }

 private:
  Errc code_;
  std::string message_;
};

}  // namespace deltand

#endif  // DELTAND_ERROR_HPP_
