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

#include "deltand/error.hpp"

namespace deltand {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::non_composable: return "NonComposable";
    case Errc::not_a_complex: return "NotAComplex";
    case Errc::invalid_chain_map: return "InvalidChainMap";
    case Errc::cutoff_not_stabilized: return "CutoffNotStabilized";
    case Errc::bad_alternation: return "BadAlternation";
    case Errc::zero_decoration: return "ZeroDecoration";
    case Errc::bad_endpoints: return "BadEndpoints";
    case Errc::zero_composition_violated: return "ZeroCompositionViolated";
    case Errc::bad_position: return "BadPosition";
    case Errc::bad_decoration: return "BadDecoration";
    case Errc::not_a_string_complex: return "NotAStringComplex";
    case Errc::not_gradable: return "NotGradable";
    case Errc::no_nonzero_map: return "NoNonzeroMap";
    case Errc::identity_cone: return "IdentityCone";
    case Errc::no_ar_translate: return "NoArTranslate";
    case Errc::parse_error: return "ParseError";
    case Errc::field_error: return "FieldError";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      message_(message) {}

}  // namespace deltand
