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

// JSON documents for the engine's objects.  Indecomposables are written by
// their identifiers ("S(+,2)[0]"), paths and combos in the path syntax.

#ifndef DELTAND_JSON_IO_HPP_
#define DELTAND_JSON_IO_HPP_

#include <map>
#include <string_view>
#include <vector>

#include "deltand/arquiver.hpp"
#include "deltand/delta.hpp"
#include "deltand/komplex.hpp"
#include "deltand/strings.hpp"
#include "json.hpp"

namespace deltand {

using Json = nlohmann::json;

// Readers throw Error(parse_error) on malformed documents.

Json to_json(const ProjComplex& x);  // carries the sign convention
ProjComplex complex_from_json(const Json& j);

Json to_json(const StringSpec& s);
StringSpec string_from_json(const Json& j);

Json to_json(const NormalForm& x);
NormalForm normal_form_from_json(const Json& j);

Json to_json(const GradedHomReport& r);
Json to_json(const std::map<int, GradedHomReport>& reports);
Json to_json(const K0Class& k);
Json to_json(const McmClass& c);  // carries the branch convention
Json to_json(const ArMesh& m);
Json to_json(const QuiverWindow& w);
Json to_json(const BlockSum& b);

// A payload in either syntax: JSON (a complex, a string, a list of strings
// or a normal form) or the string DSL.
struct Payload {
  enum class Kind { complex, strings, normal_form };
  Kind kind = Kind::strings;
  ProjComplex complex;
  std::vector<StringSpec> strings;
  NormalForm normal_form;
};

Payload parse_payload(std::string_view text);
NormalForm normalize(const Payload& p);
ProjComplex compile(const Payload& p);

}  // namespace deltand

#endif  // DELTAND_JSON_IO_HPP_
