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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "deltand/arquiver.hpp"
#include "deltand/delta.hpp"
#include "deltand/error.hpp"
#include "deltand/json_io.hpp"
#include "deltand/strings.hpp"

namespace py = pybind11;
using namespace deltand;

namespace {

std::vector<std::string> atom_ids(const NormalForm& x) {
  std::vector<std::string> out;
  for (const auto& a : x.atoms) out.push_back(to_string(a));
  return out;
}

NormalForm from_ids(const std::vector<std::string>& ids) {
  std::vector<Indec> atoms;
  for (const auto& s : ids) atoms.push_back(parse_indec(s));
  return NormalForm{1, std::move(atoms)};  // keeps the caller's order
}

HomOptions options(const std::string& field, std::optional<int> cutoff, int window) {
  HomOptions o;
  o.field = Field::parse(field);
  o.cutoff = cutoff;
  o.window = window;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations in the relative singularity category of the node";

  static py::exception<Error> error(m, "DeltandError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(errc_name(e.code())) + ": " + e.message()).c_str());
    }
  });

  m.def("sign_convention", [] { return std::string(sign_convention()); });

  m.def(
      "normalize", [](const std::string& payload) { return atom_ids(normalize(parse_payload(payload))); },
      py::arg("payload"), "Atoms of the normal form of a DSL or JSON payload.");
  m.def(
      "to_dsl", [](const std::string& payload) { return to_dsl(parse_string(payload)); }, py::arg("string"));
  m.def(
      "complex_json", [](const std::string& payload) { return to_json(compile(parse_payload(payload))).dump(); },
      py::arg("payload"));
  m.def(
      "hom_dim", [](const std::string& a, const std::string& b) { return hom_dim(parse_indec(a), parse_indec(b)); },
      py::arg("a"), py::arg("b"));
  m.def(
      "hom_matrix",
      [](const std::vector<std::string>& x, const std::vector<std::string>& y) {
        return hom_matrix(from_ids(x), from_ids(y));
      },
      py::arg("x"), py::arg("y"));
  m.def(
      "is_iso",
      [](const std::string& a, const std::string& b) {
        return is_iso(normalize(parse_payload(a)), normalize(parse_payload(b)));
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "k0",
      [](const std::string& payload) {
        const auto k = k0_of_complex(compile(parse_payload(payload)));
        return std::make_pair(k[0], k[1]);
      },
      py::arg("payload"));
  m.def(
      "stabilize",
      [](const std::string& payload) {
        const McmClass c = stabilize(normalize(parse_payload(payload)));
        return std::make_pair(c.branch_u, c.branch_v);
      },
      py::arg("payload"));
  m.def(
      "oracle_hom",
      [](const std::string& x, const std::string& y, int n, const std::string& field, std::optional<int> cutoff,
         int window) {
        const auto r = hom_kb(compile(parse_payload(x)), compile(parse_payload(y)), n, options(field, cutoff, window));
        py::dict d;
        d["dims"] = r.dims;
        d["min_degree"] = r.min_degree;
        d["cutoff"] = r.cutoff;
        d["stable"] = r.stable;
        d["total"] = r.total();
        return d;
      },
      py::arg("x"), py::arg("y"), py::arg("shift") = 0, py::arg("field") = "32003",
      py::arg("cutoff") = py::none(), py::arg("window") = 4);
  m.def(
      "tau", [](const std::string& a) { return to_string(tau(parse_indec(a))); }, py::arg("atom"));
  m.def(
      "ar_mesh",
      [](const std::string& z) {
        const ArMesh mesh = ar_mesh(parse_indec(z));
        std::vector<std::string> middle;
        for (const auto& b : mesh.middle) middle.push_back(to_string(b));
        return py::make_tuple(to_string(mesh.start), middle, to_string(mesh.end));
      },
      py::arg("atom"));
  m.def(
      "window",
      [](const std::string& seed, int rows, int cols, bool dot) {
        const QuiverWindow w = component_window(parse_indec(seed), rows, cols);
        return dot ? to_dot(w) : to_json(w).dump();
      },
      py::arg("seed"), py::arg("rows") = 3, py::arg("cols") = 4, py::arg("dot") = true);
  m.def("k0_rank", &k0_rank, py::arg("blocks"));
}
