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

#include "deltand/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "deltand/arquiver.hpp"
#include "deltand/delta.hpp"
#include "deltand/error.hpp"
#include "deltand/json_io.hpp"

namespace deltand {

namespace {

const std::string& input(const Job& job, std::size_t k) {
  if (job.inputs.size() <= k) {
    throw Error(Errc::invalid_argument, job.command + " needs " + std::to_string(k + 1) + " input(s)");
  }
  return job.inputs[k];
}

Indec atom(const std::string& text, const char* what) {
  if (text.empty()) throw Error(Errc::invalid_argument, std::string("missing --") + what);
  return parse_indec(text);
}

// "P(+)[0]; S(-,2)[1]" or a normal form document.
NormalForm atoms(const std::string& text, const char* what) {
  if (text.empty()) throw Error(Errc::invalid_argument, std::string("missing --") + what);
  if (text.front() == '{') return normalize(parse_payload(text));
  std::vector<Indec> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    std::string piece = text.substr(start, end - start);
    const auto b = piece.find_first_not_of(" \t\n");
    if (b != std::string::npos) out.push_back(parse_indec(piece.substr(b, piece.find_last_not_of(" \t\n") - b + 1)));
    start = end + 1;
  }
  return NormalForm{1, out};
}

std::string text_of(const NormalForm& x) {
  if (x.atoms.empty()) return "0";
  std::string out;
  for (const auto& a : x.atoms) out += (out.empty() ? "" : " + ") + to_string(a);
  return out;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int hom_table(const Job& job, std::ostream& out) {
  HomOracle oracle(job.hom);
  const NormalForm x = atoms(job.from, "from");
  const NormalForm y = atoms(job.to, "to");
  const auto m = hom_matrix(x, y, oracle);
  if (job.format.value_or(OutputFormat::text) == OutputFormat::json) {
    Json j = {{"from", to_json(x)["atoms"]}, {"to", to_json(y)["atoms"]}, {"dims", m}};
    emit(out, j);
    return 0;
  }
  std::ostringstream table;
  std::size_t width = 4;
  for (const auto& a : x.atoms) width = std::max(width, to_string(a).size() + 2);
  std::vector<std::size_t> col;
  table << std::left << std::setw(static_cast<int>(width)) << "";
  for (const auto& b : y.atoms) {
    col.push_back(std::max<std::size_t>(to_string(b).size() + 2, 4));
    table << std::setw(static_cast<int>(col.back())) << to_string(b);
  }
  table << '\n';
  for (std::size_t i = 0; i < x.atoms.size(); ++i) {
    table << std::setw(static_cast<int>(width)) << to_string(x.atoms[i]);
    for (std::size_t k = 0; k < y.atoms.size(); ++k) table << std::setw(static_cast<int>(col[k])) << m[i][k];
    table << '\n';
  }
  std::istringstream lines(table.str());
  for (std::string line; std::getline(lines, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << '\n';
  }
  return 0;
}

int oracle_hom(const Job& job, std::ostream& out, std::ostream& err) {
  const ProjComplex x = compile(parse_payload(input(job, 0)));
  const ProjComplex y = compile(parse_payload(input(job, 1)));
  std::map<int, GradedHomReport> reports;
  if (job.shift) {
    reports.emplace(*job.shift, hom_kb(x, y, *job.shift, job.hom));
  } else {
    reports = hom_kb_range(x, y, job.hom);
  }
  bool stable = true;
  for (const auto& [n, r] : reports) stable = stable && r.stable;
  emit(out, {{"field", job.hom.field.name()}, {"reports", to_json(reports)}});
  if (!stable) {
    emit(err, {{"warning", std::string(errc_name(Errc::cutoff_not_stabilized))},
               {"message", "some degrees did not stabilise below the cutoff"}});
    if (job.strict) return 2;
  }
  return 0;
}

int blocks(const Job& job, std::ostream& out) {
  std::vector<NormalForm> parts;
  for (std::size_t k = 0; k < job.inputs.size(); ++k) {
    const Payload p = parse_payload(job.inputs[k]);
    NormalForm x = normalize(p);
    if (p.kind != Payload::Kind::normal_form) x.node = static_cast<int>(k) + 1;
    parts.push_back(std::move(x));
  }
  const BlockSum b = assemble_blocks(job.nodes, parts);
  Json j = to_json(b);
  j["hom"] = hom_matrix(b, b);
  emit(out, j);
  return 0;
}

int dispatch(const Job& job, std::ostream& out, std::ostream& err) {
  const OutputFormat fmt = job.format.value_or(OutputFormat::json);
  const std::string& c = job.command;
  if (c == "normalize") {
    const NormalForm n = normalize(parse_payload(input(job, 0)));
    if (fmt == OutputFormat::text) {
      out << text_of(n) << '\n';
    } else {
      emit(out, to_json(n));
    }
    return 0;
  }
  if (c == "hom") return hom_table(job, out);
  if (c == "k0") {
    const ProjComplex x = compile(parse_payload(input(job, 0)));
    const auto k = k0_of_complex(x);
    emit(out, {{"k0", {k[0], k[1]}}});
    return 0;
  }
  if (c == "iso") {
    const NormalForm a = normalize(parse_payload(input(job, 0)));
    const NormalForm b = normalize(parse_payload(input(job, 1)));
    emit(out, {{"iso", is_iso(a, b)}, {"left", to_json(a)}, {"right", to_json(b)}});
    return 0;
  }
  if (c == "tau") {
    const Indec a = atom(job.from, "atom");
    emit(out, {{"atom", to_string(a)}, {"tau", to_string(tau(a))}});
    return 0;
  }
  if (c == "mesh") {
    emit(out, to_json(ar_mesh(atom(job.from, "atom"))));
    return 0;
  }
  if (c == "window") {
    const QuiverWindow w = component_window(atom(job.from, "seed"), job.rows, job.cols);
    if (job.format.value_or(OutputFormat::dot) == OutputFormat::dot) {
      out << to_dot(w);
    } else {
      emit(out, to_json(w));
    }
    return 0;
  }
  if (c == "stabilize") {
    const NormalForm n = normalize(parse_payload(input(job, 0)));
    Json j = to_json(stabilize(n));
    j["normal_form"] = to_json(n);
    emit(out, j);
    return 0;
  }
  if (c == "oracle-hom") return oracle_hom(job, out, err);
  if (c == "blocks") return blocks(job, out);
  throw Error(Errc::invalid_argument, "unknown command '" + c + "'");
}

}  // namespace

int run(const Job& job, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(job, out, err);
  } catch (const Error& e) {
    emit(err, {{"error", std::string(errc_name(e.code()))}, {"message", e.message()}});
    return e.code() == Errc::cutoff_not_stabilized ? 2 : 1;
  } catch (const std::exception& e) {
    emit(err, {{"error", "InternalError"}, {"message", e.what()}});
    return 1;
  }
}

}  // namespace deltand
