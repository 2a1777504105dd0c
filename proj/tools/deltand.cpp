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

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "deltand/cli.hpp"
#include "deltand/error.hpp"

namespace {

// "-" reads stdin once; later "-" arguments reuse the same text.
std::string slurp(const std::string& path, std::string& stdin_cache, bool& stdin_read) {
  if (path == "-") {
    if (!stdin_read) {
      stdin_cache.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
      stdin_read = true;
    }
    return stdin_cache;
  }
  std::ifstream in(path);
  if (!in) throw deltand::Error(deltand::Errc::invalid_argument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deltand: exact computations in the relative singularity category of the node"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::vector<std::string> strings;
  std::string from, to, field = "32003", format;
  int rows = 3, cols = 4, nodes = 1, window = 4;
  std::optional<int> cutoff, shift;
  bool strict = false, dot = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", field, "coefficient field: a prime or q");
    sub->add_option("--cutoff", cutoff, "highest internal degree examined");
    sub->add_option("--window", window, "trailing zero degrees required for stability");
    sub->add_option("--format", format, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
    sub->add_flag("--strict", strict, "exit 2 on unstabilised degrees");
  };
  auto add_inputs = [&](CLI::App* sub, const char* what) {
    sub->add_option("inputs", files, std::string(what) + " ('-' for stdin)");
    sub->add_option("-s,--string", strings, "inline DSL or JSON payload");
  };

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"normalize", "normal form of a string complex"},
      {"hom", "Hom dimensions between indecomposables"},
      {"k0", "Grothendieck class"},
      {"iso", "compare two objects"},
      {"tau", "AR translate of a minimal string"},
      {"mesh", "AR mesh ending at a minimal string"},
      {"window", "finite window of an AR component"},
      {"stabilize", "image in the stable category of MCM modules"},
      {"oracle-hom", "graded Hom in the homotopy category"},
      {"blocks", "direct sum over several nodes"},
  };
  for (const auto& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    add_common(sub);
    const std::string name = spec.name;
    if (name == "hom") {
      sub->add_option("--from", from, "atoms separated by ';' or a normal form")->required();
      sub->add_option("--to", to, "atoms separated by ';' or a normal form")->required();
    } else if (name == "tau" || name == "mesh") {
      sub->add_option("--atom", from, "a minimal string, e.g. S(+,2)[0]")->required();
    } else if (name == "window") {
      sub->add_option("--seed", from, "seed atom")->required();
      sub->add_option("--rows", rows, "rows (string length)");
      sub->add_option("--cols", cols, "columns on each side of the seed");
      sub->add_flag("--dot", dot, "emit DOT (default)");
    } else if (name == "oracle-hom") {
      add_inputs(sub, "two complexes");
      sub->add_option("--shift", shift, "single shift n");
    } else if (name == "blocks") {
      add_inputs(sub, "per-node objects");
      sub->add_option("--nodes", nodes, "number of nodes")->required();
    } else {
      add_inputs(sub, name == "iso" ? "two objects" : "an object");
    }
  }

  CLI11_PARSE(app, argc, argv);

  deltand::Job job;
  job.command = app.get_subcommands().front()->get_name();
  job.from = from;
  job.to = to;
  job.rows = rows;
  job.cols = cols;
  job.nodes = nodes;
  job.shift = shift;
  job.strict = strict;
  try {
    job.hom.field = deltand::Field::parse(field);
    job.hom.cutoff = cutoff;
    job.hom.window = window;
    if (!format.empty()) {
      job.format = format == "json" ? deltand::OutputFormat::json
                   : format == "text" ? deltand::OutputFormat::text
                                      : deltand::OutputFormat::dot;
    }
    if (dot) job.format = deltand::OutputFormat::dot;
    std::string cache;
    bool read = false;
    for (const auto& f : files) job.inputs.push_back(slurp(f, cache, read));
    for (const auto& s : strings) job.inputs.push_back(s);
  } catch (const deltand::Error& e) {
    std::cerr << "{\"error\": \"" << deltand::errc_name(e.code()) << "\", \"message\": \"" << e.message()
              << "\"}\n";
    return 1;
  }
  return deltand::run(job, std::cout, std::cerr);
}
