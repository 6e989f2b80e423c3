// Copyright 2026 The qcat Authors
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

#include <unistd.h>

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qcat/biproduct.hpp"
#include "qcat/dsl.hpp"
#include "qcat/error.hpp"
#include "qcat/laws.hpp"
#include "qcat/mixed.hpp"
#include "qcat/unit.hpp"

using namespace qcat;

namespace {

enum Exit { kOk = 0, kEvalError = 1, kSyntaxError = 2, kLawFailure = 3 };

int error_exit(const Error& e) {
  std::cerr << "qcat: " << e.what() << '\n';
  const bool syntax = e.kind() == ErrorKind::SyntaxError || e.kind() == ErrorKind::ParseError;
  return syntax ? kSyntaxError : kEvalError;
}

struct SuiteArgs {
  std::string backend = "rat";
  std::size_t max_size = 4;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  std::vector<std::string> laws;
  std::string witness_dir;
};

void add_suite_options(CLI::App* cmd, SuiteArgs& a, bool with_law_filter) {
  cmd->add_option("--backend", a.backend, "bool|rat|gauss|f2|f3|f5|qsqrt2|cplx64");
  cmd->add_option("--max-size", a.max_size, "largest object size");
  cmd->add_option("--trials", a.trials, "random instances per law");
  cmd->add_option("--seed", a.seed);
  cmd->add_option("--witness-dir", a.witness_dir, "write failing witnesses here");
  if (with_law_filter) cmd->add_option("--law", a.laws, "run only these law ids");
}

int run_laws(const SuiteArgs& a, std::string_view topic) {
  SuiteConfig cfg;
  cfg.backend = parse_backend(a.backend);
  cfg.max_size = a.max_size;
  cfg.trials = a.trials;
  cfg.seed = a.seed;
  cfg.only = a.laws;
  if (!topic.empty()) {
    for (const auto& law : law_registry())
      if (law.topic == topic) cfg.only.push_back(law.id);
  }
  LawReport report = run_suite(cfg);
  std::map<std::string, std::string> witnesses;
  if (!a.witness_dir.empty()) {
    std::filesystem::create_directories(a.witness_dir);
    witnesses = write_witnesses(report, a.witness_dir);
  }
  std::cout << format_report(report, witnesses);
  return report.count(LawStatus::Fail) > 0 ? kLawFailure : kOk;
}

void load_workspace(Workspace& ws, const std::string& path) {
  if (std::filesystem::is_directory(path)) {
    ws.load_dir(path);
  } else {
    ws.load_file(path);
  }
}

std::string signature_text(const Signature& s) {
  return "{" + s.dom.str() + "} -> {" + s.cod.str() + "}";
}

int born(const std::string& input) {
  bool all = true;
  for (const auto& [name, x] : read_arrow_file(input)) {
    auto ds = split_direct_sum(x.cod(), x.backend());
    if (!ds) {
      throw Error(ErrorKind::PreconditionViolated,
                  "'" + name + "' does not land in a direct sum");
    }
    BornDecomposition d = born_decompose(x, *ds);
    all = all && d.holds();
    std::cout << "born " << name << ' ' << (d.holds() ? "PASS" : "FAIL")
              << " sqnorm=" << d.sqnorm_x.str() << " left=" << d.sqnorm_y.str()
              << " right=" << d.sqnorm_z.str() << '\n'
              << format_arrow(name + "_left", d.y) << format_arrow(name + "_right", d.z);
  }
  return all ? kOk : kLawFailure;
}

std::string poly_text(const Poly& p) {
  std::string out;
  for (const auto& c : p) out += (out.empty() ? "" : " ") + c.str();
  return out;
}

int spectra(const std::string& input) {
  bool all = true;
  for (const auto& [name, c] : read_arrow_file(input)) {
    SpectraComparison cmp = compare_spectra(c);
    all = all && cmp.match;
    std::cout << "spectra " << name << ' ' << (cmp.match ? "PASS" : "FAIL") << '\n';
    if (!cmp.padded_a.empty()) {
      std::cout << "#   left  " << poly_text(cmp.padded_a) << '\n'
                << "#   right " << poly_text(cmp.padded_b) << '\n';
    }
  }
  return all ? kOk : kLawFailure;
}

int clone_check(const std::string& backend_text, const std::string& labels,
                const std::string& candidate) {
  const BackendId b = parse_backend(backend_text);
  const FinObject a = FinObject::parse(labels);
  Arrow c = copy_candidate(a, unit_object(), b);
  Arrow w = point_prep(unit_object(), 0, b);
  if (!candidate.empty()) {
    Workspace ws(b);
    ws.load_file(candidate);
    const Arrow* cf = ws.arrow("c");
    const Arrow* wf = ws.arrow("w");
    if (!cf || !wf) throw Error(ErrorKind::UnknownName, "candidate file needs arrows 'c' and 'w'");
    c = *cf;
    w = *wf;
  } else if (is_unit_object(a)) {
    Cloner cl = build_cloner(a, b);
    c = cl.c;
    w = cl.w;
  }
  CloneWitness result = verify_cloner(a, c, w);
  std::cout << format_clone_witness(result);
  return result.ok() ? kOk : kLawFailure;
}

void repl_help() {
  std::cout << "  <term>              evaluate and print the arrow\n"
               "  :type <term>        print dom -> cod\n"
               "  :def <name> = <term>\n"
               "  :load <file|dir>\n"
               "  :objects  :arrows  :quit\n";
}

int repl(const std::string& backend_text, const std::string& workspace) {
  Workspace ws(parse_backend(backend_text));
  if (!workspace.empty()) load_workspace(ws, workspace);
  const bool interactive = isatty(STDIN_FILENO);
  std::string line;
  while (true) {
    if (interactive) std::cout << "qcat> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    line = line.substr(start);
    try {
      if (line == ":quit" || line == ":q") break;
      if (line == ":help") {
        repl_help();
      } else if (line == ":objects") {
        for (const auto& [n, o] : ws.objects()) std::cout << n << " : " << o.str() << '\n';
      } else if (line == ":arrows") {
        for (const auto& [n, f] : ws.arrows())
          std::cout << n << " : " << signature_text({f.dom(), f.cod()}) << '\n';
      } else if (line.rfind(":load ", 0) == 0) {
        load_workspace(ws, line.substr(6));
      } else if (line.rfind(":type ", 0) == 0) {
        std::cout << signature_text(typecheck(parse_term(line.substr(6)), ws)) << '\n';
      } else if (line.rfind(":def ", 0) == 0) {
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::SyntaxError, "expected ':def <name> = <term>'");
        std::istringstream head(line.substr(5, eq - 5));
        std::string name;
        head >> name;
        ws.add_arrow(name, eval(parse_term(line.substr(eq + 1)), ws));
      } else if (line[0] == ':') {
        throw Error(ErrorKind::SyntaxError, "unknown command " + line);
      } else {
        std::cout << format_arrow("it", eval(parse_term(line), ws));
      }
    } catch (const Error& e) {
      std::cout << "error: " << e.what() << '\n';
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcat: finite matrix categories over involutive semirings"};
  app.require_subcommand(1);

  auto* laws = app.add_subcommand("laws", "law suite");
  laws->require_subcommand(1);
  SuiteArgs suite_args;
  auto* laws_run = laws->add_subcommand("run", "run the law suite");
  add_suite_options(laws_run, suite_args, true);
  auto* laws_list = laws->add_subcommand("list", "list law ids");

  struct Topic {
    const char* command;
    const char* topic;
    const char* help;
  };
  const Topic topics[] = {{"unit-laws", "unit", "laws about the unit object and scalars"},
                          {"tensor-laws", "tensor", "laws about tensor products"},
                          {"biprod-laws", "biproduct", "laws about biproducts"}};
  std::vector<std::pair<CLI::App*, const char*>> topic_cmds;
  for (const auto& t : topics) {
    auto* cmd = app.add_subcommand(t.command, t.help);
    add_suite_options(cmd, suite_args, false);
    topic_cmds.emplace_back(cmd, t.topic);
  }

  std::string input;
  auto* born_cmd = app.add_subcommand("born", "left/right decomposition of preparations");
  born_cmd->add_option("--input", input, "arrow file")->required();

  auto* spectra_cmd = app.add_subcommand("spectra", "compare spectra of both reduced states");
  spectra_cmd->add_option("--input", input, "arrow file")->required();

  std::string backend = "rat", labels, candidate, workspace, term;
  auto* clone_cmd = app.add_subcommand("clone-check", "check a cloning candidate");
  clone_cmd->add_option("--backend", backend);
  clone_cmd->add_option("--object", labels, "comma-separated labels")->required();
  clone_cmd->add_option("--candidate", candidate, "arrow file with arrows c and w");

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a term");
  eval_cmd->add_option("--backend", backend);
  eval_cmd->add_option("--workspace", workspace, "directory or arrow file");
  eval_cmd->add_option("term", term)->required();

  auto* repl_cmd = app.add_subcommand("repl", "interactive evaluator");
  repl_cmd->add_option("--backend", backend);
  repl_cmd->add_option("--workspace", workspace, "directory or arrow file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (laws_run->parsed()) return run_laws(suite_args, "");
    if (laws_list->parsed()) {
      for (const auto& law : law_registry())
        std::cout << law.id << '\t' << law.statement << '\n';
      return kOk;
    }
    for (const auto& [cmd, topic] : topic_cmds)
      if (cmd->parsed()) return run_laws(suite_args, topic);
    if (born_cmd->parsed()) return born(input);
    if (spectra_cmd->parsed()) return spectra(input);
    if (clone_cmd->parsed()) return clone_check(backend, labels, candidate);
    if (eval_cmd->parsed()) {
      Workspace ws(parse_backend(backend));
      if (!workspace.empty()) load_workspace(ws, workspace);
      std::cout << format_arrow("result", eval(parse_term(term), ws));
      return kOk;
    }
    if (repl_cmd->parsed()) return repl(backend, workspace);
  } catch (const Error& e) {
    return error_exit(e);
  } catch (const std::exception& e) {
    std::cerr << "qcat: " << e.what() << '\n';
    return kEvalError;
  }
  return kOk;
}
