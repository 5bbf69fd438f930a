// Copyright 2026 The gemreason Authors
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

#include "gemreason/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "gemreason/abduction.hpp"
#include "gemreason/deduction.hpp"
#include "gemreason/discovery.hpp"
#include "gemreason/error.hpp"
#include "gemreason/io.hpp"

namespace gemreason {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IO_ERROR", "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes next to the target and renames, so a failed run never leaves a
// partial file behind.
void write_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("IO_ERROR", "cannot write '" + path + "'");
    out << content;
    if (!out.flush()) throw Error("IO_ERROR", "cannot write '" + path + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("IO_ERROR", "cannot write '" + path + "'");
  }
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

struct Options {
  std::string model;
  std::string medium, ubiquitous, goal, deletions, emit_theory;
  std::string setup, genes, truth, schema;
  std::size_t top = 0;
  std::string hidden, working, config, trace;
};

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  const auto report = validate_model(io::parse_model_document(read_file(o.model)));
  for (const auto& v : report.violations)
    out << v.code << '\t' << v.subject << '\t' << v.detail << '\n';
  if (report.ok()) return 0;
  err << "invalid model: " << report.violations.size() << " violation(s)\n";
  return 1;
}

int cmd_compile(const Options& o, std::ostream& out) {
  const MetabolicModel model = io::parse_model(read_file(o.model));
  ExperimentSetup setup;
  if (!o.medium.empty())
    for (auto& m : io::parse_list(read_file(o.medium))) setup.medium.insert(std::move(m));
  if (!o.ubiquitous.empty())
    for (auto& m : io::parse_list(read_file(o.ubiquitous))) setup.ubiquitous.insert(std::move(m));
  std::stringstream del(o.deletions);
  for (std::string g; std::getline(del, g, ',');)
    if (!g.empty()) setup.deletions.insert(g);
  setup.goal = io::parse_goal_list(read_file(o.goal));

  const GroundTheory theory = compile(model, setup);
  const std::string text = io::serialize_theory(theory);
  if (o.emit_theory.empty()) {
    out << text;
    return 0;
  }
  write_file(o.emit_theory, text);
  std::map<SchemaTag, std::size_t> counts;
  for (const auto& c : theory.facts) ++counts[c.tag];
  for (const auto& c : theory.rules) ++counts[c.tag];
  out << "facts\t" << theory.facts.size() << "\nrules\t" << theory.rules.size() << '\n';
  for (const auto& [tag, n] : counts) out << to_string(tag) << '\t' << n << '\n';
  return 0;
}

int cmd_essentiality(const Options& o, std::ostream& out) {
  const MetabolicModel model = io::parse_model(read_file(o.model));
  const ExperimentSetup setup = io::parse_setup(read_file(o.setup));
  const std::vector<std::string> genes =
      o.genes.empty() ? model.genes : io::parse_list(read_file(o.genes));
  const auto predictions = essentiality_scan(model, setup, genes);
  std::string text = io::serialize_predictions(predictions);
  if (!o.truth.empty()) {
    const auto report = score_predictions(predictions, io::parse_truth(read_file(o.truth)));
    text += "\n" + io::serialize_score(report);
  }
  out << text;
  return 0;
}

int cmd_abduce(const Options& o, std::ostream& out) {
  const MetabolicModel model = io::parse_model(read_file(o.model));
  const ExperimentSetup setup = io::parse_setup(read_file(o.setup));
  const AbducibleSchema schema = io::parse_schema(read_file(o.schema));
  const GroundTheory theory = compile(model, setup);
  const AbductionResult result = abduce(theory, theory.goal, schema);
  if (result.already_entailed) {
    out << "ALREADY_ENTAILED\n";
    return 0;
  }
  std::ostringstream text;
  text << "rank\tsize\tnew_metabolites\tmml_bits\thypothesis\n";
  const std::size_t n = o.top == 0 ? result.hypotheses.size()
                                   : std::min(o.top, result.hypotheses.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& h = result.hypotheses[i];
    text << i + 1 << '\t' << h.size() << '\t' << h.new_metabolites << '\t' << fixed(h.mml_bits)
         << '\t' << to_string(h) << '\n';
  }
  out << text.str();
  return 0;
}

int cmd_loop(const Options& o, std::ostream& out) {
  const MetabolicModel hidden_model = io::parse_model(read_file(o.hidden));
  const MetabolicModel working_model = io::parse_model(read_file(o.working));
  const io::LoopDocument doc = io::parse_loop_config(read_file(o.config));
  const HiddenModel hidden{hidden_model, doc.noise_rate, doc.hidden_seed};
  const LoopTrace trace = run_loop(hidden, WorkingModel{working_model, {}}, doc.setup, doc.config);
  write_file(o.trace, io::serialize_trace(trace));

  out << "stop_reason\t" << trace.stop_reason << '\n'
      << "iterations\t" << trace.entries.size() << '\n'
      << "experiments\t" << trace.experiments() << '\n'
      << "agreement\t" << fixed(trace.entries.empty() ? 1.0 : trace.entries.back().agreement)
      << '\n';
  for (const auto& a : trace.accepted) out << "accepted\t" << a << '\n';
  return 0;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metabolic network reasoning: deduction, abduction and simulated discovery",
               "gemreason"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Check a model document for integrity violations");
  validate->add_option("model", o.model, "Model document (JSON)")->required();

  auto* comp = app.add_subcommand("compile", "Ground a model and setup into a Horn theory");
  comp->add_option("model", o.model, "Model document (JSON)")->required();
  comp->add_option("--medium", o.medium, "Medium metabolites, one per line");
  comp->add_option("--ubiquitous", o.ubiquitous, "Ubiquitous metabolites, one per line");
  comp->add_option("--delete", o.deletions, "Comma-separated gene deletions");
  comp->add_option("--goal", o.goal, "Goal metabolites, '<metabolite> <compartment>' per line")
      ->required();
  comp->add_option("--emit-theory", o.emit_theory, "Write the theory here instead of stdout");

  auto* ess = app.add_subcommand("essentiality", "Predict single-gene essentiality");
  ess->add_option("model", o.model, "Model document (JSON)")->required();
  ess->add_option("--setup", o.setup, "Setup document (JSON)")->required();
  ess->add_option("--genes", o.genes, "Genes to scan, one per line (default: all)");
  ess->add_option("--truth", o.truth, "Truth table TSV to score against");

  auto* abd = app.add_subcommand("abduce", "Find minimal hypotheses restoring the goal");
  abd->add_option("model", o.model, "Model document (JSON)")->required();
  abd->add_option("--setup", o.setup, "Setup document (JSON)")->required();
  abd->add_option("--schema", o.schema, "Abducible schema (JSON)")->required();
  abd->add_option("--top", o.top, "Print only the k best hypotheses");

  auto* loop = app.add_subcommand("loop", "Run the simulated discovery loop");
  loop->add_option("--hidden", o.hidden, "Ground-truth model document")->required();
  loop->add_option("--working", o.working, "Working model document")->required();
  loop->add_option("--config", o.config, "Loop configuration (JSON)")->required();
  loop->add_option("--trace", o.trace, "Trace output (JSON)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*validate) return cmd_validate(o, out, err);
    if (*comp) return cmd_compile(o, out);
    if (*ess) return cmd_essentiality(o, out);
    if (*abd) return cmd_abduce(o, out);
    if (*loop) return cmd_loop(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace gemreason
