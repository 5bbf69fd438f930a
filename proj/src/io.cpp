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

#include "gemreason/io.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "gemreason/error.hpp"

namespace gemreason::io {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void structural(const std::string& path, const std::string& message) {
  throw Error("PARSE_ERROR", "at " + (path.empty() ? std::string("/") : path) + ": " + message);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const std::size_t pos = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    if (auto c = what.find("column"); c != std::string::npos)
      if (auto colon = what.find(": ", c); colon != std::string::npos) what = what.substr(colon + 2);
    throw Error("PARSE_ERROR",
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
  }
}

void expect_object(const Json& j, const std::string& path,
                   std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) structural(path, "expected object");
  for (const auto& [key, value] : j.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      structural(path + "/" + key, "unknown field");
}

const Json* optional_field(const Json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

const Json& required_field(const Json& j, const std::string& path, const char* key) {
  const Json* f = optional_field(j, key);
  if (f == nullptr) structural(path + "/" + key, "missing field");
  return *f;
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) structural(path, "expected string");
  return j.get<std::string>();
}

bool as_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) structural(path, "expected boolean");
  return j.get<bool>();
}

std::uint64_t as_unsigned(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) structural(path, "expected non-negative integer");
  return j.get<std::uint64_t>();
}

double as_number(const Json& j, const std::string& path) {
  if (!j.is_number()) structural(path, "expected number");
  return j.get<double>();
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) structural(path, "expected array");
  return j;
}

std::vector<std::string> as_strings(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  std::size_t i = 0;
  for (const auto& v : as_array(j, path)) out.push_back(as_string(v, path + "/" + std::to_string(i++)));
  return out;
}

std::set<std::string> as_string_set(const Json& j, const std::string& path) {
  auto v = as_strings(j, path);
  return {v.begin(), v.end()};
}

LocatedMetabolite as_located(const Json& j, const std::string& path) {
  expect_object(j, path, {"metabolite", "compartment"});
  return {as_string(required_field(j, path, "metabolite"), path + "/metabolite"),
          as_string(required_field(j, path, "compartment"), path + "/compartment")};
}

std::vector<LocatedMetabolite> as_located_list(const Json& j, const std::string& path) {
  std::vector<LocatedMetabolite> out;
  std::size_t i = 0;
  for (const auto& v : as_array(j, path)) out.push_back(as_located(v, path + "/" + std::to_string(i++)));
  return out;
}

EnzymeMapping as_mapping(const Json& j, const std::string& path) {
  expect_object(j, path, {"protein", "enzyme_class"});
  return {as_string(required_field(j, path, "protein"), path + "/protein"),
          as_string(required_field(j, path, "enzyme_class"), path + "/enzyme_class")};
}

Json located_json(const LocatedMetabolite& lm) {
  return Json{{"metabolite", lm.metabolite}, {"compartment", lm.compartment}};
}

Json mapping_json(const EnzymeMapping& m) {
  return Json{{"protein", m.protein}, {"enzyme_class", m.enzyme_class}};
}

Json model_json(const MetabolicModel& model) {
  Json j = Json::object();
  j["compartments"] = Json::array();
  for (const auto& c : model.compartments) {
    Json cj{{"id", c.id}};
    if (c.extracellular) cj["extracellular"] = true;
    j["compartments"].push_back(std::move(cj));
  }
  j["metabolites"] = model.metabolites;
  j["genes"] = model.genes;
  j["protein_complexes"] = Json::array();
  for (const auto& p : model.complexes)
    j["protein_complexes"].push_back(Json{{"id", p.id}, {"subunits", p.subunits}});
  j["enzyme_mappings"] = Json::array();
  for (const auto& m : model.enzyme_mappings) j["enzyme_mappings"].push_back(mapping_json(m));
  j["reactions"] = Json::array();
  for (const auto& r : model.reactions) {
    Json rj{{"id", r.id}};
    rj["reactants"] = Json::array();
    for (const auto& lm : r.reactants) rj["reactants"].push_back(located_json(lm));
    rj["products"] = Json::array();
    for (const auto& lm : r.products) rj["products"].push_back(located_json(lm));
    rj["catalysts"] = r.catalysts;
    rj["reversible"] = r.reversible;
    j["reactions"].push_back(std::move(rj));
  }
  return j;
}

MetabolicModel model_from_json(const Json& j, const std::string& root) {
  expect_object(j, root, {"compartments", "metabolites", "genes", "protein_complexes",
                          "enzyme_mappings", "reactions"});
  MetabolicModel m;
  {
    const std::string path = root + "/compartments";
    std::size_t i = 0;
    for (const auto& c : as_array(required_field(j, root, "compartments"), path)) {
      const std::string p = path + "/" + std::to_string(i++);
      expect_object(c, p, {"id", "extracellular"});
      Compartment comp{as_string(required_field(c, p, "id"), p + "/id"), false};
      if (const Json* f = optional_field(c, "extracellular"))
        comp.extracellular = as_bool(*f, p + "/extracellular");
      m.compartments.push_back(std::move(comp));
    }
  }
  m.metabolites = as_strings(required_field(j, root, "metabolites"), root + "/metabolites");
  m.genes = as_strings(required_field(j, root, "genes"), root + "/genes");
  {
    const std::string path = root + "/protein_complexes";
    std::size_t i = 0;
    for (const auto& c : as_array(required_field(j, root, "protein_complexes"), path)) {
      const std::string p = path + "/" + std::to_string(i++);
      expect_object(c, p, {"id", "subunits"});
      m.complexes.push_back({as_string(required_field(c, p, "id"), p + "/id"),
                             as_strings(required_field(c, p, "subunits"), p + "/subunits")});
    }
  }
  {
    const std::string path = root + "/enzyme_mappings";
    std::size_t i = 0;
    for (const auto& e : as_array(required_field(j, root, "enzyme_mappings"), path))
      m.enzyme_mappings.push_back(as_mapping(e, path + "/" + std::to_string(i++)));
  }
  {
    const std::string path = root + "/reactions";
    std::size_t i = 0;
    for (const auto& r : as_array(required_field(j, root, "reactions"), path)) {
      const std::string p = path + "/" + std::to_string(i++);
      expect_object(r, p, {"id", "reactants", "products", "catalysts", "reversible"});
      Reaction rx;
      rx.id = as_string(required_field(r, p, "id"), p + "/id");
      rx.reactants = as_located_list(required_field(r, p, "reactants"), p + "/reactants");
      rx.products = as_located_list(required_field(r, p, "products"), p + "/products");
      if (const Json* f = optional_field(r, "catalysts")) rx.catalysts = as_strings(*f, p + "/catalysts");
      if (const Json* f = optional_field(r, "reversible")) rx.reversible = as_bool(*f, p + "/reversible");
      m.reactions.push_back(std::move(rx));
    }
  }
  return m;
}

Json setup_json(const ExperimentSetup& s) {
  Json j = Json::object();
  j["medium"] = Json::array();
  for (const auto& m : s.medium) j["medium"].push_back(m);
  j["ubiquitous"] = Json::array();
  for (const auto& m : s.ubiquitous) j["ubiquitous"].push_back(m);
  j["deletions"] = Json::array();
  for (const auto& g : s.deletions) j["deletions"].push_back(g);
  j["goal"] = Json::array();
  for (const auto& lm : s.goal) j["goal"].push_back(located_json(lm));
  return j;
}

ExperimentSetup setup_from_json(const Json& j, const std::string& root) {
  expect_object(j, root, {"medium", "ubiquitous", "deletions", "goal"});
  ExperimentSetup s;
  if (const Json* f = optional_field(j, "medium")) s.medium = as_string_set(*f, root + "/medium");
  if (const Json* f = optional_field(j, "ubiquitous"))
    s.ubiquitous = as_string_set(*f, root + "/ubiquitous");
  if (const Json* f = optional_field(j, "deletions"))
    s.deletions = as_string_set(*f, root + "/deletions");
  for (auto& lm : as_located_list(required_field(j, root, "goal"), root + "/goal"))
    s.goal.insert(std::move(lm));
  return s;
}

Json schema_json(const AbducibleSchema& s) {
  Json j = Json::object();
  j["allow_atoms"] = Json::array();
  for (Predicate p : s.allow_atoms) j["allow_atoms"].push_back(std::string(to_string(p)));
  j["allow_mappings"] = s.allow_mappings;
  if (s.any_mapping) {
    j["candidate_mappings"] = "any";
  } else {
    j["candidate_mappings"] = Json::array();
    for (const auto& m : s.candidate_mappings) j["candidate_mappings"].push_back(mapping_json(m));
  }
  j["max_size"] = s.max_size;
  return j;
}

AbducibleSchema schema_from_json(const Json& j, const std::string& root) {
  expect_object(j, root, {"allow_atoms", "allow_mappings", "candidate_mappings", "max_size"});
  AbducibleSchema s;
  if (const Json* f = optional_field(j, "allow_atoms")) {
    std::size_t i = 0;
    for (const auto& name : as_strings(*f, root + "/allow_atoms")) {
      auto p = parse_predicate(name);
      if (!p) structural(root + "/allow_atoms/" + std::to_string(i), "unknown predicate");
      s.allow_atoms.insert(*p);
      ++i;
    }
  }
  if (const Json* f = optional_field(j, "allow_mappings"))
    s.allow_mappings = as_bool(*f, root + "/allow_mappings");
  if (const Json* f = optional_field(j, "candidate_mappings")) {
    if (f->is_string()) {
      if (f->get<std::string>() != "any")
        structural(root + "/candidate_mappings", "expected array or \"any\"");
      s.any_mapping = true;
    } else {
      std::size_t i = 0;
      for (const auto& m : as_array(*f, root + "/candidate_mappings"))
        s.candidate_mappings.insert(
            as_mapping(m, root + "/candidate_mappings/" + std::to_string(i++)));
    }
  }
  if (const Json* f = optional_field(j, "max_size"))
    s.max_size = as_unsigned(*f, root + "/max_size");
  return s;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

[[noreturn]] void line_error(std::size_t line, const std::string& message) {
  throw Error("PARSE_ERROR", "line " + std::to_string(line) + ", column 1: " + message);
}

std::vector<Atom> parse_atom_list(std::string_view text) {
  std::vector<Atom> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
    if (pos >= text.size()) break;
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw Error("PARSE_ERROR", "unterminated atom");
    out.push_back(parse_atom(text.substr(pos, close - pos + 1)));
    pos = close + 1;
  }
  return out;
}

Json entry_json(const LoopEntry& e) {
  Json j = Json::object();
  j["iteration"] = e.iteration;
  j["phase"] = e.phase;
  j["predicted_essential"] = e.predicted_essential;
  j["open_discrepancies"] = e.open_discrepancies;
  j["hypotheses"] = e.hypotheses;
  j["chosen"] = e.chosen ? setup_json(*e.chosen) : Json(nullptr);
  j["observed"] = e.observed ? Json(*e.observed) : Json(nullptr);
  j["accepted"] = e.accepted;
  j["rejected"] = e.rejected;
  j["agreement"] = e.agreement;
  return j;
}

LoopEntry entry_from_json(const Json& j, const std::string& p) {
  expect_object(j, p, {"iteration", "phase", "predicted_essential", "open_discrepancies",
                       "hypotheses", "chosen", "observed", "accepted", "rejected", "agreement"});
  LoopEntry e;
  e.iteration = as_unsigned(required_field(j, p, "iteration"), p + "/iteration");
  e.phase = as_string(required_field(j, p, "phase"), p + "/phase");
  e.predicted_essential =
      as_strings(required_field(j, p, "predicted_essential"), p + "/predicted_essential");
  e.open_discrepancies =
      as_unsigned(required_field(j, p, "open_discrepancies"), p + "/open_discrepancies");
  e.hypotheses = as_strings(required_field(j, p, "hypotheses"), p + "/hypotheses");
  if (const Json& c = required_field(j, p, "chosen"); !c.is_null())
    e.chosen = setup_from_json(c, p + "/chosen");
  if (const Json& o = required_field(j, p, "observed"); !o.is_null())
    e.observed = as_bool(o, p + "/observed");
  e.accepted = as_strings(required_field(j, p, "accepted"), p + "/accepted");
  e.rejected = as_strings(required_field(j, p, "rejected"), p + "/rejected");
  e.agreement = as_number(required_field(j, p, "agreement"), p + "/agreement");
  return e;
}

}  // namespace

MetabolicModel parse_model_document(std::string_view text) {
  return model_from_json(parse_json(text), "");
}

MetabolicModel parse_model(std::string_view text) {
  MetabolicModel m = parse_model_document(text);
  const auto report = validate_model(m);
  if (!report.ok()) {
    std::string msg;
    for (const auto& v : report.violations) {
      if (!msg.empty()) msg += "; ";
      msg += v.code + "(" + v.subject + (v.detail.empty() ? "" : ", " + v.detail) + ")";
    }
    throw Error("VALIDATION_FAILED", msg);
  }
  return m;
}

std::string serialize_model(const MetabolicModel& model) { return dump(model_json(model)); }

ExperimentSetup parse_setup(std::string_view text) { return setup_from_json(parse_json(text), ""); }
std::string serialize_setup(const ExperimentSetup& setup) { return dump(setup_json(setup)); }

AbducibleSchema parse_schema(std::string_view text) {
  return schema_from_json(parse_json(text), "");
}
std::string serialize_schema(const AbducibleSchema& schema) { return dump(schema_json(schema)); }

LoopDocument parse_loop_config(std::string_view text) {
  const Json j = parse_json(text);
  expect_object(j, "", {"budget", "strategy", "schema", "error_rate", "rng_seed", "gene_pool",
                        "medium_pool", "setup", "noise_rate", "hidden_seed"});
  LoopDocument d;
  if (const Json* f = optional_field(j, "budget")) d.config.budget = as_unsigned(*f, "/budget");
  if (const Json* f = optional_field(j, "strategy")) {
    auto s = parse_strategy(as_string(*f, "/strategy"));
    if (!s) structural("/strategy", "unknown strategy");
    d.config.strategy = *s;
  }
  d.config.schema = schema_from_json(required_field(j, "", "schema"), "/schema");
  if (const Json* f = optional_field(j, "error_rate")) d.config.error_rate = as_number(*f, "/error_rate");
  if (const Json* f = optional_field(j, "rng_seed")) d.config.rng_seed = as_unsigned(*f, "/rng_seed");
  if (const Json* f = optional_field(j, "gene_pool")) d.config.gene_pool = as_strings(*f, "/gene_pool");
  if (const Json* f = optional_field(j, "medium_pool"))
    d.config.medium_pool = as_strings(*f, "/medium_pool");
  d.setup = setup_from_json(required_field(j, "", "setup"), "/setup");
  if (const Json* f = optional_field(j, "noise_rate")) d.noise_rate = as_number(*f, "/noise_rate");
  if (const Json* f = optional_field(j, "hidden_seed")) d.hidden_seed = as_unsigned(*f, "/hidden_seed");
  return d;
}

std::string serialize_loop_config(const LoopDocument& d) {
  Json j = Json::object();
  j["budget"] = d.config.budget;
  j["strategy"] = std::string(to_string(d.config.strategy));
  j["schema"] = schema_json(d.config.schema);
  j["error_rate"] = d.config.error_rate;
  j["rng_seed"] = d.config.rng_seed;
  j["gene_pool"] = d.config.gene_pool;
  j["medium_pool"] = d.config.medium_pool;
  j["setup"] = setup_json(d.setup);
  j["noise_rate"] = d.noise_rate;
  j["hidden_seed"] = d.hidden_seed;
  return dump(j);
}

Atom parse_atom(std::string_view text) {
  const std::string t = trim(text);
  const auto open = t.find('(');
  if (open == std::string::npos || t.back() != ')')
    throw Error("PARSE_ERROR", "malformed atom '" + t + "'");
  auto pred = parse_predicate(t.substr(0, open));
  if (!pred) throw Error("PARSE_ERROR", "unknown predicate in '" + t + "'");
  const auto args = split(std::string_view(t).substr(open + 1, t.size() - open - 2), ',');
  if (args.size() != arity(*pred))
    throw Error("PARSE_ERROR", "wrong arity in '" + t + "'");
  for (const auto& a : args)
    if (!is_identifier(a)) throw Error("PARSE_ERROR", "bad identifier in '" + t + "'");
  Atom atom{*pred, args[0], args.size() > 1 ? args[1] : std::string()};
  return atom;
}

std::string serialize_theory(const GroundTheory& theory) {
  std::ostringstream out;
  for (const auto& f : theory.facts)
    out << "fact\t" << to_string(f.tag) << '\t' << f.provenance << '\t' << to_string(f.head)
        << '\n';
  for (const auto& r : theory.rules) {
    out << "rule\t" << to_string(r.tag) << '\t' << r.provenance << '\t' << to_string(r.head)
        << " :- ";
    for (std::size_t i = 0; i < r.body.size(); ++i)
      out << (i ? ", " : "") << to_string(r.body[i]);
    out << '\n';
  }
  for (const auto& g : theory.goal) out << "goal\t" << to_string(g) << '\n';
  auto vocab = [&](const char* kind, const std::vector<std::string>& ids) {
    out << "vocab\t" << kind << '\t';
    for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
    out << '\n';
  };
  vocab("metabolites", theory.vocabulary.metabolites);
  vocab("compartments", theory.vocabulary.compartments);
  vocab("genes", theory.vocabulary.genes);
  vocab("proteins", theory.vocabulary.proteins);
  vocab("enzyme_classes", theory.vocabulary.enzyme_classes);
  return out.str();
}

GroundTheory parse_theory(std::string_view text) {
  GroundTheory t;
  std::size_t line_no = 0;
  for (const auto& raw : split(text, '\n')) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split(line, '\t');
    try {
      const std::string& kind = fields[0];
      if (kind == "fact" || kind == "rule") {
        if (fields.size() != 4) line_error(line_no, "expected 4 tab-separated fields");
        auto tag = parse_schema_tag(fields[1]);
        if (!tag) line_error(line_no, "unknown schema tag '" + fields[1] + "'");
        if (kind == "fact") {
          t.facts.push_back({{}, parse_atom(fields[3]), *tag, fields[2]});
        } else {
          const auto sep = fields[3].find(" :- ");
          if (sep == std::string::npos) line_error(line_no, "rule without ':-'");
          Clause c{parse_atom_list(std::string_view(fields[3]).substr(sep + 4)),
                   parse_atom(std::string_view(fields[3]).substr(0, sep)), *tag, fields[2]};
          if (c.body.empty()) line_error(line_no, "rule with empty body");
          t.rules.push_back(std::move(c));
        }
      } else if (kind == "goal") {
        if (fields.size() != 2) line_error(line_no, "expected 2 tab-separated fields");
        t.goal.push_back(parse_atom(fields[1]));
      } else if (kind == "vocab") {
        if (fields.size() != 3) line_error(line_no, "expected 3 tab-separated fields");
        std::vector<std::string> ids;
        for (auto& id : split(fields[2], ' '))
          if (!id.empty()) ids.push_back(std::move(id));
        if (fields[1] == "metabolites") t.vocabulary.metabolites = std::move(ids);
        else if (fields[1] == "compartments") t.vocabulary.compartments = std::move(ids);
        else if (fields[1] == "genes") t.vocabulary.genes = std::move(ids);
        else if (fields[1] == "proteins") t.vocabulary.proteins = std::move(ids);
        else if (fields[1] == "enzyme_classes") t.vocabulary.enzyme_classes = std::move(ids);
        else line_error(line_no, "unknown vocabulary '" + fields[1] + "'");
      } else {
        line_error(line_no, "unknown record '" + kind + "'");
      }
    } catch (const Error& e) {
      // Atom errors lack a position; attach the line.
      if (std::string_view(e.what()).find("line ") != std::string_view::npos) throw;
      throw Error("PARSE_ERROR", "line " + std::to_string(line_no) + ", column 1: " +
                                     std::string(e.what()).substr(e.code().size() + 2));
    }
  }
  return t;
}

std::vector<std::string> parse_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t line_no = 0;
  for (const auto& raw : split(text, '\n')) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (!is_identifier(line)) line_error(line_no, "bad identifier '" + line + "'");
    out.push_back(line);
  }
  return out;
}

std::set<LocatedMetabolite> parse_goal_list(std::string_view text) {
  std::set<LocatedMetabolite> out;
  std::size_t line_no = 0;
  for (const auto& raw : split(text, '\n')) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream in(line);
    std::string m, c, extra;
    if (!(in >> m >> c) || (in >> extra))
      line_error(line_no, "expected '<metabolite> <compartment>'");
    out.insert({m, c});
  }
  return out;
}

std::map<std::string, bool> parse_truth(std::string_view text) {
  std::map<std::string, bool> out;
  std::size_t line_no = 0;
  bool header = false;
  for (const auto& raw : split(text, '\n')) {
    ++line_no;
    std::string line(raw);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split(line, '\t');
    if (!header) {
      if (fields.size() != 2 || fields[0] != "gene" || fields[1] != "essential")
        line_error(line_no, "expected header 'gene<TAB>essential'");
      header = true;
      continue;
    }
    if (fields.size() != 2 || !is_identifier(fields[0]) || (fields[1] != "0" && fields[1] != "1"))
      line_error(line_no, "expected '<gene><TAB><0|1>'");
    if (!out.emplace(fields[0], fields[1] == "1").second)
      line_error(line_no, "duplicate gene '" + fields[0] + "'");
  }
  if (!header) throw Error("PARSE_ERROR", "line 1, column 1: missing header");
  return out;
}

std::string serialize_predictions(std::span<const EssentialityPrediction> predictions) {
  std::ostringstream out;
  out << "gene\tessential\tmissing_goals\n";
  for (const auto& p : predictions) {
    out << p.gene << '\t' << (p.essential ? 1 : 0) << '\t';
    for (std::size_t i = 0; i < p.missing_goals.size(); ++i)
      out << (i ? " " : "") << to_string(p.missing_goals[i]);
    out << '\n';
  }
  return out.str();
}

std::string serialize_score(const ScoreReport& r) {
  char buf[64];
  auto fixed = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return std::string(buf);
  };
  std::ostringstream out;
  out << "metric\tvalue\n"
      << "tp\t" << r.tp << '\n'
      << "fp\t" << r.fp << '\n'
      << "fn\t" << r.fn << '\n'
      << "tn\t" << r.tn << '\n'
      << "precision\t" << fixed(r.precision) << '\n'
      << "recall\t" << fixed(r.recall) << '\n'
      << "f1\t" << fixed(r.f1) << '\n';
  return out.str();
}

std::string serialize_trace(const LoopTrace& trace) {
  Json j = Json::object();
  j["stop_reason"] = trace.stop_reason;
  j["experiments"] = trace.experiments();
  j["accepted"] = trace.accepted;
  j["entries"] = Json::array();
  for (const auto& e : trace.entries) j["entries"].push_back(entry_json(e));
  j["history"] = Json::array();
  for (const auto& r : trace.history)
    j["history"].push_back(Json{{"iteration", r.iteration},
                                {"setup", setup_json(r.setup)},
                                {"observed_viable", r.observed_viable}});
  j["final_model"] = model_json(trace.final_model.model);
  j["asserted"] = Json::array();
  for (const auto& a : trace.final_model.asserted) j["asserted"].push_back(to_string(a));
  return dump(j);
}

LoopTrace parse_trace(std::string_view text) {
  const Json j = parse_json(text);
  expect_object(j, "", {"stop_reason", "experiments", "accepted", "entries", "history",
                        "final_model", "asserted"});
  LoopTrace t;
  t.stop_reason = as_string(required_field(j, "", "stop_reason"), "/stop_reason");
  t.accepted = as_strings(required_field(j, "", "accepted"), "/accepted");
  {
    std::size_t i = 0;
    for (const auto& e : as_array(required_field(j, "", "entries"), "/entries"))
      t.entries.push_back(entry_from_json(e, "/entries/" + std::to_string(i++)));
  }
  {
    std::size_t i = 0;
    for (const auto& r : as_array(required_field(j, "", "history"), "/history")) {
      const std::string p = "/history/" + std::to_string(i++);
      expect_object(r, p, {"iteration", "setup", "observed_viable"});
      t.history.push_back({setup_from_json(required_field(r, p, "setup"), p + "/setup"),
                           as_bool(required_field(r, p, "observed_viable"), p + "/observed_viable"),
                           as_unsigned(required_field(r, p, "iteration"), p + "/iteration")});
    }
  }
  if (as_unsigned(required_field(j, "", "experiments"), "/experiments") != t.history.size())
    structural("/experiments", "does not match history length");
  t.final_model.model = model_from_json(required_field(j, "", "final_model"), "/final_model");
  for (const auto& a : as_strings(required_field(j, "", "asserted"), "/asserted"))
    t.final_model.asserted.push_back(parse_atom(a));
  return t;
}

}  // namespace gemreason::io
