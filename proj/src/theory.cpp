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

#include "gemreason/theory.hpp"

#include <algorithm>
#include <array>

#include "gemreason/error.hpp"

namespace gemreason {

namespace {

constexpr std::array<std::string_view, 5> kPredicateNames = {"met", "gn", "pro", "enz", "rxn"};
constexpr std::array<std::string_view, 8> kTagNames = {"C1", "C2", "C3", "C4",
                                                       "C5", "C6", "C7", "H"};

void sort_clauses(std::vector<Clause>& clauses) {
  std::sort(clauses.begin(), clauses.end(), [](const Clause& a, const Clause& b) {
    return std::tie(a.tag, a.provenance, a.body, a.head) <
           std::tie(b.tag, b.provenance, b.body, b.head);
  });
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
}

Clause make_rule(std::vector<Atom> body, Atom head, SchemaTag tag, std::string provenance) {
  std::sort(body.begin(), body.end());
  body.erase(std::unique(body.begin(), body.end()), body.end());
  return {std::move(body), std::move(head), tag, std::move(provenance)};
}

}  // namespace

std::string_view to_string(Predicate p) { return kPredicateNames[static_cast<std::size_t>(p)]; }

std::optional<Predicate> parse_predicate(std::string_view name) {
  for (std::size_t i = 0; i < kPredicateNames.size(); ++i)
    if (kPredicateNames[i] == name) return static_cast<Predicate>(i);
  return std::nullopt;
}

std::string to_string(const Atom& atom) {
  std::string out(to_string(atom.predicate));
  out += '(';
  out += atom.first;
  if (!atom.second.empty()) {
    out += ',';
    out += atom.second;
  }
  out += ')';
  return out;
}

std::string_view to_string(SchemaTag tag) { return kTagNames[static_cast<std::size_t>(tag)]; }

std::optional<SchemaTag> parse_schema_tag(std::string_view name) {
  for (std::size_t i = 0; i < kTagNames.size(); ++i)
    if (kTagNames[i] == name) return static_cast<SchemaTag>(i);
  return std::nullopt;
}

std::vector<Atom> GroundTheory::fact_atoms() const {
  std::vector<Atom> out;
  out.reserve(facts.size());
  for (const auto& f : facts) out.push_back(f.head);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void validate_setup(const MetabolicModel& model, const ExperimentSetup& setup) {
  auto fail = [](const std::string& what, const std::string& id) {
    throw Error("INVALID_SETUP", what + " '" + id + "'");
  };
  for (const auto& g : setup.deletions)
    if (!model.has_gene(g)) fail("unknown deleted gene", g);
  for (const auto& m : setup.medium)
    if (!model.has_metabolite(m)) fail("unknown medium metabolite", m);
  for (const auto& m : setup.ubiquitous)
    if (!model.has_metabolite(m)) fail("unknown ubiquitous metabolite", m);
  if (setup.goal.empty()) throw Error("INVALID_SETUP", "goal set is empty");
  for (const auto& lm : setup.goal) {
    if (!model.has_metabolite(lm.metabolite)) fail("unknown goal metabolite", lm.metabolite);
    if (!model.has_compartment(lm.compartment)) fail("unknown goal compartment", lm.compartment);
  }
}

ExperimentSetup toy1_default_setup() {
  ExperimentSetup s;
  s.medium = {"A"};
  s.goal = {{"C", "cyt"}};
  return s;
}

std::vector<Atom> goal_atoms(const ExperimentSetup& setup) {
  std::vector<Atom> out;
  for (const auto& lm : setup.goal) out.push_back(Atom::met(lm));
  return out;
}

GroundTheory compile(const MetabolicModel& model, const ExperimentSetup& setup) {
  validate_setup(model, setup);
  const Compartment* ext = model.extracellular();
  if (!setup.medium.empty() && ext == nullptr)
    throw Error("UNKNOWN_EXTRACELLULAR", "medium given but no compartment is extracellular");

  GroundTheory t;

  for (const auto& g : model.genes)
    if (!setup.deletions.contains(g)) t.facts.push_back({{}, Atom::gn(g), SchemaTag::C1, g});

  for (const auto& p : model.complexes) {
    std::vector<Atom> body;
    for (const auto& g : p.subunits) body.push_back(Atom::gn(g));
    t.rules.push_back(make_rule(std::move(body), Atom::pro(p.id), SchemaTag::C2, p.id));
  }

  for (const auto& m : model.enzyme_mappings)
    t.rules.push_back(make_rule({Atom::pro(m.protein)}, Atom::enz(m.enzyme_class), SchemaTag::C3,
                                m.protein + "->" + m.enzyme_class));

  auto add_directed = [&](const std::string& id, const std::vector<LocatedMetabolite>& in,
                          const std::vector<LocatedMetabolite>& out,
                          const std::vector<std::string>& catalysts) {
    std::vector<Atom> reactants;
    for (const auto& lm : in) reactants.push_back(Atom::met(lm));
    if (catalysts.empty()) {
      t.rules.push_back(make_rule(reactants, Atom::rxn(id), SchemaTag::C4, id));
    } else {
      for (const auto& e : catalysts) {
        auto body = reactants;
        body.push_back(Atom::enz(e));
        t.rules.push_back(make_rule(std::move(body), Atom::rxn(id), SchemaTag::C4, id));
      }
    }
    for (const auto& lm : out)
      t.rules.push_back(make_rule({Atom::rxn(id)}, Atom::met(lm), SchemaTag::C5, id));
  };
  for (const auto& r : model.reactions) {
    add_directed(r.id, r.reactants, r.products, r.catalysts);
    if (r.reversible)
      add_directed(r.id + std::string(kReverseSuffix), r.products, r.reactants, r.catalysts);
  }

  for (const auto& m : setup.medium)
    t.facts.push_back({{}, Atom::met(m, ext->id), SchemaTag::C6, m});
  for (const auto& m : setup.ubiquitous)
    for (const auto& c : model.compartments)
      t.facts.push_back({{}, Atom::met(m, c.id), SchemaTag::C7, m});

  sort_clauses(t.facts);
  sort_clauses(t.rules);
  t.goal = goal_atoms(setup);

  auto sorted = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  t.vocabulary.metabolites = sorted(model.metabolites);
  for (const auto& c : model.compartments) t.vocabulary.compartments.push_back(c.id);
  t.vocabulary.compartments = sorted(t.vocabulary.compartments);
  t.vocabulary.genes = sorted(model.genes);
  for (const auto& p : model.complexes) t.vocabulary.proteins.push_back(p.id);
  t.vocabulary.proteins = sorted(t.vocabulary.proteins);
  t.vocabulary.enzyme_classes = model.enzyme_classes();
  return t;
}

GroundTheory compile(const WorkingModel& working, const ExperimentSetup& setup) {
  GroundTheory t = compile(working.model, setup);
  for (const auto& a : working.asserted)
    t.facts.push_back({{}, a, SchemaTag::abduced, to_string(a)});
  sort_clauses(t.facts);
  return t;
}

}  // namespace gemreason
