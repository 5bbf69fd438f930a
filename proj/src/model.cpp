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

#include "gemreason/model.hpp"

#include <algorithm>
#include <set>

namespace gemreason {

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  return std::all_of(text.begin(), text.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '.' || c == ':' || c == '-';
  });
}

const Compartment* MetabolicModel::extracellular() const {
  for (const auto& c : compartments)
    if (c.extracellular) return &c;
  return nullptr;
}

bool MetabolicModel::has_compartment(std::string_view id) const {
  return std::any_of(compartments.begin(), compartments.end(),
                     [&](const Compartment& c) { return c.id == id; });
}

bool MetabolicModel::has_metabolite(std::string_view id) const {
  return std::find(metabolites.begin(), metabolites.end(), id) != metabolites.end();
}

bool MetabolicModel::has_gene(std::string_view id) const {
  return std::find(genes.begin(), genes.end(), id) != genes.end();
}

bool MetabolicModel::has_complex(std::string_view id) const {
  return std::any_of(complexes.begin(), complexes.end(),
                     [&](const ProteinComplex& p) { return p.id == id; });
}

bool MetabolicModel::has_mapping(const EnzymeMapping& mapping) const {
  return std::find(enzyme_mappings.begin(), enzyme_mappings.end(), mapping) !=
         enzyme_mappings.end();
}

std::vector<std::string> MetabolicModel::enzyme_classes() const {
  std::set<std::string> classes;
  for (const auto& m : enzyme_mappings) classes.insert(m.enzyme_class);
  for (const auto& r : reactions) classes.insert(r.catalysts.begin(), r.catalysts.end());
  return {classes.begin(), classes.end()};
}

namespace {

class Validator {
 public:
  explicit Validator(const MetabolicModel& model) : model_(model) {}

  ValidationReport run() {
    if (model_.compartments.empty()) add("NO_COMPARTMENT", "", "");

    std::set<std::string> compartments;
    bool seen_extracellular = false;
    for (const auto& c : model_.compartments) {
      check_id(c.id, "compartment");
      if (!compartments.insert(c.id).second) add("DUPLICATE_ID", c.id, "compartment");
      if (c.extracellular) {
        if (seen_extracellular) add("MULTIPLE_EXTRACELLULAR", c.id, "");
        seen_extracellular = true;
      }
    }

    auto metabolites = unique_set(model_.metabolites, "metabolite");
    auto genes = unique_set(model_.genes, "gene");

    std::set<std::string> complexes;
    for (const auto& p : model_.complexes) {
      check_id(p.id, "protein");
      if (!complexes.insert(p.id).second) add("DUPLICATE_ID", p.id, "protein");
      if (p.subunits.empty()) add("EMPTY_SUBUNITS", p.id, "");
      std::set<std::string> seen;
      for (const auto& g : p.subunits) {
        if (!genes.contains(g)) add("UNKNOWN_GENE", p.id, g);
        if (!seen.insert(g).second) add("DUPLICATE_SUBUNIT", p.id, g);
      }
    }

    std::set<EnzymeMapping> mappings;
    for (const auto& m : model_.enzyme_mappings) {
      check_id(m.enzyme_class, "enzyme_class");
      if (!complexes.contains(m.protein)) add("UNKNOWN_PROTEIN", m.protein, m.enzyme_class);
      if (!mappings.insert(m).second) add("DUPLICATE_MAPPING", m.protein, m.enzyme_class);
    }

    std::set<std::string> reactions;
    for (const auto& r : model_.reactions) {
      check_id(r.id, "reaction");
      if (!reactions.insert(r.id).second) add("DUPLICATE_ID", r.id, "reaction");
    }
    for (const auto& r : model_.reactions) {
      if (r.reversible && reactions.contains(r.id + std::string(kReverseSuffix)))
        add("DUPLICATE_ID", r.id + std::string(kReverseSuffix), "reaction");
      if (r.reactants.empty()) add("EMPTY_REACTANTS", r.id, "");
      if (r.products.empty()) add("EMPTY_PRODUCTS", r.id, "");
      for (const auto* side : {&r.reactants, &r.products}) {
        for (const auto& lm : *side) {
          if (!metabolites.contains(lm.metabolite)) add("UNKNOWN_METABOLITE", r.id, lm.metabolite);
          if (!compartments.contains(lm.compartment))
            add("UNKNOWN_COMPARTMENT", r.id, lm.compartment);
        }
      }
      std::set<LocatedMetabolite> reactants(r.reactants.begin(), r.reactants.end());
      for (const auto& lm : r.products)
        if (reactants.contains(lm))
          add("REACTANT_PRODUCT_OVERLAP", r.id, lm.metabolite + "@" + lm.compartment);
      for (const auto& e : r.catalysts) check_id(e, "enzyme_class");
    }

    std::sort(report_.violations.begin(), report_.violations.end());
    report_.violations.erase(std::unique(report_.violations.begin(), report_.violations.end()),
                             report_.violations.end());
    return std::move(report_);
  }

 private:
  void add(std::string code, std::string subject, std::string detail) {
    report_.violations.push_back({std::move(code), std::move(subject), std::move(detail)});
  }

  void check_id(const std::string& id, const char* kind) {
    if (!is_identifier(id)) add("INVALID_IDENTIFIER", id, kind);
  }

  std::set<std::string> unique_set(const std::vector<std::string>& ids, const char* kind) {
    std::set<std::string> out;
    for (const auto& id : ids) {
      check_id(id, kind);
      if (!out.insert(id).second) add("DUPLICATE_ID", id, kind);
    }
    return out;
  }

  const MetabolicModel& model_;
  ValidationReport report_;
};

}  // namespace

ValidationReport validate_model(const MetabolicModel& model) { return Validator(model).run(); }

MetabolicModel toy1_model() {
  MetabolicModel m;
  m.compartments = {{"ext", true}, {"cyt", false}};
  m.metabolites = {"A", "B", "C"};
  m.genes = {"g1", "g2", "g3", "g4"};
  m.complexes = {{"p1", {"g1"}}, {"p2", {"g2", "g3"}}, {"p3", {"g4"}}};
  m.enzyme_mappings = {{"p1", "e1"}, {"p2", "e2"}, {"p3", "e2"}};
  m.reactions = {
      {"t1", {{"A", "ext"}}, {{"A", "cyt"}}, {}, false},
      {"r1", {{"A", "cyt"}}, {{"B", "cyt"}}, {"e1"}, false},
      {"r2", {{"B", "cyt"}}, {{"C", "cyt"}}, {"e2"}, false},
  };
  return m;
}

}  // namespace gemreason
