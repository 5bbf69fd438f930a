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

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gemreason/model.hpp"

namespace gemreason {

/// The five predicates of the ground theory, in their canonical order.
enum class Predicate : std::uint8_t { met, gn, pro, enz, rxn };

std::string_view to_string(Predicate p);
std::optional<Predicate> parse_predicate(std::string_view name);
inline std::size_t arity(Predicate p) { return p == Predicate::met ? 2 : 1; }

/// Ground atom. `second` is empty for the unary predicates.
struct Atom {
  Predicate predicate = Predicate::gn;
  std::string first;
  std::string second;

  static Atom met(std::string metabolite, std::string compartment) {
    return {Predicate::met, std::move(metabolite), std::move(compartment)};
  }
  static Atom met(const LocatedMetabolite& lm) { return met(lm.metabolite, lm.compartment); }
  static Atom gn(std::string gene) { return {Predicate::gn, std::move(gene), {}}; }
  static Atom pro(std::string complex) { return {Predicate::pro, std::move(complex), {}}; }
  static Atom enz(std::string enzyme_class) { return {Predicate::enz, std::move(enzyme_class), {}}; }
  static Atom rxn(std::string reaction) { return {Predicate::rxn, std::move(reaction), {}}; }

  bool well_formed() const { return (arity(predicate) == 2) == !second.empty(); }

  friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// "met(A,cyt)", "gn(g1)", ...
std::string to_string(const Atom& atom);

/// Which clause family produced a clause. `abduced` marks hypothesis facts.
enum class SchemaTag : std::uint8_t { C1, C2, C3, C4, C5, C6, C7, abduced };

std::string_view to_string(SchemaTag tag);
std::optional<SchemaTag> parse_schema_tag(std::string_view name);

/// Definite Horn clause; an empty body makes it a fact.
struct Clause {
  std::vector<Atom> body;  // sorted, no duplicates
  Atom head;
  SchemaTag tag = SchemaTag::C1;
  std::string provenance;

  friend auto operator<=>(const Clause&, const Clause&) = default;
};

/// Identifiers of the source model, kept with the theory so that abducible
/// candidate pools can be enumerated without the model itself.
struct Vocabulary {
  std::vector<std::string> metabolites;
  std::vector<std::string> compartments;
  std::vector<std::string> genes;
  std::vector<std::string> proteins;
  std::vector<std::string> enzyme_classes;

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;
};

struct GroundTheory {
  std::vector<Clause> facts;  // empty bodies
  std::vector<Clause> rules;  // non-empty bodies
  std::vector<Atom> goal;     // conjunctive
  Vocabulary vocabulary;

  std::vector<Atom> fact_atoms() const;

  friend bool operator==(const GroundTheory&, const GroundTheory&) = default;
};

/// Input half of an experiment: growth conditions, genotype and the
/// metabolites whose production counts as viability.
struct ExperimentSetup {
  std::set<std::string> medium;
  std::set<std::string> ubiquitous;
  std::set<std::string> deletions;
  std::set<LocatedMetabolite> goal;

  friend auto operator<=>(const ExperimentSetup&, const ExperimentSetup&) = default;
};

/// Throws Error("INVALID_SETUP") naming the first offending identifier.
void validate_setup(const MetabolicModel& model, const ExperimentSetup& setup);

/// Medium {A}, no ubiquitous metabolites, no deletions, goal C in cyt.
ExperimentSetup toy1_default_setup();

/// A model together with atoms asserted on top of it (accepted abduced facts
/// that have no structural counterpart in the model).
struct WorkingModel {
  MetabolicModel model;
  std::vector<Atom> asserted;

  friend bool operator==(const WorkingModel&, const WorkingModel&) = default;
};

std::vector<Atom> goal_atoms(const ExperimentSetup& setup);

/// Grounds the model under the setup into clause families C1..C7:
///   C1 gn(g) for every non-deleted gene
///   C2 gn(subunits...) -> pro(p)
///   C3 pro(p) -> enz(e)
///   C4 enz(e), met(reactants...) -> rxn(r), one clause per catalyst
///   C5 rxn(r) -> met(product), one clause per product
///   C6 met(m, extracellular) for every medium metabolite
///   C7 met(m, c) for every ubiquitous metabolite and compartment
/// Reversible reactions contribute a second directed reaction `<id>_rev`.
/// Output is sorted by (tag, provenance, body, head).
GroundTheory compile(const MetabolicModel& model, const ExperimentSetup& setup);

/// As above, plus the working model's asserted atoms as abduced facts.
GroundTheory compile(const WorkingModel& working, const ExperimentSetup& setup);

}  // namespace gemreason
