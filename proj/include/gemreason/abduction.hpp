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
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "gemreason/model.hpp"
#include "gemreason/theory.hpp"

namespace gemreason {

/// One element a hypothesis may add: a ground fact, or a C3-form clause
/// pro(p) -> enz(e).
struct Abducible {
  enum class Kind : std::uint8_t { atom, mapping };

  Kind kind = Kind::atom;
  Atom atom;              // kind == atom
  EnzymeMapping mapping;  // kind == mapping

  static Abducible fact(Atom a) { return {Kind::atom, std::move(a), {}}; }
  static Abducible clause(EnzymeMapping m) { return {Kind::mapping, {}, std::move(m)}; }

  friend auto operator<=>(const Abducible&, const Abducible&) = default;
};

/// "enz(e2)" or "pro(p3)->enz(e2)".
std::string to_string(const Abducible& element);

/// Which abducibles are allowed. rxn is never abducible.
struct AbducibleSchema {
  std::set<Predicate> allow_atoms;
  bool allow_mappings = false;
  /// Explicit mapping candidates; ignored when `any_mapping` is set.
  std::set<EnzymeMapping> candidate_mappings;
  /// Every protein x enzyme-class pair of the vocabulary is a candidate.
  bool any_mapping = false;
  std::size_t max_size = 3;

  friend bool operator==(const AbducibleSchema&, const AbducibleSchema&) = default;
};

/// Throws Error("SCHEMA_EMPTY") when nothing is abducible and
/// Error("INVALID_SCHEMA") for rxn atoms or max_size 0.
void validate_schema(const AbducibleSchema& schema);

/// Candidate-pool size per abducible form, the uniform prior behind I(H).
struct CandidatePools {
  std::map<Predicate, std::size_t> atoms;
  std::size_t mappings = 0;

  std::size_t size_of(const Abducible& element) const;
};

struct Hypothesis {
  std::vector<Abducible> elements;  // sorted, unique
  std::size_t new_metabolites = 0;  // side-effect count
  double mml_bits = 0.0;

  std::size_t size() const { return elements.size(); }

  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

/// Elements joined by " & " in sorted order; the last ranking key.
std::string to_string(const Hypothesis& hypothesis);

/// All schema candidates against this theory: allowed-predicate atoms over
/// the vocabulary that are not already derivable, plus mapping clauses not
/// already present. Sorted.
std::vector<Abducible> candidate_abducibles(const GroundTheory& theory,
                                            const AbducibleSchema& schema);

CandidatePools candidate_pools(const GroundTheory& theory, const AbducibleSchema& schema);

/// T extended with the hypothesis: atoms become abduced facts, mappings
/// become C3 rules.
GroundTheory with_hypothesis(const GroundTheory& theory, std::span<const Abducible> elements);

struct AbductionResult {
  bool already_entailed = false;
  std::vector<Hypothesis> hypotheses;  // ranked
};

/// Every subset-minimal hypothesis H with |H| <= schema.max_size such that
/// T and H entail the goal, ranked by rank_hypotheses. Each H is re-certified
/// by the deduction engine (entailment and single-element-removal minimality)
/// before it is returned. `mml_bits` holds the prior I(H) only.
AbductionResult abduce(const GroundTheory& theory, std::span<const Atom> goal,
                       const AbducibleSchema& schema);

/// Met atoms derivable under T and H but not under T, abduced ones included.
std::size_t side_effects(const GroundTheory& theory, const Hypothesis& hypothesis);

/// Sort key (size, new_metabolites, mml_bits, serialization).
bool rank_less(const Hypothesis& a, const Hypothesis& b);
void rank_hypotheses(std::vector<Hypothesis>& hypotheses);

/// Bits to state H: each element costs log2 of its form's pool size, with a
/// floor of one bit so every element has positive cost.
double prior_bits(std::span<const Abducible> elements, const CandidatePools& pools);

struct Observation {
  ExperimentSetup setup;
  bool viable = false;
};

/// I(H) + I(D|H). An observation costs -log2(1 - error_rate) when the working
/// model extended by H predicts it and -log2(error_rate) otherwise.
/// Throws Error("BAD_ERROR_RATE") unless 0 < error_rate < 1.
double mml_score(std::span<const Abducible> elements, const CandidatePools& pools,
                 const WorkingModel& working, std::span<const Observation> observations,
                 double error_rate);

/// Working model with H merged in: mappings join the model, atoms are asserted.
WorkingModel apply_hypothesis(const WorkingModel& working, std::span<const Abducible> elements);

}  // namespace gemreason
