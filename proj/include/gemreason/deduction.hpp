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

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gemreason/theory.hpp"

namespace gemreason {

/// Least model of a ground theory with one witness derivation per atom.
struct FactSet {
  std::vector<Atom> derived;  // sorted
  /// Index into GroundTheory::rules of the witnessing rule; nullopt for facts.
  std::map<Atom, std::optional<std::size_t>> support;
  /// Number of semi-naive rounds that derived at least one new atom.
  std::size_t rounds = 0;

  bool contains(const Atom& atom) const;
};

/// Interned form of a ground Horn program. Atoms are dense integers so that
/// repeated least-model queries with a few extra facts or rules (hypothesis
/// certification, candidate screening) avoid re-hashing the whole theory.
class HornProgram {
 public:
  struct Rule {
    std::vector<int> body;  // sorted, unique, non-empty
    int head = 0;
    std::string provenance;
  };

  struct Model {
    std::vector<char> derived;  // indexed by atom id
    std::vector<int> support;   // rule index, -1 for facts / underived
    std::size_t rounds = 0;

    bool holds(int atom) const { return atom >= 0 && atom < static_cast<int>(derived.size()) && derived[atom]; }
  };

  HornProgram() = default;
  explicit HornProgram(const GroundTheory& theory);

  int intern(const Atom& atom);
  std::optional<int> find(const Atom& atom) const;
  const Atom& atom(int id) const { return atoms_[id]; }
  std::size_t atom_count() const { return atoms_.size(); }

  void add_fact(int atom);
  std::size_t add_rule(std::vector<int> body, int head, std::string provenance);

  const std::vector<int>& facts() const { return facts_; }
  const std::vector<Rule>& rules() const { return rules_; }

  /// Semi-naive least fixpoint. Extra facts and rules are layered on for this
  /// query only; extra rule i is reported in `support` as rules().size() + i.
  Model least_model(std::span<const int> extra_facts = {},
                    std::span<const Rule> extra_rules = {}) const;

  /// True iff every goal atom is in the least model.
  bool entails(std::span<const int> goal, std::span<const int> extra_facts = {},
               std::span<const Rule> extra_rules = {}) const;

 private:
  struct AtomHash {
    std::size_t operator()(const Atom& a) const noexcept;
  };

  std::vector<Atom> atoms_;
  std::unordered_map<Atom, int, AtomHash> index_;
  std::vector<int> facts_;
  std::vector<Rule> rules_;
  std::vector<std::vector<int>> watch_;  // atom -> rules with it in the body
};

/// Least fixpoint by semi-naive evaluation: a rule is revisited only when a
/// body atom was derived in the previous round. Among rules that first derive
/// an atom in the same round, the lexicographically least provenance is kept
/// as its support.
FactSet saturate(const GroundTheory& theory);

bool entails(const GroundTheory& theory, std::span<const Atom> goal);

/// Goal atoms of the theory that are not derivable, sorted.
std::vector<Atom> missing_goals(const GroundTheory& theory);

bool predict_viable(const WorkingModel& working, const ExperimentSetup& setup);

struct EssentialityPrediction {
  std::string gene;
  bool essential = false;
  std::vector<Atom> missing_goals;  // empty iff viable

  friend bool operator==(const EssentialityPrediction&, const EssentialityPrediction&) = default;
};

/// Compiles with `gene` added to the setup's deletions and reports which goal
/// atoms become underivable. Throws Error("UNKNOWN_GENE").
EssentialityPrediction predict_essentiality(const WorkingModel& working,
                                            const ExperimentSetup& setup, const std::string& gene);
EssentialityPrediction predict_essentiality(const MetabolicModel& model,
                                            const ExperimentSetup& setup, const std::string& gene);

/// One prediction per input gene, in input order.
std::vector<EssentialityPrediction> essentiality_scan(const WorkingModel& working,
                                                      const ExperimentSetup& setup,
                                                      std::span<const std::string> genes);
std::vector<EssentialityPrediction> essentiality_scan(const MetabolicModel& model,
                                                      const ExperimentSetup& setup,
                                                      std::span<const std::string> genes);

/// Confusion counts with "essential" as the positive class.
struct ScoreReport {
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
  double precision = 0.0, recall = 0.0, f1 = 0.0;
};

/// Ratios from counts; any zero denominator yields 0.
ScoreReport score_counts(std::size_t tp, std::size_t fp, std::size_t fn, std::size_t tn);

/// Throws Error("MISSING_TRUTH") for a predicted gene absent from `truth`.
ScoreReport score_predictions(std::span<const EssentialityPrediction> predictions,
                              const std::map<std::string, bool>& truth);

}  // namespace gemreason
