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

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gemreason/abduction.hpp"
#include "gemreason/model.hpp"
#include "gemreason/theory.hpp"

namespace gemreason {

/// Ground truth behind the simulated laboratory.
struct HiddenModel {
  MetabolicModel model;
  double noise_rate = 0.0;  // in [0, 1)
  std::uint64_t seed = 0;
};

/// Answers experiments by deduction on the hidden model, flipping each
/// observation with probability noise_rate from a seeded stream.
class Laboratory {
 public:
  explicit Laboratory(HiddenModel hidden);

  bool run_experiment(const ExperimentSetup& setup);
  std::size_t experiments_run() const { return runs_; }

 private:
  HiddenModel hidden_;
  std::mt19937_64 rng_;
  std::size_t runs_ = 0;
};

struct Corruption {
  MetabolicModel working;
  std::vector<EnzymeMapping> removed;  // in draw order
};

/// Removes `n_removals` enzyme mappings drawn by a seeded shuffle.
/// Throws Error("TOO_MANY_REMOVALS").
Corruption corrupt(const MetabolicModel& model, std::uint64_t seed, std::size_t n_removals);

struct ExperimentRecord {
  ExperimentSetup setup;
  bool observed_viable = false;
  std::size_t iteration = 0;

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

struct Discrepancy {
  ExperimentSetup setup;
  bool predicted_viable = false;
  bool observed_viable = false;
};

/// History entries the working model mispredicts, in history order.
std::vector<Discrepancy> discrepancies(const WorkingModel& working,
                                       std::span<const ExperimentRecord> history);

/// Experiments the loop may run: the base setup itself, one extra deletion
/// per gene-pool gene, and one medium toggle per medium-pool metabolite.
struct CandidateSpace {
  ExperimentSetup base;
  std::vector<std::string> gene_pool;
  std::vector<std::string> medium_pool;
};

/// Untested setups of the space, sorted.
std::vector<ExperimentSetup> candidate_setups(const CandidateSpace& space,
                                              std::span<const ExperimentRecord> history);

struct ScoredCandidate {
  ExperimentSetup setup;
  std::size_t disagreement = 0;  // predictor pairs with different predictions
};

/// 1 - |A n B| / |A u B| over deletions u medium; 0 when both are empty.
double jaccard_distance(const ExperimentSetup& a, const ExperimentSetup& b);

/// Discriminating experiments. Predictors are the hypotheses applied to the
/// working model, plus the unmodified working model when `include_working`.
/// Keeps untested candidates on which some pair of predictors disagrees, in
/// candidate order. With no hypotheses every untested candidate is returned
/// with zero disagreement, most diverse first.
std::vector<ScoredCandidate> propose_experiments(const WorkingModel& working,
                                                 std::span<const Hypothesis> hypotheses,
                                                 const CandidateSpace& space,
                                                 std::span<const ExperimentRecord> history,
                                                 bool include_working = true);

enum class Strategy : std::uint8_t { max_disagreement, diversity, random };

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

/// Picks one candidate; ties go to the lexicographically least setup.
/// Throws Error("NO_CANDIDATES").
ExperimentSetup select_experiment(std::span<const ScoredCandidate> candidates,
                                  std::span<const ExperimentRecord> history, Strategy strategy,
                                  std::mt19937_64& rng);

struct LoopConfig {
  std::size_t budget = 8;
  Strategy strategy = Strategy::max_disagreement;
  AbducibleSchema schema;
  double error_rate = 0.05;
  std::uint64_t rng_seed = 0;
  std::vector<std::string> gene_pool;  // empty = every working-model gene
  std::vector<std::string> medium_pool;

  friend bool operator==(const LoopConfig&, const LoopConfig&) = default;
};

/// Throws Error("INVALID_CONFIG") for a zero budget or bad error rate.
void validate_config(const LoopConfig& config);

struct LoopEntry {
  std::size_t iteration = 0;
  std::string phase;  // explore, discriminate, accept, skip, stop
  std::vector<std::string> predicted_essential;
  std::size_t open_discrepancies = 0;
  std::vector<std::string> hypotheses;
  std::optional<ExperimentSetup> chosen;
  std::optional<bool> observed;
  std::vector<std::string> accepted;
  std::vector<std::string> rejected;
  double agreement = 1.0;

  friend bool operator==(const LoopEntry&, const LoopEntry&) = default;
};

struct LoopTrace {
  std::vector<LoopEntry> entries;
  std::vector<ExperimentRecord> history;
  WorkingModel final_model;
  std::vector<std::string> accepted;  // every accepted element, in order
  std::string stop_reason;

  std::size_t experiments() const { return history.size(); }

  friend bool operator==(const LoopTrace&, const LoopTrace&) = default;
};

using LoopObserver = std::function<void(const LoopEntry&, const WorkingModel&, std::size_t)>;

/// Closed discovery cycle against a hidden model:
///   1. compare the working model with every observation so far;
///   2. for the first open discrepancy, abduce repairs, drop those an
///      observation contradicts, and run a discriminating experiment while
///      the survivors disagree somewhere; otherwise accept the top-ranked one;
///   3. with no open discrepancy, abduce repairs for each untested setup the
///      working model calls non-viable and test where predictors disagree;
///   4. stop when nothing is left to test or the budget is spent.
/// With noise_rate > 0 contradicted repairs are kept and ranked by MML over
/// the history instead of being rejected. The observer, if set, runs after
/// every iteration with the current working model and experiment count.
LoopTrace run_loop(const HiddenModel& hidden, const WorkingModel& working,
                   const ExperimentSetup& setup_template, const LoopConfig& config,
                   const LoopObserver& observer = {});

}  // namespace gemreason
