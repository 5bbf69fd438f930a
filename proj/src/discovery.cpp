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

#include "gemreason/discovery.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <set>

#include "gemreason/deduction.hpp"
#include "gemreason/error.hpp"

namespace gemreason {

namespace {

// Uniform double in [0, 1) from the top 53 bits; identical on every platform,
// unlike std::uniform_real_distribution.
double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t draw_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

constexpr std::array<std::string_view, 3> kStrategyNames = {"max_disagreement", "diversity",
                                                            "random"};

double min_distance(const ExperimentSetup& s, std::span<const ExperimentRecord> history) {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& r : history) d = std::min(d, jaccard_distance(s, r.setup));
  return d;
}

}  // namespace

Laboratory::Laboratory(HiddenModel hidden) : hidden_(std::move(hidden)), rng_(hidden_.seed) {
  if (!(hidden_.noise_rate >= 0.0 && hidden_.noise_rate < 1.0))
    throw Error("INVALID_CONFIG", "noise rate must lie in [0, 1)");
}

bool Laboratory::run_experiment(const ExperimentSetup& setup) {
  const bool truth = predict_viable(WorkingModel{hidden_.model, {}}, setup);
  ++runs_;
  const bool flip = unit_interval(rng_) < hidden_.noise_rate;
  return flip ? !truth : truth;
}

Corruption corrupt(const MetabolicModel& model, std::uint64_t seed, std::size_t n_removals) {
  const std::size_t n = model.enzyme_mappings.size();
  if (n_removals > n)
    throw Error("TOO_MANY_REMOVALS", std::to_string(n_removals) + " > " + std::to_string(n));
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[draw_index(rng, i)]);

  Corruption out;
  std::vector<char> drop(n, 0);
  for (std::size_t i = 0; i < n_removals; ++i) {
    drop[order[i]] = 1;
    out.removed.push_back(model.enzyme_mappings[order[i]]);
  }
  out.working = model;
  out.working.enzyme_mappings.clear();
  for (std::size_t i = 0; i < n; ++i)
    if (!drop[i]) out.working.enzyme_mappings.push_back(model.enzyme_mappings[i]);
  return out;
}

std::vector<Discrepancy> discrepancies(const WorkingModel& working,
                                       std::span<const ExperimentRecord> history) {
  std::vector<Discrepancy> out;
  for (const auto& r : history) {
    const bool predicted = predict_viable(working, r.setup);
    if (predicted != r.observed_viable) out.push_back({r.setup, predicted, r.observed_viable});
  }
  return out;
}

std::vector<ExperimentSetup> candidate_setups(const CandidateSpace& space,
                                              std::span<const ExperimentRecord> history) {
  std::set<ExperimentSetup> out;
  out.insert(space.base);
  for (const auto& g : space.gene_pool) {
    if (space.base.deletions.contains(g)) continue;
    ExperimentSetup s = space.base;
    s.deletions.insert(g);
    out.insert(std::move(s));
  }
  for (const auto& m : space.medium_pool) {
    ExperimentSetup s = space.base;
    if (!s.medium.erase(m)) s.medium.insert(m);
    out.insert(std::move(s));
  }
  for (const auto& r : history) out.erase(r.setup);
  return {out.begin(), out.end()};
}

double jaccard_distance(const ExperimentSetup& a, const ExperimentSetup& b) {
  std::set<std::string> sa = a.deletions, sb = b.deletions;
  for (const auto& m : a.medium) sa.insert("medium:" + m);
  for (const auto& m : b.medium) sb.insert("medium:" + m);
  std::size_t common = 0;
  for (const auto& x : sa) common += sb.contains(x);
  const std::size_t all = sa.size() + sb.size() - common;
  if (all == 0) return 0.0;
  return 1.0 - static_cast<double>(common) / static_cast<double>(all);
}

std::vector<ScoredCandidate> propose_experiments(const WorkingModel& working,
                                                 std::span<const Hypothesis> hypotheses,
                                                 const CandidateSpace& space,
                                                 std::span<const ExperimentRecord> history,
                                                 bool include_working) {
  const auto setups = candidate_setups(space, history);
  std::vector<ScoredCandidate> out;
  if (hypotheses.empty()) {
    std::vector<std::pair<double, const ExperimentSetup*>> ranked;
    for (const auto& s : setups) ranked.emplace_back(min_distance(s, history), &s);
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [d, s] : ranked) out.push_back({*s, 0});
    return out;
  }

  std::vector<WorkingModel> predictors;
  if (include_working) predictors.push_back(working);
  for (const auto& h : hypotheses) predictors.push_back(apply_hypothesis(working, h.elements));
  const std::size_t k = predictors.size();
  for (const auto& s : setups) {
    std::size_t viable = 0;
    for (const auto& p : predictors) viable += predict_viable(p, s);
    const std::size_t pairs = viable * (k - viable);
    if (pairs > 0) out.push_back({s, pairs});
  }
  return out;
}

std::string_view to_string(Strategy s) { return kStrategyNames[static_cast<std::size_t>(s)]; }

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (std::size_t i = 0; i < kStrategyNames.size(); ++i)
    if (kStrategyNames[i] == name) return static_cast<Strategy>(i);
  return std::nullopt;
}

ExperimentSetup select_experiment(std::span<const ScoredCandidate> candidates,
                                  std::span<const ExperimentRecord> history, Strategy strategy,
                                  std::mt19937_64& rng) {
  if (candidates.empty()) throw Error("NO_CANDIDATES", "no candidate experiments");
  if (strategy == Strategy::random) return candidates[draw_index(rng, candidates.size())].setup;

  const ScoredCandidate* best = nullptr;
  double best_score = -1.0;
  for (const auto& c : candidates) {
    const double score = strategy == Strategy::max_disagreement
                             ? static_cast<double>(c.disagreement)
                             : min_distance(c.setup, history);
    if (best == nullptr || score > best_score ||
        (score == best_score && c.setup < best->setup)) {
      best = &c;
      best_score = score;
    }
  }
  return best->setup;
}

void validate_config(const LoopConfig& config) {
  if (config.budget < 1) throw Error("INVALID_CONFIG", "budget must be at least 1");
  if (!(config.error_rate > 0.0 && config.error_rate < 1.0))
    throw Error("INVALID_CONFIG", "error_rate must lie strictly between 0 and 1");
  validate_schema(config.schema);
}

namespace {

class DiscoveryLoop {
 public:
  DiscoveryLoop(const HiddenModel& hidden, const WorkingModel& working,
                const ExperimentSetup& setup_template, const LoopConfig& config,
                const LoopObserver& observer)
      : lab_(hidden), config_(config), observer_(observer), rng_(config.rng_seed),
        noisy_(hidden.noise_rate > 0.0) {
    trace_.final_model = working;
    space_.base = setup_template;
    space_.gene_pool = config.gene_pool.empty() ? working.model.genes : config.gene_pool;
    space_.medium_pool = config.medium_pool;
  }

  LoopTrace run() {
    constexpr std::size_t kIterationLimit = 10000;
    for (std::size_t it = 1;; ++it) {
      if (it > kIterationLimit) {
        finish(it, "iteration_limit");
        break;
      }
      LoopEntry entry;
      entry.iteration = it;
      for (const auto& g : space_.gene_pool)
        if (predict_essentiality(working(), space_.base, g).essential)
          entry.predicted_essential.push_back(g);

      auto open = open_discrepancies();
      entry.open_discrepancies = open.size();
      if (!open.empty()) {
        repair(open.front(), entry);
      } else if (!explore(entry)) {
        break;
      }
      record(entry);
    }
    return std::move(trace_);
  }

 private:
  const WorkingModel& working() const { return trace_.final_model; }
  bool budget_left() const { return trace_.history.size() < config_.budget; }

  std::vector<Discrepancy> open_discrepancies() const {
    auto all = discrepancies(working(), trace_.history);
    std::erase_if(all, [&](const Discrepancy& d) { return skipped_.contains(d.setup); });
    return all;
  }

  std::vector<Observation> observations() const {
    std::vector<Observation> out;
    for (const auto& r : trace_.history) out.push_back({r.setup, r.observed_viable});
    return out;
  }

  bool contradicted(const Hypothesis& h) const {
    const WorkingModel extended = apply_hypothesis(working(), h.elements);
    for (const auto& r : trace_.history)
      if (!r.observed_viable && predict_viable(extended, r.setup)) return true;
    return false;
  }

  // Repairs for one setup, filtered (noise-free) or MML-ranked (noisy) against the history.
  std::vector<Hypothesis> repairs(const ExperimentSetup& setup, LoopEntry& entry) {
    const GroundTheory theory = compile(working(), setup);
    AbductionResult result = abduce(theory, theory.goal, config_.schema);
    std::vector<Hypothesis> kept;
    if (!noisy_) {
      for (auto& h : result.hypotheses) {
        if (contradicted(h)) entry.rejected.push_back(to_string(h));
        else kept.push_back(std::move(h));
      }
      return kept;
    }
    const CandidatePools pools = candidate_pools(theory, config_.schema);
    const auto obs = observations();
    std::vector<std::pair<double, Hypothesis>> scored;
    for (auto& h : result.hypotheses)
      scored.emplace_back(mml_score(h.elements, pools, working(), obs, config_.error_rate),
                          std::move(h));
    std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first < b.first : rank_less(a.second, b.second);
    });
    for (auto& [bits, h] : scored) {
      h.mml_bits = bits;
      kept.push_back(std::move(h));
    }
    return kept;
  }

  // Keeps the repairs that explain the most open viable-but-predicted-dead
  // observations; rank order is preserved among them.
  void keep_widest(std::vector<Hypothesis>& hyps) const {
    std::vector<ExperimentSetup> unexplained;
    for (const auto& d : open_discrepancies())
      if (d.observed_viable) unexplained.push_back(d.setup);
    if (hyps.size() < 2 || unexplained.size() < 2) return;
    std::vector<std::size_t> covered;
    for (const auto& h : hyps) {
      const WorkingModel extended = apply_hypothesis(working(), h.elements);
      covered.push_back(static_cast<std::size_t>(
          std::count_if(unexplained.begin(), unexplained.end(),
                        [&](const ExperimentSetup& s) { return predict_viable(extended, s); })));
    }
    const std::size_t best = *std::max_element(covered.begin(), covered.end());
    std::vector<Hypothesis> kept;
    for (std::size_t i = 0; i < hyps.size(); ++i)
      if (covered[i] == best) kept.push_back(std::move(hyps[i]));
    hyps = std::move(kept);
  }

  void repair(const Discrepancy& d, LoopEntry& entry) {
    if (d.predicted_viable) {
      // Adding knowledge cannot remove a derivation; nothing to abduce.
      skipped_.insert(d.setup);
      entry.phase = "skip";
      return;
    }
    auto hyps = repairs(d.setup, entry);
    if (!noisy_) keep_widest(hyps);
    for (const auto& h : hyps) entry.hypotheses.push_back(to_string(h));
    if (hyps.empty()) {
      skipped_.insert(d.setup);
      entry.phase = "skip";
      return;
    }
    if (hyps.size() > 1 && budget_left()) {
      const auto cands = propose_experiments(working(), hyps, space_, trace_.history, false);
      if (!cands.empty()) {
        entry.phase = "discriminate";
        observe(select_experiment(cands, trace_.history, config_.strategy, rng_), entry);
        return;
      }
    }
    entry.phase = "accept";
    const Hypothesis& top = hyps.front();
    for (const auto& e : top.elements) {
      entry.accepted.push_back(to_string(e));
      trace_.accepted.push_back(to_string(e));
    }
    trace_.final_model = apply_hypothesis(working(), top.elements);
  }

  // Returns false when the loop is finished.
  bool explore(LoopEntry& entry) {
    if (!budget_left()) {
      finish(entry.iteration, "budget");
      return false;
    }
    std::vector<Hypothesis> pool;
    std::set<std::vector<Abducible>> seen;
    for (const auto& s : candidate_setups(space_, trace_.history)) {
      if (predict_viable(working(), s)) continue;
      for (auto& h : repairs(s, entry))
        if (seen.insert(h.elements).second) pool.push_back(std::move(h));
    }
    // Only the smallest repairs vote; otherwise setups needing several
    // additions win on sheer combination count.
    if (!pool.empty()) {
      std::size_t least = pool.front().size();
      for (const auto& h : pool) least = std::min(least, h.size());
      std::erase_if(pool, [&](const Hypothesis& h) { return h.size() > least; });
    }
    const auto cands = propose_experiments(working(), pool, space_, trace_.history, true);
    if (pool.empty() || cands.empty()) {
      finish(entry.iteration, "converged");
      return false;
    }
    for (const auto& h : pool) entry.hypotheses.push_back(to_string(h));
    entry.phase = "explore";
    observe(select_experiment(cands, trace_.history, config_.strategy, rng_), entry);
    return true;
  }

  void observe(const ExperimentSetup& setup, LoopEntry& entry) {
    const bool viable = lab_.run_experiment(setup);
    trace_.history.push_back({setup, viable, entry.iteration});
    entry.chosen = setup;
    entry.observed = viable;
  }

  double agreement() const {
    if (trace_.history.empty()) return 1.0;
    const auto n = discrepancies(working(), trace_.history).size();
    return 1.0 - static_cast<double>(n) / static_cast<double>(trace_.history.size());
  }

  void record(LoopEntry& entry) {
    entry.agreement = agreement();
    trace_.entries.push_back(entry);
    if (observer_) observer_(entry, working(), trace_.history.size());
  }

  void finish(std::size_t iteration, std::string reason) {
    LoopEntry entry;
    entry.iteration = iteration;
    entry.phase = "stop";
    for (const auto& g : space_.gene_pool)
      if (predict_essentiality(working(), space_.base, g).essential)
        entry.predicted_essential.push_back(g);
    entry.open_discrepancies = open_discrepancies().size();
    trace_.stop_reason = std::move(reason);
    record(entry);
  }

  Laboratory lab_;
  const LoopConfig& config_;
  const LoopObserver& observer_;
  std::mt19937_64 rng_;
  bool noisy_;
  CandidateSpace space_;
  std::set<ExperimentSetup> skipped_;
  LoopTrace trace_;
};

}  // namespace

LoopTrace run_loop(const HiddenModel& hidden, const WorkingModel& working,
                   const ExperimentSetup& setup_template, const LoopConfig& config,
                   const LoopObserver& observer) {
  validate_config(config);
  for (const auto* m : {&hidden.model, &working.model}) {
    const auto report = validate_model(*m);
    if (!report.ok())
      throw Error("VALIDATION_FAILED",
                  report.violations.front().code + " " + report.violations.front().subject);
  }
  validate_setup(working.model, setup_template);
  return DiscoveryLoop(hidden, working, setup_template, config, observer).run();
}

}  // namespace gemreason
