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

#include "gemreason/deduction.hpp"

#include <algorithm>
#include <functional>

#include "gemreason/error.hpp"

namespace gemreason {

bool FactSet::contains(const Atom& atom) const {
  return std::binary_search(derived.begin(), derived.end(), atom);
}

std::size_t HornProgram::AtomHash::operator()(const Atom& a) const noexcept {
  std::size_t h = std::hash<std::string>{}(a.first);
  h ^= std::hash<std::string>{}(a.second) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h ^ (static_cast<std::size_t>(a.predicate) << 1);
}

HornProgram::HornProgram(const GroundTheory& theory) {
  for (const auto& f : theory.facts) add_fact(intern(f.head));
  for (const auto& r : theory.rules) {
    std::vector<int> body;
    body.reserve(r.body.size());
    for (const auto& a : r.body) body.push_back(intern(a));
    add_rule(std::move(body), intern(r.head), r.provenance);
  }
  for (const auto& g : theory.goal) intern(g);
}

int HornProgram::intern(const Atom& atom) {
  auto [it, inserted] = index_.try_emplace(atom, static_cast<int>(atoms_.size()));
  if (inserted) {
    atoms_.push_back(atom);
    watch_.emplace_back();
  }
  return it->second;
}

std::optional<int> HornProgram::find(const Atom& atom) const {
  auto it = index_.find(atom);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void HornProgram::add_fact(int atom) { facts_.push_back(atom); }

std::size_t HornProgram::add_rule(std::vector<int> body, int head, std::string provenance) {
  std::sort(body.begin(), body.end());
  body.erase(std::unique(body.begin(), body.end()), body.end());
  const std::size_t index = rules_.size();
  for (int a : body) watch_[a].push_back(static_cast<int>(index));
  rules_.push_back({std::move(body), head, std::move(provenance)});
  return index;
}

HornProgram::Model HornProgram::least_model(std::span<const int> extra_facts,
                                            std::span<const Rule> extra_rules) const {
  const std::size_t n = atoms_.size();
  const std::size_t base = rules_.size();
  Model m;
  m.derived.assign(n, 0);
  m.support.assign(n, -1);

  std::vector<int> remaining(base + extra_rules.size());
  for (std::size_t r = 0; r < base; ++r) remaining[r] = static_cast<int>(rules_[r].body.size());
  for (std::size_t r = 0; r < extra_rules.size(); ++r)
    remaining[base + r] = static_cast<int>(extra_rules[r].body.size());

  auto rule_at = [&](int r) -> const Rule& {
    return static_cast<std::size_t>(r) < base ? rules_[r] : extra_rules[r - base];
  };
  auto better = [&](int a, int b) {
    const auto& pa = rule_at(a).provenance;
    const auto& pb = rule_at(b).provenance;
    return pa != pb ? pa < pb : a < b;
  };

  std::vector<int> delta;
  auto seed = [&](int atom) {
    if (!m.derived[atom]) {
      m.derived[atom] = 1;
      delta.push_back(atom);
    }
  };
  for (int f : facts_) seed(f);
  for (int f : extra_facts) seed(f);
  // Rules with an empty body behave as facts.
  for (std::size_t r = 0; r < remaining.size(); ++r)
    if (remaining[r] == 0 && !m.derived[rule_at(static_cast<int>(r)).head]) {
      const int h = rule_at(static_cast<int>(r)).head;
      m.derived[h] = 1;
      m.support[h] = static_cast<int>(r);
      delta.push_back(h);
    }

  std::vector<int> pending;
  while (!delta.empty()) {
    pending.clear();
    auto fire = [&](int r) {
      if (--remaining[r] != 0) return;
      const int h = rule_at(r).head;
      if (m.derived[h]) return;
      if (m.support[h] == -1) {
        m.support[h] = r;
        pending.push_back(h);
      } else if (better(r, m.support[h])) {
        m.support[h] = r;
      }
    };
    for (int a : delta) {
      for (int r : watch_[a]) fire(r);
      for (std::size_t r = 0; r < extra_rules.size(); ++r)
        if (std::binary_search(extra_rules[r].body.begin(), extra_rules[r].body.end(), a))
          fire(static_cast<int>(base + r));
    }
    for (int h : pending) m.derived[h] = 1;
    if (!pending.empty()) ++m.rounds;
    std::sort(pending.begin(), pending.end());
    delta.swap(pending);
  }
  return m;
}

bool HornProgram::entails(std::span<const int> goal, std::span<const int> extra_facts,
                          std::span<const Rule> extra_rules) const {
  const Model m = least_model(extra_facts, extra_rules);
  return std::all_of(goal.begin(), goal.end(), [&](int g) { return m.holds(g); });
}

FactSet saturate(const GroundTheory& theory) {
  const HornProgram program(theory);
  const HornProgram::Model m = program.least_model();
  FactSet out;
  out.rounds = m.rounds;
  for (std::size_t i = 0; i < m.derived.size(); ++i) {
    if (!m.derived[i]) continue;
    const Atom& a = program.atom(static_cast<int>(i));
    out.derived.push_back(a);
    out.support.emplace(a, m.support[i] < 0 ? std::nullopt
                                            : std::optional<std::size_t>(m.support[i]));
  }
  std::sort(out.derived.begin(), out.derived.end());
  return out;
}

std::vector<Atom> missing_goals(const GroundTheory& theory) {
  const HornProgram program(theory);
  const HornProgram::Model m = program.least_model();
  std::vector<Atom> missing;
  for (const auto& g : theory.goal)
    if (!m.holds(*program.find(g))) missing.push_back(g);
  std::sort(missing.begin(), missing.end());
  missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
  return missing;
}

bool entails(const GroundTheory& theory, std::span<const Atom> goal) {
  HornProgram program(theory);
  std::vector<int> ids;
  for (const auto& g : goal) ids.push_back(program.intern(g));
  return program.entails(ids);
}

bool predict_viable(const WorkingModel& working, const ExperimentSetup& setup) {
  return missing_goals(compile(working, setup)).empty();
}

EssentialityPrediction predict_essentiality(const WorkingModel& working,
                                            const ExperimentSetup& setup,
                                            const std::string& gene) {
  if (!working.model.has_gene(gene)) throw Error("UNKNOWN_GENE", gene);
  ExperimentSetup deleted = setup;
  deleted.deletions.insert(gene);
  EssentialityPrediction p;
  p.gene = gene;
  p.missing_goals = missing_goals(compile(working, deleted));
  p.essential = !p.missing_goals.empty();
  return p;
}

EssentialityPrediction predict_essentiality(const MetabolicModel& model,
                                            const ExperimentSetup& setup,
                                            const std::string& gene) {
  return predict_essentiality(WorkingModel{model, {}}, setup, gene);
}

std::vector<EssentialityPrediction> essentiality_scan(const WorkingModel& working,
                                                      const ExperimentSetup& setup,
                                                      std::span<const std::string> genes) {
  std::vector<EssentialityPrediction> out;
  out.reserve(genes.size());
  for (const auto& g : genes) out.push_back(predict_essentiality(working, setup, g));
  return out;
}

std::vector<EssentialityPrediction> essentiality_scan(const MetabolicModel& model,
                                                      const ExperimentSetup& setup,
                                                      std::span<const std::string> genes) {
  return essentiality_scan(WorkingModel{model, {}}, setup, genes);
}

ScoreReport score_counts(std::size_t tp, std::size_t fp, std::size_t fn, std::size_t tn) {
  ScoreReport s{tp, fp, fn, tn};
  auto ratio = [](std::size_t num, std::size_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  s.precision = ratio(tp, tp + fp);
  s.recall = ratio(tp, tp + fn);
  const double denom = s.precision + s.recall;
  s.f1 = denom > 0.0 ? 2.0 * s.precision * s.recall / denom : 0.0;
  return s;
}

ScoreReport score_predictions(std::span<const EssentialityPrediction> predictions,
                              const std::map<std::string, bool>& truth) {
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
  for (const auto& p : predictions) {
    auto it = truth.find(p.gene);
    if (it == truth.end()) throw Error("MISSING_TRUTH", p.gene);
    if (p.essential && it->second) ++tp;
    else if (p.essential) ++fp;
    else if (it->second) ++fn;
    else ++tn;
  }
  return score_counts(tp, fp, fn, tn);
}

}  // namespace gemreason
