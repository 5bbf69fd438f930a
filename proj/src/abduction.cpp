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

#include "gemreason/abduction.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "gemreason/deduction.hpp"
#include "gemreason/error.hpp"

namespace gemreason {

std::string to_string(const Abducible& element) {
  if (element.kind == Abducible::Kind::atom) return to_string(element.atom);
  return "pro(" + element.mapping.protein + ")->enz(" + element.mapping.enzyme_class + ")";
}

std::string to_string(const Hypothesis& hypothesis) {
  std::string out;
  for (const auto& e : hypothesis.elements) {
    if (!out.empty()) out += " & ";
    out += to_string(e);
  }
  return out;
}

void validate_schema(const AbducibleSchema& schema) {
  if (schema.allow_atoms.contains(Predicate::rxn))
    throw Error("INVALID_SCHEMA", "rxn atoms are not abducible");
  if (schema.max_size == 0) throw Error("INVALID_SCHEMA", "max_size must be positive");
  if (schema.allow_atoms.empty() && !schema.allow_mappings)
    throw Error("SCHEMA_EMPTY", "no abducible forms are enabled");
}

std::size_t CandidatePools::size_of(const Abducible& element) const {
  if (element.kind == Abducible::Kind::mapping) return mappings;
  auto it = atoms.find(element.atom.predicate);
  return it == atoms.end() ? 0 : it->second;
}

namespace {

std::set<EnzymeMapping> existing_mappings(const GroundTheory& theory) {
  std::set<EnzymeMapping> out;
  for (const auto& r : theory.rules)
    if (r.body.size() == 1 && r.body[0].predicate == Predicate::pro &&
        r.head.predicate == Predicate::enz)
      out.insert({r.body[0].first, r.head.first});
  return out;
}

std::vector<Atom> atoms_of(Predicate p, const Vocabulary& v) {
  std::vector<Atom> out;
  switch (p) {
    case Predicate::met:
      for (const auto& m : v.metabolites)
        for (const auto& c : v.compartments) out.push_back(Atom::met(m, c));
      break;
    case Predicate::gn:
      for (const auto& g : v.genes) out.push_back(Atom::gn(g));
      break;
    case Predicate::pro:
      for (const auto& p2 : v.proteins) out.push_back(Atom::pro(p2));
      break;
    case Predicate::enz:
      for (const auto& e : v.enzyme_classes) out.push_back(Atom::enz(e));
      break;
    case Predicate::rxn:
      break;
  }
  return out;
}

// Candidates in sorted order, together with the pool sizes they imply.
std::vector<Abducible> enumerate_candidates(const GroundTheory& theory,
                                            const AbducibleSchema& schema,
                                            const HornProgram& program,
                                            const HornProgram::Model& base,
                                            CandidatePools* pools) {
  std::vector<Abducible> out;
  for (Predicate p : schema.allow_atoms) {
    std::size_t count = 0;
    for (auto& a : atoms_of(p, theory.vocabulary)) {
      auto id = program.find(a);
      if (id && base.holds(*id)) continue;
      out.push_back(Abducible::fact(std::move(a)));
      ++count;
    }
    if (pools) pools->atoms[p] = count;
  }
  if (schema.allow_mappings) {
    const auto existing = existing_mappings(theory);
    std::set<EnzymeMapping> pool;
    if (schema.any_mapping) {
      for (const auto& p : theory.vocabulary.proteins)
        for (const auto& e : theory.vocabulary.enzyme_classes) pool.insert({p, e});
    } else {
      pool = schema.candidate_mappings;
    }
    std::size_t count = 0;
    for (const auto& m : pool) {
      if (existing.contains(m)) continue;
      out.push_back(Abducible::clause(m));
      ++count;
    }
    if (pools) pools->mappings = count;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// A theory's program plus the interned form of a list of abducibles.
struct Extension {
  std::vector<int> facts;
  std::vector<HornProgram::Rule> rules;
};

Extension extend(HornProgram& program, std::span<const Abducible> elements) {
  Extension ext;
  for (const auto& e : elements) {
    if (e.kind == Abducible::Kind::atom) {
      ext.facts.push_back(program.intern(e.atom));
    } else {
      const int body = program.intern(Atom::pro(e.mapping.protein));
      const int head = program.intern(Atom::enz(e.mapping.enzyme_class));
      ext.rules.push_back({{body}, head, e.mapping.protein + "->" + e.mapping.enzyme_class});
    }
  }
  return ext;
}

std::size_t count_new_mets(const HornProgram& program, const HornProgram::Model& before,
                           const HornProgram::Model& after) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < after.derived.size(); ++i)
    if (after.derived[i] && !before.holds(static_cast<int>(i)) &&
        program.atom(static_cast<int>(i)).predicate == Predicate::met)
      ++n;
  return n;
}

using Support = std::vector<int>;  // sorted candidate indices
using Family = std::vector<Support>;  // antichain under inclusion

bool subset_of(const Support& a, const Support& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Inserts keeping only inclusion-minimal sets; returns whether the family changed.
bool insert_minimal(Family& family, Support s) {
  for (const auto& t : family)
    if (subset_of(t, s)) return false;
  std::erase_if(family, [&](const Support& t) { return subset_of(s, t); });
  family.push_back(std::move(s));
  return true;
}

// Pairwise unions of two families, bounded in size and reduced to minimal sets.
Family combine(const Family& left, const Family& right, std::size_t max_size) {
  Family out;
  Support u;
  for (const auto& a : left)
    for (const auto& b : right) {
      u.clear();
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
      if (u.size() <= max_size) insert_minimal(out, u);
    }
  return out;
}

// Minimal supports over the AND/OR derivation graph. For each atom relevant to
// the goal, the family of inclusion-minimal candidate sets whose addition makes
// it derivable; derivable atoms carry the empty set. The goal family is the
// bounded cross-union over the goal atoms. A set belongs to the goal family iff
// it is a minimal entailing hypothesis: any entailing H has a derivation whose
// atoms each pick up a support inside H, by induction on derivation depth.
class SupportSearch {
 public:
  SupportSearch(const HornProgram& program, const HornProgram::Model& base,
                std::span<const Abducible> candidates, const Extension& ext,
                std::size_t max_size)
      : program_(program), base_(base), candidates_(candidates), ext_(ext),
        max_size_(max_size) {}

  Family run(std::span<const int> goal) {
    const std::size_t n = program_.atom_count();
    const std::size_t base_rules = program_.rules().size();
    const std::size_t all_rules = base_rules + ext_.rules.size();

    auto rule = [&](std::size_t r) -> const HornProgram::Rule& {
      return r < base_rules ? program_.rules()[r] : ext_.rules[r - base_rules];
    };

    // Backward relevance from the goal.
    std::vector<std::vector<std::size_t>> by_head(n);
    for (std::size_t r = 0; r < all_rules; ++r) by_head[rule(r).head].push_back(r);
    std::vector<char> relevant(n, 0);
    std::vector<int> stack(goal.begin(), goal.end());
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      if (relevant[a]) continue;
      relevant[a] = 1;
      if (base_.holds(a)) continue;
      for (std::size_t r : by_head[a])
        for (int b : rule(r).body) stack.push_back(b);
    }

    families_.assign(n, {});
    std::vector<std::vector<std::size_t>> watchers(n);
    std::deque<std::size_t> queue;
    std::vector<char> queued(all_rules, 0);
    for (std::size_t r = 0; r < all_rules; ++r) {
      const auto& rl = rule(r);
      if (!relevant[rl.head] || base_.holds(rl.head)) continue;
      for (int b : rl.body) watchers[b].push_back(r);
      queue.push_back(r);
      queued[r] = 1;
    }
    for (std::size_t a = 0; a < n; ++a)
      if (base_.holds(static_cast<int>(a))) families_[a].push_back({});
    std::size_t mapping_slot = 0;
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      if (candidates_[i].kind == Abducible::Kind::atom) {
        families_[ext_.facts[i - mapping_slot]].push_back({static_cast<int>(i)});
      } else {
        rule_candidate_[base_rules + mapping_slot] = static_cast<int>(i);
        ++mapping_slot;
      }
    }

    while (!queue.empty()) {
      const std::size_t r = queue.front();
      queue.pop_front();
      queued[r] = 0;
      const auto& rl = rule(r);
      Family produced{Support{}};
      if (auto it = rule_candidate_.find(r); it != rule_candidate_.end())
        produced.front().push_back(it->second);
      for (int b : rl.body) {
        if (families_[b].empty()) {
          produced.clear();
          break;
        }
        produced = combine(produced, families_[b], max_size_);
        if (produced.empty()) break;
      }
      bool changed = false;
      for (auto& s : produced) changed |= insert_minimal(families_[rl.head], std::move(s));
      if (!changed) continue;
      for (std::size_t w : watchers[rl.head])
        if (!queued[w]) {
          queued[w] = 1;
          queue.push_back(w);
        }
    }

    Family result{Support{}};
    for (int g : goal) {
      result = combine(result, families_[g], max_size_);
      if (result.empty()) break;
    }
    std::sort(result.begin(), result.end());
    return result;
  }

 private:
  const HornProgram& program_;
  const HornProgram::Model& base_;
  std::span<const Abducible> candidates_;
  const Extension& ext_;
  std::size_t max_size_;
  std::vector<Family> families_;
  std::map<std::size_t, int> rule_candidate_;  // extension rule -> candidate index
};

}  // namespace

std::vector<Abducible> candidate_abducibles(const GroundTheory& theory,
                                            const AbducibleSchema& schema) {
  const HornProgram program(theory);
  const auto base = program.least_model();
  return enumerate_candidates(theory, schema, program, base, nullptr);
}

CandidatePools candidate_pools(const GroundTheory& theory, const AbducibleSchema& schema) {
  const HornProgram program(theory);
  const auto base = program.least_model();
  CandidatePools pools;
  enumerate_candidates(theory, schema, program, base, &pools);
  return pools;
}

GroundTheory with_hypothesis(const GroundTheory& theory, std::span<const Abducible> elements) {
  GroundTheory out = theory;
  for (const auto& e : elements) {
    if (e.kind == Abducible::Kind::atom) {
      out.facts.push_back({{}, e.atom, SchemaTag::abduced, to_string(e.atom)});
    } else {
      out.rules.push_back({{Atom::pro(e.mapping.protein)},
                           Atom::enz(e.mapping.enzyme_class),
                           SchemaTag::C3,
                           e.mapping.protein + "->" + e.mapping.enzyme_class});
    }
  }
  auto order = [](const Clause& a, const Clause& b) {
    return std::tie(a.tag, a.provenance, a.body, a.head) <
           std::tie(b.tag, b.provenance, b.body, b.head);
  };
  std::sort(out.facts.begin(), out.facts.end(), order);
  std::sort(out.rules.begin(), out.rules.end(), order);
  out.facts.erase(std::unique(out.facts.begin(), out.facts.end()), out.facts.end());
  out.rules.erase(std::unique(out.rules.begin(), out.rules.end()), out.rules.end());
  return out;
}

double prior_bits(std::span<const Abducible> elements, const CandidatePools& pools) {
  double bits = 0.0;
  for (const auto& e : elements)
    bits += std::log2(static_cast<double>(std::max<std::size_t>(pools.size_of(e), 2)));
  return bits;
}

AbductionResult abduce(const GroundTheory& theory, std::span<const Atom> goal,
                       const AbducibleSchema& schema) {
  validate_schema(schema);
  HornProgram program(theory);
  std::vector<int> goal_ids;
  for (const auto& g : goal) goal_ids.push_back(program.intern(g));

  AbductionResult result;
  const HornProgram::Model base = program.least_model();
  if (std::all_of(goal_ids.begin(), goal_ids.end(), [&](int g) { return base.holds(g); })) {
    result.already_entailed = true;
    return result;
  }

  CandidatePools pools;
  const auto candidates = enumerate_candidates(theory, schema, program, base, &pools);
  // Atoms first, then mappings: matches the extension layout SupportSearch expects.
  std::vector<Abducible> ordered;
  for (const auto& c : candidates)
    if (c.kind == Abducible::Kind::atom) ordered.push_back(c);
  for (const auto& c : candidates)
    if (c.kind == Abducible::Kind::mapping) ordered.push_back(c);
  const Extension ext = extend(program, ordered);
  // Interning may have grown the atom table; recompute the base model over it.
  const HornProgram::Model widened = program.least_model();

  SupportSearch search(program, widened, ordered, ext, schema.max_size);
  const Family minimal = search.run(goal_ids);

  for (const auto& support : minimal) {
    Hypothesis h;
    for (int i : support) h.elements.push_back(ordered[i]);
    std::sort(h.elements.begin(), h.elements.end());

    const Extension hx = extend(program, h.elements);
    const auto model = program.least_model(hx.facts, hx.rules);
    if (!std::all_of(goal_ids.begin(), goal_ids.end(), [&](int g) { return model.holds(g); }))
      throw std::logic_error("abduce: hypothesis failed certification: " + to_string(h));
    for (std::size_t drop = 0; drop < h.elements.size(); ++drop) {
      std::vector<Abducible> rest = h.elements;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
      const Extension rx = extend(program, rest);
      if (program.entails(goal_ids, rx.facts, rx.rules))
        throw std::logic_error("abduce: hypothesis not minimal: " + to_string(h));
    }
    h.new_metabolites = count_new_mets(program, widened, model);
    h.mml_bits = prior_bits(h.elements, pools);
    result.hypotheses.push_back(std::move(h));
  }
  rank_hypotheses(result.hypotheses);
  return result;
}

std::size_t side_effects(const GroundTheory& theory, const Hypothesis& hypothesis) {
  HornProgram program(theory);
  const Extension ext = extend(program, hypothesis.elements);
  const auto before = program.least_model();
  const auto after = program.least_model(ext.facts, ext.rules);
  return count_new_mets(program, before, after);
}

bool rank_less(const Hypothesis& a, const Hypothesis& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.new_metabolites != b.new_metabolites) return a.new_metabolites < b.new_metabolites;
  if (a.mml_bits != b.mml_bits) return a.mml_bits < b.mml_bits;
  return to_string(a) < to_string(b);
}

void rank_hypotheses(std::vector<Hypothesis>& hypotheses) {
  std::stable_sort(hypotheses.begin(), hypotheses.end(), rank_less);
}

WorkingModel apply_hypothesis(const WorkingModel& working, std::span<const Abducible> elements) {
  WorkingModel out = working;
  for (const auto& e : elements) {
    if (e.kind == Abducible::Kind::mapping) {
      if (!out.model.has_mapping(e.mapping)) out.model.enzyme_mappings.push_back(e.mapping);
    } else if (std::find(out.asserted.begin(), out.asserted.end(), e.atom) ==
               out.asserted.end()) {
      out.asserted.push_back(e.atom);
    }
  }
  std::sort(out.asserted.begin(), out.asserted.end());
  return out;
}

double mml_score(std::span<const Abducible> elements, const CandidatePools& pools,
                 const WorkingModel& working, std::span<const Observation> observations,
                 double error_rate) {
  if (!(error_rate > 0.0 && error_rate < 1.0))
    throw Error("BAD_ERROR_RATE", "error rate must lie strictly between 0 and 1");
  double bits = prior_bits(elements, pools);
  if (observations.empty()) return bits;
  const WorkingModel extended = apply_hypothesis(working, elements);
  for (const auto& obs : observations) {
    const bool predicted = predict_viable(extended, obs.setup);
    bits += predicted == obs.viable ? -std::log2(1.0 - error_rate) : -std::log2(error_rate);
  }
  return bits;
}

}  // namespace gemreason
