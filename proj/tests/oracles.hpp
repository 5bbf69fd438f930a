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

// Reference implementations used only by tests. They share the data types
// with the library but none of its algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gemreason/abduction.hpp"
#include "gemreason/model.hpp"
#include "gemreason/theory.hpp"

namespace oracle {

using gemreason::Abducible;
using gemreason::Atom;
using gemreason::Clause;
using gemreason::GroundTheory;

struct PlainRule {
  std::vector<Atom> body;
  Atom head;
};

/// Naive round-robin fixpoint: sweep every rule until a sweep adds nothing.
inline std::set<Atom> naive_least_model(const std::vector<Atom>& facts,
                                        const std::vector<PlainRule>& rules) {
  std::set<Atom> derived(facts.begin(), facts.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : rules) {
      if (derived.contains(r.head)) continue;
      if (std::all_of(r.body.begin(), r.body.end(), [&](const Atom& a) { return derived.contains(a); })) {
        derived.insert(r.head);
        changed = true;
      }
    }
  }
  return derived;
}

inline std::vector<PlainRule> plain_rules(const GroundTheory& t) {
  std::vector<PlainRule> out;
  for (const auto& r : t.rules) out.push_back({r.body, r.head});
  return out;
}

inline std::set<Atom> naive_least_model(const GroundTheory& t) {
  std::vector<Atom> facts;
  for (const auto& f : t.facts) facts.push_back(f.head);
  return naive_least_model(facts, plain_rules(t));
}

/// Naive entailment of the theory extended by abducibles.
inline bool entails_with(const GroundTheory& t, const std::vector<Abducible>& h,
                         const std::vector<Atom>& goal) {
  std::vector<Atom> facts;
  for (const auto& f : t.facts) facts.push_back(f.head);
  auto rules = plain_rules(t);
  for (const auto& e : h) {
    if (e.kind == Abducible::Kind::atom) facts.push_back(e.atom);
    else rules.push_back({{Atom::pro(e.mapping.protein)}, Atom::enz(e.mapping.enzyme_class)});
  }
  const auto m = naive_least_model(facts, rules);
  return std::all_of(goal.begin(), goal.end(), [&](const Atom& g) { return m.contains(g); });
}

/// Every subset of `candidates` with size <= max_size that entails the goal
/// and has no entailing proper subset. Sorted.
inline std::vector<std::vector<Abducible>> brute_force_minimal(
    const GroundTheory& t, const std::vector<Atom>& goal, const std::vector<Abducible>& candidates,
    std::size_t max_size) {
  std::vector<std::vector<Abducible>> entailing;
  const std::size_t n = candidates.size();
  std::vector<std::size_t> idx;
  // Enumerate k-subsets in lexicographic index order for k = 0..max_size.
  for (std::size_t k = 0; k <= max_size && k <= n; ++k) {
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<Abducible> h;
      for (auto i : idx) h.push_back(candidates[i]);
      if (entails_with(t, h, goal)) entailing.push_back(h);
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  std::vector<std::vector<Abducible>> minimal;
  for (const auto& h : entailing) {
    std::vector<Abducible> hs = h;
    std::sort(hs.begin(), hs.end());
    bool has_smaller = false;
    for (const auto& g : entailing) {
      if (g.size() >= h.size()) continue;
      std::vector<Abducible> gs = g;
      std::sort(gs.begin(), gs.end());
      if (std::includes(hs.begin(), hs.end(), gs.begin(), gs.end())) {
        has_smaller = true;
        break;
      }
    }
    if (!has_smaller) minimal.push_back(hs);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

/// Direct simulation of a model under a setup, without grounding: expand
/// genes -> complexes -> enzymes -> reactions -> metabolites to a fixpoint.
inline bool model_viable(const gemreason::MetabolicModel& m,
                         const gemreason::ExperimentSetup& s) {
  std::set<std::string> genes;
  for (const auto& g : m.genes)
    if (!s.deletions.contains(g)) genes.insert(g);
  std::set<std::string> proteins, enzymes;
  for (const auto& p : m.complexes)
    if (std::all_of(p.subunits.begin(), p.subunits.end(), [&](const std::string& g) { return genes.contains(g); }))
      proteins.insert(p.id);
  for (const auto& e : m.enzyme_mappings)
    if (proteins.contains(e.protein)) enzymes.insert(e.enzyme_class);

  std::set<gemreason::LocatedMetabolite> present;
  const auto* ext = m.extracellular();
  for (const auto& x : s.medium) present.insert({x, ext->id});
  for (const auto& x : s.ubiquitous)
    for (const auto& c : m.compartments) present.insert({x, c.id});

  auto catalysed = [&](const gemreason::Reaction& r) {
    return r.catalysts.empty() ||
           std::any_of(r.catalysts.begin(), r.catalysts.end(), [&](const std::string& e) { return enzymes.contains(e); });
  };
  auto all_present = [&](const std::vector<gemreason::LocatedMetabolite>& v) {
    return std::all_of(v.begin(), v.end(), [&](const auto& lm) { return present.contains(lm); });
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : m.reactions) {
      if (!catalysed(r)) continue;
      if (all_present(r.reactants))
        for (const auto& p : r.products) changed |= present.insert(p).second;
      if (r.reversible && all_present(r.products))
        for (const auto& p : r.reactants) changed |= present.insert(p).second;
    }
  }
  return std::all_of(s.goal.begin(), s.goal.end(), [&](const auto& g) { return present.contains(g); });
}

/// Random ground theory over at most `max_atoms` atoms and `max_rules` rules.
inline GroundTheory random_theory(std::uint64_t seed, std::size_t max_atoms, std::size_t max_rules) {
  std::mt19937_64 rng(seed);
  auto below = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  const std::size_t n_atoms = 1 + below(max_atoms);
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < n_atoms; ++i) {
    const std::string id = "a" + std::to_string(i);
    switch (i % 5) {
      case 0: atoms.push_back(Atom::met(id, "c" + std::to_string(i % 3))); break;
      case 1: atoms.push_back(Atom::gn(id)); break;
      case 2: atoms.push_back(Atom::pro(id)); break;
      case 3: atoms.push_back(Atom::enz(id)); break;
      default: atoms.push_back(Atom::rxn(id)); break;
    }
  }
  GroundTheory t;
  const std::size_t n_facts = below(std::max<std::size_t>(2, n_atoms / 3)) + 1;
  for (std::size_t i = 0; i < n_facts; ++i)
    t.facts.push_back({{}, atoms[below(n_atoms)], gemreason::SchemaTag::C1, "f" + std::to_string(i)});
  const std::size_t n_rules = below(max_rules + 1);
  for (std::size_t i = 0; i < n_rules; ++i) {
    std::vector<Atom> body;
    const std::size_t len = 1 + below(3);
    for (std::size_t k = 0; k < len; ++k) body.push_back(atoms[below(n_atoms)]);
    std::sort(body.begin(), body.end());
    body.erase(std::unique(body.begin(), body.end()), body.end());
    t.rules.push_back({body, atoms[below(n_atoms)], gemreason::SchemaTag::C4, "r" + std::to_string(below(10))});
  }
  return t;
}

}  // namespace oracle
