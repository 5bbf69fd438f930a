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

#include <doctest.h>

#include <algorithm>

#include "gemreason/error.hpp"
#include "gemreason/synthetic.hpp"
#include "gemreason/theory.hpp"

using namespace gemreason;

namespace {

std::vector<std::string> rendered(const std::vector<Clause>& clauses) {
  std::vector<std::string> out;
  for (const auto& c : clauses) {
    std::string s = std::string(to_string(c.tag)) + " " + to_string(c.head);
    if (!c.body.empty()) {
      s += " :-";
      for (const auto& a : c.body) s += " " + to_string(a);
    }
    out.push_back(s);
  }
  return out;
}

bool includes(std::vector<Clause> big, std::vector<Clause> small) {
  std::sort(big.begin(), big.end());
  std::sort(small.begin(), small.end());
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

TEST_CASE("toy1 default theory, clause by clause") {
  const auto t = compile(toy1_model(), toy1_default_setup());
  // Enumerated by hand from the seven clause families.
  CHECK(rendered(t.facts) == std::vector<std::string>{
                                 "C1 gn(g1)", "C1 gn(g2)", "C1 gn(g3)", "C1 gn(g4)",
                                 "C6 met(A,ext)"});
  CHECK(rendered(t.rules) == std::vector<std::string>{
                                 "C2 pro(p1) :- gn(g1)",
                                 "C2 pro(p2) :- gn(g2) gn(g3)",
                                 "C2 pro(p3) :- gn(g4)",
                                 "C3 enz(e1) :- pro(p1)",
                                 "C3 enz(e2) :- pro(p2)",
                                 "C3 enz(e2) :- pro(p3)",
                                 "C4 rxn(r1) :- met(A,cyt) enz(e1)",
                                 "C4 rxn(r2) :- met(B,cyt) enz(e2)",
                                 "C4 rxn(t1) :- met(A,ext)",
                                 "C5 met(B,cyt) :- rxn(r1)",
                                 "C5 met(C,cyt) :- rxn(r2)",
                                 "C5 met(A,cyt) :- rxn(t1)"});
  CHECK(t.rules.size() == 12);
  CHECK(t.goal == std::vector<Atom>{Atom::met("C", "cyt")});
  CHECK(t.vocabulary.enzyme_classes == std::vector<std::string>{"e1", "e2"});
}

TEST_CASE("deleting g1 only drops gn(g1)") {
  auto setup = toy1_default_setup();
  const auto base = compile(toy1_model(), setup);
  setup.deletions = {"g1"};
  const auto t = compile(toy1_model(), setup);
  CHECK(t.rules == base.rules);
  CHECK(t.facts.size() == base.facts.size() - 1);
  for (const auto& f : t.facts) CHECK(f.head != Atom::gn("g1"));
}

TEST_CASE("ubiquitous metabolites are asserted in every compartment") {
  auto setup = toy1_default_setup();
  setup.ubiquitous = {"B"};
  const auto t = compile(toy1_model(), setup);
  const auto facts = t.fact_atoms();
  CHECK(std::binary_search(facts.begin(), facts.end(), Atom::met("B", "ext")));
  CHECK(std::binary_search(facts.begin(), facts.end(), Atom::met("B", "cyt")));
  CHECK(t.facts.size() == 7);
}

TEST_CASE("reversible reactions expand into two directions") {
  auto m = toy1_model();
  m.reactions[1].reversible = true;
  const auto t = compile(m, toy1_default_setup());
  const auto r = rendered(t.rules);
  CHECK(std::find(r.begin(), r.end(), "C4 rxn(r1_rev) :- met(B,cyt) enz(e1)") != r.end());
  CHECK(std::find(r.begin(), r.end(), "C5 met(A,cyt) :- rxn(r1_rev)") != r.end());
  CHECK(t.rules.size() == 14);
}

TEST_CASE("one activation clause per catalyst; spontaneous reactions have none") {
  auto m = toy1_model();
  m.reactions[2].catalysts = {"e1", "e2"};
  const auto t = compile(m, toy1_default_setup());
  std::size_t r2 = 0;
  for (const auto& c : t.rules)
    if (c.tag == SchemaTag::C4 && c.provenance == "r2") ++r2;
  CHECK(r2 == 2);
}

TEST_CASE("medium without an extracellular compartment") {
  auto m = toy1_model();
  m.compartments[0].extracellular = false;
  CHECK_THROWS_WITH_AS(compile(m, toy1_default_setup()), doctest::Contains("UNKNOWN_EXTRACELLULAR"),
                       Error);
  auto setup = toy1_default_setup();
  setup.medium.clear();
  CHECK_NOTHROW(compile(m, setup));
}

TEST_CASE("setup validation") {
  auto setup = toy1_default_setup();
  setup.deletions = {"g9"};
  CHECK_THROWS_AS(compile(toy1_model(), setup), Error);
  setup = toy1_default_setup();
  setup.goal.clear();
  CHECK_THROWS_WITH(compile(toy1_model(), setup), doctest::Contains("INVALID_SETUP"));
  setup = toy1_default_setup();
  setup.goal = {{"C", "nucleus"}};
  CHECK_THROWS_AS(compile(toy1_model(), setup), Error);
}

TEST_CASE("goal atoms") {
  CHECK(goal_atoms(toy1_default_setup()) == std::vector<Atom>{Atom::met("C", "cyt")});
  auto setup = toy1_default_setup();
  setup.goal.insert({"B", "cyt"});
  CHECK(goal_atoms(setup) == std::vector<Atom>{Atom::met("B", "cyt"), Atom::met("C", "cyt")});
}

TEST_CASE("compiled theories over synthetic models: counts, arity, determinism, deletion subset") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = generate_synthetic({}, seed);
    const auto& m = inst.model;
    auto setup = inst.setup;
    setup.deletions = {m.genes[seed % m.genes.size()]};
    const auto t = compile(m, setup);

    std::size_t c1 = 0, c5 = 0, expected_c5 = 0;
    for (const auto& f : t.facts) c1 += f.tag == SchemaTag::C1;
    for (const auto& r : t.rules) c5 += r.tag == SchemaTag::C5;
    for (const auto& r : m.reactions)
      expected_c5 += r.products.size() + (r.reversible ? r.reactants.size() : 0);
    CHECK(c1 == m.genes.size() - setup.deletions.size());
    CHECK(c5 == expected_c5);

    for (const auto* part : {&t.facts, &t.rules})
      for (const auto& c : *part) {
        CHECK(c.head.well_formed());
        for (const auto& a : c.body) CHECK(a.well_formed());
      }

    CHECK(compile(m, setup) == t);

    auto more = setup;
    more.deletions.insert(m.genes[(seed + 3) % m.genes.size()]);
    const auto smaller = compile(m, more);
    CHECK(includes(t.facts, smaller.facts));
    CHECK(includes(t.rules, smaller.rules));
  }
}

TEST_CASE("working-model assertions become abduced facts") {
  WorkingModel w{toy1_model(), {Atom::enz("e9")}};
  const auto t = compile(w, toy1_default_setup());
  CHECK(t.facts.back().tag == SchemaTag::abduced);
  CHECK(t.facts.back().head == Atom::enz("e9"));
}
