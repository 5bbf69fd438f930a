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

#include <set>

#include "gemreason/deduction.hpp"
#include "gemreason/error.hpp"
#include "gemreason/synthetic.hpp"
#include "oracles.hpp"

using namespace gemreason;

namespace {

std::set<Atom> as_set(const FactSet& fs) { return {fs.derived.begin(), fs.derived.end()}; }

}  // namespace

TEST_CASE("toy1 least model") {
  const auto t = compile(toy1_model(), toy1_default_setup());
  const auto fs = saturate(t);
  CHECK(as_set(fs) == oracle::naive_least_model(t));
  CHECK(fs.contains(Atom::met("C", "cyt")));
  CHECK(fs.contains(Atom::enz("e2")));
  CHECK(entails(t, t.goal));
  CHECK(missing_goals(t).empty());
}

TEST_CASE("support points at a rule whose body holds and whose head matches") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto t = oracle::random_theory(seed, 30, 60);
    const auto fs = saturate(t);
    REQUIRE(as_set(fs) == oracle::naive_least_model(t));
    const auto facts = t.fact_atoms();
    for (const auto& a : fs.derived) {
      const auto& s = fs.support.at(a);
      if (!s) {
        CHECK(std::binary_search(facts.begin(), facts.end(), a));
        continue;
      }
      const auto& r = t.rules.at(*s);
      CHECK(r.head == a);
      for (const auto& b : r.body) CHECK(fs.contains(b));
    }
    CHECK(fs.support.size() == fs.derived.size());
  }
}

TEST_CASE("same-round ties keep the least provenance") {
  GroundTheory t;
  t.facts.push_back({{}, Atom::gn("x"), SchemaTag::C1, "x"});
  t.rules.push_back({{Atom::gn("x")}, Atom::pro("p"), SchemaTag::C2, "zeta"});
  t.rules.push_back({{Atom::gn("x")}, Atom::pro("p"), SchemaTag::C2, "alpha"});
  t.rules.push_back({{Atom::gn("x")}, Atom::pro("p"), SchemaTag::C2, "mid"});
  const auto fs = saturate(t);
  CHECK(t.rules[*fs.support.at(Atom::pro("p"))].provenance == "alpha");
}

TEST_CASE("support is not displaced by a later round") {
  GroundTheory t;
  t.facts.push_back({{}, Atom::gn("x"), SchemaTag::C1, "x"});
  t.rules.push_back({{Atom::gn("x")}, Atom::pro("q"), SchemaTag::C2, "b"});
  t.rules.push_back({{Atom::pro("q")}, Atom::enz("e"), SchemaTag::C3, "a"});
  t.rules.push_back({{Atom::gn("x")}, Atom::enz("e"), SchemaTag::C3, "z"});
  const auto fs = saturate(t);
  CHECK(t.rules[*fs.support.at(Atom::enz("e"))].provenance == "z");
  CHECK(fs.rounds == 1);
}

TEST_CASE("rounds counts productive layers") {
  const auto t = compile(toy1_model(), toy1_default_setup());
  // gn -> pro -> enz on one chain, met(A,ext) -> rxn(t1) -> met(A,cyt) -> rxn(r1)
  // -> met(B,cyt) -> rxn(r2) -> met(C,cyt) on the other: six layers.
  CHECK(saturate(t).rounds == 6);
}

TEST_CASE("monotonicity: adding facts never shrinks the least model") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto t = oracle::random_theory(seed, 20, 40);
    const auto before = as_set(saturate(t));
    t.facts.push_back({{}, Atom::enz("extra" + std::to_string(seed % 3)), SchemaTag::C1, "x"});
    if (!t.rules.empty()) t.facts.push_back({{}, t.rules.front().body.front(), SchemaTag::C1, "y"});
    const auto after = as_set(saturate(t));
    CHECK(std::includes(after.begin(), after.end(), before.begin(), before.end()));
  }
}

TEST_CASE("HornProgram extras are per-query only") {
  const auto t = compile(toy1_model(), toy1_default_setup());
  HornProgram prog(t);
  const int enz_e1 = *prog.find(Atom::enz("e1"));
  const int goal = *prog.find(Atom::met("C", "cyt"));
  auto deleted = toy1_default_setup();
  deleted.deletions = {"g1"};
  HornProgram dprog(compile(toy1_model(), deleted));
  const int d_goal = *dprog.find(Atom::met("C", "cyt"));
  const int d_e1 = *dprog.find(Atom::enz("e1"));
  CHECK_FALSE(dprog.entails(std::vector<int>{d_goal}));
  CHECK(dprog.entails(std::vector<int>{d_goal}, std::vector<int>{d_e1}));
  CHECK_FALSE(dprog.entails(std::vector<int>{d_goal}));
  CHECK(prog.entails(std::vector<int>{goal, enz_e1}));

  std::vector<HornProgram::Rule> extra{{{*dprog.find(Atom::gn("g2"))}, d_e1, "h"}};
  const auto m = dprog.least_model({}, extra);
  CHECK(m.holds(d_goal));
  CHECK(m.support[d_e1] == static_cast<int>(dprog.rules().size()));
}

TEST_CASE("toy1 essentiality scan and scoring") {
  const auto m = toy1_model();
  const auto preds = essentiality_scan(m, toy1_default_setup(), m.genes);
  REQUIRE(preds.size() == 4);
  CHECK(preds[0].essential);
  CHECK(preds[0].missing_goals == std::vector<Atom>{Atom::met("C", "cyt")});
  for (std::size_t i = 1; i < 4; ++i) CHECK_FALSE(preds[i].essential);

  const std::map<std::string, bool> truth{{"g1", true}, {"g2", false}, {"g3", false}, {"g4", false}};
  const auto score = score_predictions(preds, truth);
  CHECK(score.tp == 1);
  CHECK(score.tn == 3);
  CHECK(score.f1 == doctest::Approx(1.0));

  CHECK_THROWS_WITH(score_predictions(preds, {{"g1", true}}), doctest::Contains("MISSING_TRUTH"));
  CHECK_THROWS_WITH(predict_essentiality(m, toy1_default_setup(), "g9"),
                    doctest::Contains("UNKNOWN_GENE"));
}

TEST_CASE("essentiality with a prior deletion unions the genotypes") {
  auto setup = toy1_default_setup();
  setup.deletions = {"g4"};
  // With p3 gone, e2 rests on p2 alone, so g2 and g3 become essential.
  const auto m = toy1_model();
  const auto preds = essentiality_scan(m, setup, m.genes);
  CHECK(preds[1].essential);
  CHECK(preds[2].essential);
}

TEST_CASE("score_counts against hand-computed ratios") {
  const auto r = score_counts(3, 1, 2, 4);
  CHECK(r.precision == doctest::Approx(0.75));
  CHECK(r.recall == doctest::Approx(0.6));
  CHECK(r.f1 == doctest::Approx(2.0 / 3.0));
  const auto z = score_counts(0, 0, 0, 5);
  CHECK(z.precision == 0.0);
  CHECK(z.recall == 0.0);
  CHECK(z.f1 == 0.0);
}

TEST_CASE("theory-level predictions agree with direct model simulation") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = generate_synthetic({}, seed);
    const WorkingModel w{inst.model, {}};
    for (const auto& g : inst.model.genes) {
      auto s = inst.setup;
      s.deletions.insert(g);
      CHECK(predict_viable(w, s) == oracle::model_viable(inst.model, s));
    }
  }
}

TEST_CASE("one true positive, one false positive, two misses") {
  const auto r = score_counts(1, 1, 2, 0);
  CHECK(r.precision == doctest::Approx(0.5));
  CHECK(r.recall == doctest::Approx(1.0 / 3.0));
  CHECK(r.f1 == doctest::Approx(0.4));
}

TEST_CASE("degenerate theories and batches") {
  GroundTheory t;
  t.facts.push_back({{}, Atom::gn("a"), SchemaTag::C1, "a"});
  t.facts.push_back({{}, Atom::met("m", "c"), SchemaTag::C6, "m"});
  const auto fs = saturate(t);
  CHECK(fs.derived == t.fact_atoms());
  CHECK(fs.rounds == 0);
  const std::vector<Atom> goal{Atom::met("m", "c")};
  CHECK(entails(t, goal));

  const auto m = toy1_model();
  CHECK(essentiality_scan(m, toy1_default_setup(), std::vector<std::string>{}).empty());
  const std::vector<std::string> twice{"g2", "g2"};
  const auto preds = essentiality_scan(m, toy1_default_setup(), twice);
  REQUIRE(preds.size() == 2);
  CHECK(preds[0] == preds[1]);
}
