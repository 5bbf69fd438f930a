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

#include "gemreason/synthetic.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "gemreason/error.hpp"

namespace gemreason {

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

SyntheticInstance generate_synthetic(const SyntheticShape& shape, std::uint64_t seed) {
  if (shape.nutrients == 0 || shape.genes == 0 || shape.goals == 0 ||
      shape.reactions <= shape.nutrients)
    throw Error("INVALID_SHAPE", "need nutrients, genes, goals and internal reactions");

  Draw draw(seed);
  SyntheticInstance out;
  MetabolicModel& m = out.model;
  m.compartments = {{"ext", true}, {"cyt", false}};
  for (std::size_t g = 0; g < shape.genes; ++g) m.genes.push_back("G" + std::to_string(g));

  std::vector<std::string> pool;  // metabolites available in cyt
  for (std::size_t i = 0; i < shape.nutrients; ++i) {
    const std::string n = "N" + std::to_string(i);
    m.metabolites.push_back(n);
    m.reactions.push_back({"T" + std::to_string(i), {{n, "ext"}}, {{n, "cyt"}}, {}, false});
    out.setup.medium.insert(n);
    pool.push_back(n);
  }

  std::size_t next_enzyme = 0;
  std::size_t next_complex = 0;
  std::vector<std::string> enzymes;
  std::vector<std::string> produced;
  auto new_enzyme = [&] {
    const std::string e = "E" + std::to_string(next_enzyme++);
    enzymes.push_back(e);
    const std::size_t isozymes = draw.chance(0.45) ? 2 : 1;
    for (std::size_t k = 0; k < isozymes; ++k) {
      // Occasionally reuse an existing complex: a promiscuous protein.
      if (!m.complexes.empty() && draw.chance(0.1)) {
        const auto& p = m.complexes[draw.below(m.complexes.size())];
        if (!m.has_mapping({p.id, e})) m.enzyme_mappings.push_back({p.id, e});
        continue;
      }
      ProteinComplex p{"P" + std::to_string(next_complex++), {}};
      const std::size_t subunits = draw.chance(0.3) && shape.genes > 1 ? 2 : 1;
      while (p.subunits.size() < subunits) {
        std::string g = m.genes[draw.below(m.genes.size())];
        if (std::find(p.subunits.begin(), p.subunits.end(), g) == p.subunits.end())
          p.subunits.push_back(std::move(g));
      }
      std::sort(p.subunits.begin(), p.subunits.end());
      m.enzyme_mappings.push_back({p.id, e});
      m.complexes.push_back(std::move(p));
    }
    return e;
  };

  const std::size_t internal = shape.reactions - shape.nutrients;
  for (std::size_t j = 0; j < internal; ++j) {
    Reaction r;
    r.id = "R" + std::to_string(j);
    const std::size_t n_in = pool.size() > 1 && draw.chance(0.35) ? 2 : 1;
    std::vector<std::string> inputs;
    // Bias towards recent metabolites so pathways get some depth.
    while (inputs.size() < n_in) {
      const std::size_t span = std::min<std::size_t>(pool.size(), 4);
      const std::string& pick = draw.chance(0.7) ? pool[pool.size() - 1 - draw.below(span)]
                                                 : pool[draw.below(pool.size())];
      if (std::find(inputs.begin(), inputs.end(), pick) == inputs.end()) inputs.push_back(pick);
    }
    std::sort(inputs.begin(), inputs.end());
    for (const auto& i : inputs) r.reactants.push_back({i, "cyt"});

    std::string product;
    const bool alternative = produced.size() > 1 && draw.chance(0.2);
    if (alternative) {
      product = produced[draw.below(produced.size())];
      if (std::find(inputs.begin(), inputs.end(), product) != inputs.end()) product.clear();
    }
    if (product.empty()) {
      product = "M" + std::to_string(j);
      m.metabolites.push_back(product);
      produced.push_back(product);
      pool.push_back(product);
    }
    r.products.push_back({product, "cyt"});

    if (!draw.chance(0.1)) {
      const bool reuse = !enzymes.empty() && draw.chance(0.15);
      r.catalysts.push_back(reuse ? enzymes[draw.below(enzymes.size())] : new_enzyme());
      if (draw.chance(0.12)) {
        std::string second = new_enzyme();
        if (second != r.catalysts.front()) r.catalysts.push_back(std::move(second));
      }
    }
    r.reversible = draw.chance(0.1);
    m.reactions.push_back(std::move(r));
  }

  const std::size_t goals = std::min(shape.goals, produced.size());
  for (std::size_t i = 0; i < goals; ++i) out.setup.goal.insert({produced[produced.size() - 1 - i], "cyt"});
  if (out.setup.goal.empty()) out.setup.goal.insert({pool.back(), "cyt"});
  return out;
}

}  // namespace gemreason
