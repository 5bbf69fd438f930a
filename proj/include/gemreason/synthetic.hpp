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

#include "gemreason/model.hpp"
#include "gemreason/theory.hpp"

namespace gemreason {

struct SyntheticShape {
  std::size_t reactions = 15;  // transports included
  std::size_t genes = 10;
  std::size_t nutrients = 3;
  std::size_t goals = 2;
};

struct SyntheticInstance {
  MetabolicModel model;
  ExperimentSetup setup;  // all nutrients in the medium, no deletions
};

/// Seeded random network grown forward from the nutrients, so the wild type
/// is always viable. Enzyme classes get one or two isozyme complexes of one or
/// two subunit genes; a few reactions are spontaneous, reversible, or
/// alternative routes to an existing metabolite.
SyntheticInstance generate_synthetic(const SyntheticShape& shape, std::uint64_t seed);

}  // namespace gemreason
