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

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gemreason/abduction.hpp"
#include "gemreason/deduction.hpp"
#include "gemreason/discovery.hpp"
#include "gemreason/model.hpp"
#include "gemreason/theory.hpp"

namespace gemreason::io {

// All parsers throw Error("PARSE_ERROR", ...) on malformed input. JSON syntax
// errors carry "line L, column C"; structural errors carry the JSON pointer of
// the offending value.

/// Model document without validation.
MetabolicModel parse_model_document(std::string_view text);

/// Parses and validates; throws Error("VALIDATION_FAILED") listing violations.
MetabolicModel parse_model(std::string_view text);
std::string serialize_model(const MetabolicModel& model);

ExperimentSetup parse_setup(std::string_view text);
std::string serialize_setup(const ExperimentSetup& setup);

AbducibleSchema parse_schema(std::string_view text);
std::string serialize_schema(const AbducibleSchema& schema);

/// Loop parameters plus the hidden-model noise settings and the base setup.
struct LoopDocument {
  LoopConfig config;
  ExperimentSetup setup;
  double noise_rate = 0.0;
  std::uint64_t hidden_seed = 0;

  friend bool operator==(const LoopDocument&, const LoopDocument&) = default;
};

LoopDocument parse_loop_config(std::string_view text);
std::string serialize_loop_config(const LoopDocument& doc);

/// "met(A,cyt)" -> Atom. Throws PARSE_ERROR on malformed or mis-arity atoms.
Atom parse_atom(std::string_view text);

/// Tab-separated clause listing, one clause per line:
///   fact  <tag> <provenance> <atom>
///   rule  <tag> <provenance> <head> :- <atom>, <atom>
///   goal  <atom>
///   vocab <kind> <ids separated by spaces>
std::string serialize_theory(const GroundTheory& theory);
GroundTheory parse_theory(std::string_view text);

/// One identifier per line; blank lines and '#' comments ignored.
std::vector<std::string> parse_list(std::string_view text);

/// "metabolite compartment" per line.
std::set<LocatedMetabolite> parse_goal_list(std::string_view text);

/// Header "gene<TAB>essential", then one "<gene><TAB><0|1>" row per gene.
std::map<std::string, bool> parse_truth(std::string_view text);

std::string serialize_predictions(std::span<const EssentialityPrediction> predictions);
std::string serialize_score(const ScoreReport& report);

std::string serialize_trace(const LoopTrace& trace);
LoopTrace parse_trace(std::string_view text);

}  // namespace gemreason::io
