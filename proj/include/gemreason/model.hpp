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

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace gemreason {

/// Identifiers are non-empty tokens over [A-Za-z0-9_.:-].
bool is_identifier(std::string_view text);

struct Compartment {
  std::string id;
  bool extracellular = false;

  friend bool operator==(const Compartment&, const Compartment&) = default;
};

/// A metabolite placed in a compartment; the met/2 argument pair.
struct LocatedMetabolite {
  std::string metabolite;
  std::string compartment;

  friend auto operator<=>(const LocatedMetabolite&, const LocatedMetabolite&) = default;
};

struct ProteinComplex {
  std::string id;
  std::vector<std::string> subunits;  // gene ids

  friend bool operator==(const ProteinComplex&, const ProteinComplex&) = default;
};

/// Protein complex -> enzyme class edge. Isozymes are several complexes
/// mapped to the same class.
struct EnzymeMapping {
  std::string protein;
  std::string enzyme_class;

  friend auto operator<=>(const EnzymeMapping&, const EnzymeMapping&) = default;
};

struct Reaction {
  std::string id;
  std::vector<LocatedMetabolite> reactants;
  std::vector<LocatedMetabolite> products;
  std::vector<std::string> catalysts;  // enzyme classes; empty = spontaneous
  bool reversible = false;

  friend bool operator==(const Reaction&, const Reaction&) = default;
};

struct MetabolicModel {
  std::vector<Compartment> compartments;
  std::vector<std::string> metabolites;
  std::vector<std::string> genes;
  std::vector<ProteinComplex> complexes;
  std::vector<EnzymeMapping> enzyme_mappings;
  std::vector<Reaction> reactions;

  /// The compartment flagged extracellular, or nullptr.
  const Compartment* extracellular() const;

  bool has_compartment(std::string_view id) const;
  bool has_metabolite(std::string_view id) const;
  bool has_gene(std::string_view id) const;
  bool has_complex(std::string_view id) const;
  bool has_mapping(const EnzymeMapping& mapping) const;

  /// Sorted union of enzyme classes named by mappings and reaction catalysts.
  std::vector<std::string> enzyme_classes() const;

  friend bool operator==(const MetabolicModel&, const MetabolicModel&) = default;
};

/// Suffix given to the reverse direction of a reversible reaction.
inline constexpr std::string_view kReverseSuffix = "_rev";

struct Violation {
  std::string code;
  std::string subject;
  std::string detail;

  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;  // sorted by (code, subject, detail)

  bool ok() const { return violations.empty(); }
};

/// Checks identifier syntax, uniqueness and referential integrity. Never
/// throws; violations are reported as data in a stable order.
ValidationReport validate_model(const MetabolicModel& model);

/// The fixed two-compartment, four-gene example model used across tests
/// and shipped as data/toy1.json.
MetabolicModel toy1_model();

}  // namespace gemreason
