// Copyright 2026 The prgain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Run configuration, read from JSON:
//
//   {
//     "k": 3,
//     "quasi_identifiers": [
//       {"name": "Age", "hierarchy": {"kind": "interval", "levels": [
//           [{"lo": 21, "hi": 30, "label": "21-30"}, ...], ...]}},
//       {"name": "Gender", "hierarchy": {"kind": "category", "levels": [
//           {"Male": "person", "Female": "person"}]}},
//       {"name": "ZIP", "hierarchy": {"kind": "mask", "mask_char": "*",
//                                     "max_level": 4}}
//     ],
//     "sensitive": ["Condition"],
//     "identifiers": [],
//     "residual_policy": "drop",
//     "max_branches": 64,
//     "class_attr": "Condition",
//     "description": "free text"
//   }

#ifndef PRGAIN_CONFIG_H_
#define PRGAIN_CONFIG_H_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "nlohmann/json.hpp"
#include "prgain/anonymizer.h"
#include "prgain/hierarchy.h"
#include "prgain/table.h"

namespace prgain {

struct QuasiIdentifierConfig {
  std::string name;
  std::shared_ptr<const GeneralizationHierarchy> hierarchy;
};

struct RunConfig {
  int k = 0;
  std::vector<QuasiIdentifierConfig> quasi_identifiers;
  std::vector<std::string> sensitive;
  std::vector<std::string> identifiers;
  ResidualPolicy residual_policy = ResidualPolicy::kDrop;
  int max_branches = 64;  // 0 = unlimited
  std::optional<std::string> class_attr;

  std::vector<std::string> QuasiIdentifierNames() const;
  std::vector<std::pair<std::string,
                        std::shared_ptr<const GeneralizationHierarchy>>>
  Hierarchies() const;
};

// Errors carry a JSON-pointer style location, e.g.
// "/quasi_identifiers/1/hierarchy/kind: unknown hierarchy kind 'tree'".
absl::StatusOr<RunConfig> ParseConfigJson(absl::string_view text);
absl::StatusOr<RunConfig> ParseConfig(const std::string& path);

absl::StatusOr<GeneralizationHierarchy> ParseHierarchy(
    const nlohmann::json& spec, const std::string& pointer = "");
nlohmann::json HierarchyToJson(const GeneralizationHierarchy& hierarchy);

// Assigns roles and hierarchies from `config` to a table whose columns are
// all insensitive. Every attribute named by the config must be a column;
// identifiers may be absent when `require_identifiers` is false (released
// tables no longer carry them).
absl::StatusOr<Table> ApplyConfig(const Table& raw, const RunConfig& config,
                                  bool require_identifiers = true);

}  // namespace prgain

#endif  // PRGAIN_CONFIG_H_
