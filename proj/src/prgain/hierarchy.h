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

#ifndef PRGAIN_HIERARCHY_H_
#define PRGAIN_HIERARCHY_H_

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace prgain {

// UCI convention for a missing cell. It stays as-is below the top level and
// collapses into the root once a hierarchy reaches a single top value.
inline constexpr absl::string_view kMissingValue = "?";

enum class HierarchyKind { kInterval, kCategory, kMask };

absl::string_view HierarchyKindName(HierarchyKind kind);

// Closed integer interval [lower, upper] with its published label.
struct IntervalBin {
  int64_t lower = 0;
  int64_t upper = 0;
  std::string label;

  friend bool operator==(const IntervalBin&, const IntervalBin&) = default;
};

// A dimension table for one quasi-identifier. Level 0 is always the raw
// value; level max_level() is the coarsest.
//
// Instances are built unchecked so that broken configurations can still be
// inspected by ValidateHierarchy(); callers that need a usable hierarchy run
// the validator first.
class GeneralizationHierarchy {
 public:
  // levels[i] holds the bins of level i + 1, ordered by lower bound.
  static GeneralizationHierarchy Interval(
      std::vector<std::vector<IntervalBin>> levels);

  // levels[i] maps level-i values (or raw values) to level-(i + 1) values.
  static GeneralizationHierarchy Category(
      std::vector<std::map<std::string, std::string>> levels);

  static GeneralizationHierarchy Mask(int max_level, char mask_char = '*');

  HierarchyKind kind() const { return kind_; }
  int max_level() const { return max_level_; }
  char mask_char() const { return mask_char_; }
  const std::vector<std::vector<IntervalBin>>& interval_levels() const {
    return bins_;
  }
  const std::vector<std::map<std::string, std::string>>& category_levels()
      const {
    return maps_;
  }

  // Maps `value` to its level-`level` representative.
  absl::StatusOr<std::string> Generalize(absl::string_view value,
                                         int level) const;

  // The unique top value, if the coarsest level has exactly one.
  const std::string* Root() const;

 private:
  GeneralizationHierarchy() = default;

  absl::StatusOr<std::string> GeneralizeInterval(absl::string_view value,
                                                 int level) const;
  absl::StatusOr<std::string> GeneralizeCategory(absl::string_view value,
                                                 int level) const;
  std::string GeneralizeMask(absl::string_view value, int level) const;

  HierarchyKind kind_ = HierarchyKind::kMask;
  int max_level_ = 0;
  char mask_char_ = '*';
  std::vector<std::vector<IntervalBin>> bins_;
  std::vector<std::map<std::string, std::string>> maps_;
  std::vector<std::string> roots_;
};

struct HierarchyViolation {
  int level = 0;
  std::string message;
  std::vector<std::string> values;
};

struct ValidationReport {
  std::vector<HierarchyViolation> violations;

  bool ok() const { return violations.empty(); }
  std::string ToString() const;
};

// Checks structural invariants (level counts, interval bin ordering and
// containment, category totality, mask length) and the nesting property over
// `domain_sample`. Violations are returned as data.
ValidationReport ValidateHierarchy(const GeneralizationHierarchy& hierarchy,
                                   std::span<const std::string> domain_sample);

// One level per quasi-identifier; a node of the product lattice.
class GeneralizationVector {
 public:
  GeneralizationVector() = default;
  explicit GeneralizationVector(std::vector<int> levels)
      : levels_(std::move(levels)) {}
  static GeneralizationVector Zero(size_t size) {
    return GeneralizationVector(std::vector<int>(size, 0));
  }

  size_t size() const { return levels_.size(); }
  int operator[](size_t i) const { return levels_[i]; }
  const std::vector<int>& levels() const { return levels_; }
  int Sum() const;

  // "<1,0,0>"
  std::string ToString() const;
  // "<Age^1, Gender^0, ZIP^0>"
  std::string ToString(std::span<const std::string> names) const;

  friend bool operator==(const GeneralizationVector&,
                         const GeneralizationVector&) = default;
  friend auto operator<=>(const GeneralizationVector&,
                          const GeneralizationVector&) = default;

  template <typename H>
  friend H AbslHashValue(H h, const GeneralizationVector& v) {
    return H::combine(std::move(h), v.levels_);
  }

 private:
  std::vector<int> levels_;
};

// All vectors one step above `vector`: exactly one coordinate raised by one,
// skipping coordinates already at their maximum, in coordinate order.
std::vector<GeneralizationVector> Successors(const GeneralizationVector& vector,
                                             std::span<const int> max_levels);

}  // namespace prgain

#endif  // PRGAIN_HIERARCHY_H_
