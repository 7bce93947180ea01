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

#include "prgain/hierarchy.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <utility>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace prgain {
namespace {

bool ParseNumber(absl::string_view text, double& out) {
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

}  // namespace

absl::string_view HierarchyKindName(HierarchyKind kind) {
  switch (kind) {
    case HierarchyKind::kInterval:
      return "interval";
    case HierarchyKind::kCategory:
      return "category";
    case HierarchyKind::kMask:
      return "mask";
  }
  return "unknown";
}

GeneralizationHierarchy GeneralizationHierarchy::Interval(
    std::vector<std::vector<IntervalBin>> levels) {
  GeneralizationHierarchy h;
  h.kind_ = HierarchyKind::kInterval;
  h.max_level_ = static_cast<int>(levels.size());
  h.bins_ = std::move(levels);
  if (!h.bins_.empty()) {
    std::set<std::string> top;
    for (const IntervalBin& bin : h.bins_.back()) top.insert(bin.label);
    h.roots_.assign(top.begin(), top.end());
  }
  return h;
}

GeneralizationHierarchy GeneralizationHierarchy::Category(
    std::vector<std::map<std::string, std::string>> levels) {
  GeneralizationHierarchy h;
  h.kind_ = HierarchyKind::kCategory;
  h.max_level_ = static_cast<int>(levels.size());
  h.maps_ = std::move(levels);
  if (!h.maps_.empty()) {
    std::set<std::string> top;
    for (const auto& [from, to] : h.maps_.back()) top.insert(to);
    h.roots_.assign(top.begin(), top.end());
  }
  return h;
}

GeneralizationHierarchy GeneralizationHierarchy::Mask(int max_level,
                                                      char mask_char) {
  GeneralizationHierarchy h;
  h.kind_ = HierarchyKind::kMask;
  h.max_level_ = max_level;
  h.mask_char_ = mask_char;
  return h;
}

const std::string* GeneralizationHierarchy::Root() const {
  return roots_.size() == 1 ? &roots_.front() : nullptr;
}

absl::StatusOr<std::string> GeneralizationHierarchy::Generalize(
    absl::string_view value, int level) const {
  if (level < 0 || level > max_level_) {
    return absl::InvalidArgumentError(
        absl::StrCat("generalization level ", level, " outside [0, ",
                     max_level_, "]"));
  }
  if (level == 0) return std::string(value);
  switch (kind_) {
    case HierarchyKind::kInterval:
      return GeneralizeInterval(value, level);
    case HierarchyKind::kCategory:
      return GeneralizeCategory(value, level);
    case HierarchyKind::kMask:
      return GeneralizeMask(value, level);
  }
  return absl::InternalError("unreachable hierarchy kind");
}

absl::StatusOr<std::string> GeneralizationHierarchy::GeneralizeInterval(
    absl::string_view value, int level) const {
  double x = 0;
  if (!ParseNumber(value, x)) {
    if (value == kMissingValue) {
      const std::string* root = Root();
      return level == max_level_ && root != nullptr ? *root
                                                    : std::string(value);
    }
    return absl::InvalidArgumentError(
        absl::StrCat("value '", value, "' is not numeric"));
  }
  for (const IntervalBin& bin : bins_[level - 1]) {
    if (x >= static_cast<double>(bin.lower) &&
        x <= static_cast<double>(bin.upper)) {
      return bin.label;
    }
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "value '", value, "' falls outside every bin of level ", level));
}

absl::StatusOr<std::string> GeneralizationHierarchy::GeneralizeCategory(
    absl::string_view value, int level) const {
  std::string current(value);
  for (int i = 0; i < level; ++i) {
    const auto& map = maps_[i];
    auto it = map.find(current);
    if (it == map.end()) it = map.find(std::string(value));
    if (it == map.end()) {
      if (value == kMissingValue) {
        const std::string* root = Root();
        return level == max_level_ && root != nullptr ? *root
                                                      : std::string(value);
      }
      return absl::InvalidArgumentError(absl::StrCat(
          "value '", current, "' missing from the level-", i + 1, " map"));
    }
    current = it->second;
  }
  return current;
}

std::string GeneralizationHierarchy::GeneralizeMask(absl::string_view value,
                                                    int level) const {
  if (value == kMissingValue) return std::string(value);
  std::string out(value);
  const size_t n = std::min(out.size(), static_cast<size_t>(level));
  std::fill(out.end() - static_cast<std::ptrdiff_t>(n), out.end(), mask_char_);
  return out;
}

std::string ValidationReport::ToString() const {
  if (ok()) return "ok";
  std::vector<std::string> lines;
  for (const HierarchyViolation& v : violations) {
    std::string line = absl::StrCat("level ", v.level, ": ", v.message);
    if (!v.values.empty()) {
      absl::StrAppend(&line, " [", absl::StrJoin(v.values, ", "), "]");
    }
    lines.push_back(std::move(line));
  }
  return absl::StrJoin(lines, "; ");
}

namespace {

void CheckIntervalStructure(const GeneralizationHierarchy& h,
                            std::vector<HierarchyViolation>& out) {
  const auto& levels = h.interval_levels();
  for (size_t i = 0; i < levels.size(); ++i) {
    const int level = static_cast<int>(i) + 1;
    const auto& bins = levels[i];
    if (bins.empty()) {
      out.push_back({level, "level has no bins", {}});
      continue;
    }
    std::set<std::string> labels;
    for (size_t b = 0; b < bins.size(); ++b) {
      const IntervalBin& bin = bins[b];
      if (bin.lower > bin.upper) {
        out.push_back({level, "bin lower bound exceeds upper bound",
                       {bin.label}});
      }
      if (!labels.insert(bin.label).second) {
        out.push_back({level, "duplicate bin label", {bin.label}});
      }
      if (b == 0) continue;
      const IntervalBin& prev = bins[b - 1];
      if (bin.lower <= prev.upper) {
        out.push_back({level, "bins overlap or are out of order",
                       {prev.label, bin.label}});
      } else if (bin.lower != prev.upper + 1) {
        out.push_back({level, "gap between bins", {prev.label, bin.label}});
      }
    }
    if (i == 0) continue;
    for (const IntervalBin& inner : levels[i - 1]) {
      int containing = 0;
      for (const IntervalBin& outer : bins) {
        if (outer.lower <= inner.lower && inner.upper <= outer.upper) {
          ++containing;
        }
      }
      if (containing != 1) {
        out.push_back({level,
                       absl::StrCat("level-", level - 1,
                                    " bin is contained in ", containing,
                                    " bins of this level"),
                       {inner.label}});
      }
    }
  }
}

void CheckCategoryStructure(const GeneralizationHierarchy& h,
                            std::vector<HierarchyViolation>& out) {
  const auto& maps = h.category_levels();
  for (size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].empty()) {
      out.push_back({static_cast<int>(i) + 1, "level map is empty", {}});
    }
  }
}

}  // namespace

ValidationReport ValidateHierarchy(const GeneralizationHierarchy& hierarchy,
                                   std::span<const std::string> domain_sample) {
  ValidationReport report;
  auto& out = report.violations;
  if (hierarchy.max_level() < 1) {
    out.push_back({hierarchy.max_level(), "max_level must be at least 1", {}});
    return report;
  }

  std::set<std::string> domain(domain_sample.begin(), domain_sample.end());
  switch (hierarchy.kind()) {
    case HierarchyKind::kInterval:
      CheckIntervalStructure(hierarchy, out);
      break;
    case HierarchyKind::kCategory:
      CheckCategoryStructure(hierarchy, out);
      if (!hierarchy.category_levels().front().empty()) {
        // Raw values named by the first map belong to the domain too.
        for (const auto& [raw, coarse] : hierarchy.category_levels().front()) {
          domain.insert(raw);
        }
      }
      break;
    case HierarchyKind::kMask:
      for (const std::string& v : domain) {
        if (v != kMissingValue &&
            v.size() < static_cast<size_t>(hierarchy.max_level())) {
          out.push_back({hierarchy.max_level(),
                         absl::StrCat("value shorter than max_level ",
                                      hierarchy.max_level()),
                         {v}});
        }
      }
      break;
  }
  if (!out.empty()) return report;

  // Nesting: the map from level-l images to level-(l+1) images must be a
  // function; by induction that covers every pair of levels.
  std::vector<std::vector<std::string>> images;
  std::vector<std::string> values(domain.begin(), domain.end());
  images.reserve(values.size());
  for (const std::string& v : values) {
    std::vector<std::string> chain;
    chain.reserve(hierarchy.max_level() + 1);
    bool failed = false;
    for (int level = 0; level <= hierarchy.max_level(); ++level) {
      auto image = hierarchy.Generalize(v, level);
      if (!image.ok()) {
        out.push_back({level, std::string(image.status().message()), {v}});
        failed = true;
        break;
      }
      chain.push_back(*std::move(image));
    }
    if (!failed) images.push_back(std::move(chain));
  }
  for (int level = 1; level < hierarchy.max_level(); ++level) {
    absl::flat_hash_map<std::string, const std::vector<std::string>*> seen;
    for (const auto& chain : images) {
      auto [it, inserted] = seen.try_emplace(chain[level], &chain);
      if (!inserted && (*it->second)[level + 1] != chain[level + 1]) {
        out.push_back(
            {level + 1,
             absl::StrCat("nesting violated: values equal at level ", level,
                          " diverge at level ", level + 1),
             {(*it->second)[0], chain[0]}});
      }
    }
  }
  return report;
}

int GeneralizationVector::Sum() const {
  int sum = 0;
  for (int l : levels_) sum += l;
  return sum;
}

std::string GeneralizationVector::ToString() const {
  return absl::StrCat("<", absl::StrJoin(levels_, ","), ">");
}

std::string GeneralizationVector::ToString(
    std::span<const std::string> names) const {
  std::vector<std::string> parts;
  for (size_t i = 0; i < levels_.size(); ++i) {
    parts.push_back(absl::StrCat(i < names.size() ? names[i] : "q", "^",
                                 levels_[i]));
  }
  return absl::StrCat("<", absl::StrJoin(parts, ", "), ">");
}

std::vector<GeneralizationVector> Successors(const GeneralizationVector& vector,
                                             std::span<const int> max_levels) {
  std::vector<GeneralizationVector> out;
  for (size_t i = 0; i < vector.size() && i < max_levels.size(); ++i) {
    if (vector[i] >= max_levels[i]) continue;
    std::vector<int> next = vector.levels();
    ++next[i];
    out.emplace_back(std::move(next));
  }
  return out;
}

}  // namespace prgain
