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

#include "prgain/config.h"

#include <limits>
#include <map>
#include <set>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "prgain/csv.h"

namespace prgain {
namespace {

using json = nlohmann::json;

absl::Status SchemaError(const std::string& pointer, absl::string_view what) {
  return absl::InvalidArgumentError(
      absl::StrCat(pointer.empty() ? "/" : pointer, ": ", what));
}

absl::Status CheckKeys(const json& object, const std::string& pointer,
                       std::initializer_list<absl::string_view> allowed) {
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (absl::string_view a : allowed) known = known || key == a;
    if (!known) {
      return SchemaError(absl::StrCat(pointer, "/", key), "unknown key");
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<int64_t> GetInt(const json& object, const std::string& key,
                               const std::string& pointer) {
  const std::string at = absl::StrCat(pointer, "/", key);
  if (!object.contains(key)) return SchemaError(at, "required");
  const json& v = object.at(key);
  if (!v.is_number_integer()) return SchemaError(at, "expected an integer");
  return v.get<int64_t>();
}

absl::StatusOr<std::string> GetString(const json& v,
                                      const std::string& pointer) {
  if (!v.is_string()) return SchemaError(pointer, "expected a string");
  return v.get<std::string>();
}

absl::StatusOr<std::vector<std::string>> GetNameList(
    const json& object, const std::string& key, const std::string& pointer) {
  std::vector<std::string> names;
  if (!object.contains(key)) return names;
  const std::string at = absl::StrCat(pointer, "/", key);
  const json& list = object.at(key);
  if (!list.is_array()) return SchemaError(at, "expected an array");
  for (size_t i = 0; i < list.size(); ++i) {
    auto name = GetString(list[i], absl::StrCat(at, "/", i));
    if (!name.ok()) return name.status();
    names.push_back(*std::move(name));
  }
  return names;
}

}  // namespace

std::vector<std::string> RunConfig::QuasiIdentifierNames() const {
  std::vector<std::string> names;
  for (const QuasiIdentifierConfig& qi : quasi_identifiers) {
    names.push_back(qi.name);
  }
  return names;
}

std::vector<std::pair<std::string,
                      std::shared_ptr<const GeneralizationHierarchy>>>
RunConfig::Hierarchies() const {
  std::vector<std::pair<std::string,
                        std::shared_ptr<const GeneralizationHierarchy>>>
      out;
  for (const QuasiIdentifierConfig& qi : quasi_identifiers) {
    out.emplace_back(qi.name, qi.hierarchy);
  }
  return out;
}

absl::StatusOr<GeneralizationHierarchy> ParseHierarchy(
    const json& spec, const std::string& pointer) {
  if (!spec.is_object()) return SchemaError(pointer, "expected an object");
  if (!spec.contains("kind")) {
    return SchemaError(absl::StrCat(pointer, "/kind"), "required");
  }
  auto kind = GetString(spec.at("kind"), absl::StrCat(pointer, "/kind"));
  if (!kind.ok()) return kind.status();

  if (*kind == "mask") {
    if (auto s = CheckKeys(spec, pointer, {"kind", "mask_char", "max_level"});
        !s.ok()) {
      return s;
    }
    auto max_level = GetInt(spec, "max_level", pointer);
    if (!max_level.ok()) return max_level.status();
    if (*max_level < 1 || *max_level > std::numeric_limits<int>::max()) {
      return SchemaError(absl::StrCat(pointer, "/max_level"),
                         "must be at least 1");
    }
    char mask_char = '*';
    if (spec.contains("mask_char")) {
      const std::string at = absl::StrCat(pointer, "/mask_char");
      auto c = GetString(spec.at("mask_char"), at);
      if (!c.ok()) return c.status();
      if (c->size() != 1) return SchemaError(at, "must be one character");
      mask_char = c->front();
    }
    return GeneralizationHierarchy::Mask(static_cast<int>(*max_level),
                                         mask_char);
  }

  if (*kind != "interval" && *kind != "category") {
    return SchemaError(absl::StrCat(pointer, "/kind"),
                       absl::StrCat("unknown hierarchy kind '", *kind, "'"));
  }
  if (auto s = CheckKeys(spec, pointer, {"kind", "levels"}); !s.ok()) return s;
  const std::string levels_at = absl::StrCat(pointer, "/levels");
  if (!spec.contains("levels")) return SchemaError(levels_at, "required");
  const json& levels = spec.at("levels");
  if (!levels.is_array() || levels.empty()) {
    return SchemaError(levels_at, "expected a non-empty array");
  }

  if (*kind == "interval") {
    std::vector<std::vector<IntervalBin>> bins(levels.size());
    for (size_t l = 0; l < levels.size(); ++l) {
      const std::string level_at = absl::StrCat(levels_at, "/", l);
      if (!levels[l].is_array()) {
        return SchemaError(level_at, "expected an array of bins");
      }
      for (size_t b = 0; b < levels[l].size(); ++b) {
        const std::string bin_at = absl::StrCat(level_at, "/", b);
        const json& bin = levels[l][b];
        if (!bin.is_object()) return SchemaError(bin_at, "expected an object");
        if (auto s = CheckKeys(bin, bin_at, {"lo", "hi", "label"}); !s.ok()) {
          return s;
        }
        auto lo = GetInt(bin, "lo", bin_at);
        if (!lo.ok()) return lo.status();
        auto hi = GetInt(bin, "hi", bin_at);
        if (!hi.ok()) return hi.status();
        if (!bin.contains("label")) {
          return SchemaError(absl::StrCat(bin_at, "/label"), "required");
        }
        auto label =
            GetString(bin.at("label"), absl::StrCat(bin_at, "/label"));
        if (!label.ok()) return label.status();
        bins[l].push_back({*lo, *hi, *std::move(label)});
      }
    }
    return GeneralizationHierarchy::Interval(std::move(bins));
  }

  std::vector<std::map<std::string, std::string>> maps(levels.size());
  for (size_t l = 0; l < levels.size(); ++l) {
    const std::string level_at = absl::StrCat(levels_at, "/", l);
    if (!levels[l].is_object()) {
      return SchemaError(level_at, "expected an object of value mappings");
    }
    for (const auto& [from, to] : levels[l].items()) {
      auto coarse = GetString(to, absl::StrCat(level_at, "/", from));
      if (!coarse.ok()) return coarse.status();
      maps[l][from] = *std::move(coarse);
    }
  }
  return GeneralizationHierarchy::Category(std::move(maps));
}

json HierarchyToJson(const GeneralizationHierarchy& h) {
  json out;
  out["kind"] = std::string(HierarchyKindName(h.kind()));
  switch (h.kind()) {
    case HierarchyKind::kMask:
      out["mask_char"] = std::string(1, h.mask_char());
      out["max_level"] = h.max_level();
      break;
    case HierarchyKind::kInterval: {
      json levels = json::array();
      for (const auto& level : h.interval_levels()) {
        json bins = json::array();
        for (const IntervalBin& bin : level) {
          bins.push_back({{"lo", bin.lower}, {"hi", bin.upper},
                          {"label", bin.label}});
        }
        levels.push_back(std::move(bins));
      }
      out["levels"] = std::move(levels);
      break;
    }
    case HierarchyKind::kCategory: {
      json levels = json::array();
      for (const auto& map : h.category_levels()) {
        json m = json::object();
        for (const auto& [from, to] : map) m[from] = to;
        levels.push_back(std::move(m));
      }
      out["levels"] = std::move(levels);
      break;
    }
  }
  return out;
}

absl::StatusOr<RunConfig> ParseConfigJson(absl::string_view text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    return absl::InvalidArgumentError("config is not well-formed JSON");
  }
  if (!doc.is_object()) return SchemaError("", "expected an object");
  if (auto s = CheckKeys(doc, "",
                         {"k", "quasi_identifiers", "sensitive", "identifiers",
                          "residual_policy", "max_branches", "class_attr",
                          "description"});
      !s.ok()) {
    return s;
  }

  RunConfig config;
  auto k = GetInt(doc, "k", "");
  if (!k.ok()) return k.status();
  if (*k < 2 || *k > std::numeric_limits<int>::max()) {
    return SchemaError("/k", absl::StrCat("k must be at least 2, got ", *k));
  }
  config.k = static_cast<int>(*k);

  if (!doc.contains("quasi_identifiers")) {
    return SchemaError("/quasi_identifiers", "required");
  }
  const json& qis = doc.at("quasi_identifiers");
  if (!qis.is_array() || qis.empty()) {
    return SchemaError("/quasi_identifiers", "expected a non-empty array");
  }
  for (size_t i = 0; i < qis.size(); ++i) {
    const std::string at = absl::StrCat("/quasi_identifiers/", i);
    const json& entry = qis[i];
    if (!entry.is_object()) return SchemaError(at, "expected an object");
    if (auto s = CheckKeys(entry, at, {"name", "hierarchy"}); !s.ok()) return s;
    if (!entry.contains("name")) {
      return SchemaError(absl::StrCat(at, "/name"), "required");
    }
    auto name = GetString(entry.at("name"), absl::StrCat(at, "/name"));
    if (!name.ok()) return name.status();
    const std::string h_at = absl::StrCat(at, "/hierarchy");
    if (!entry.contains("hierarchy")) return SchemaError(h_at, "required");
    auto h = ParseHierarchy(entry.at("hierarchy"), h_at);
    if (!h.ok()) return h.status();
    ValidationReport report = ValidateHierarchy(*h, {});
    if (!report.ok()) return SchemaError(h_at, report.ToString());
    config.quasi_identifiers.push_back(
        {*std::move(name),
         std::make_shared<const GeneralizationHierarchy>(*std::move(h))});
  }

  auto sensitive = GetNameList(doc, "sensitive", "");
  if (!sensitive.ok()) return sensitive.status();
  config.sensitive = *std::move(sensitive);
  if (config.sensitive.empty()) {
    return SchemaError("/sensitive", "at least one sensitive attribute");
  }
  auto identifiers = GetNameList(doc, "identifiers", "");
  if (!identifiers.ok()) return identifiers.status();
  config.identifiers = *std::move(identifiers);

  if (doc.contains("residual_policy")) {
    auto name = GetString(doc.at("residual_policy"), "/residual_policy");
    if (!name.ok()) return name.status();
    auto policy = ParseResidualPolicy(*name);
    if (!policy.ok()) {
      return SchemaError("/residual_policy", policy.status().message());
    }
    config.residual_policy = *policy;
  }
  if (doc.contains("max_branches")) {
    auto cap = GetInt(doc, "max_branches", "");
    if (!cap.ok()) return cap.status();
    if (*cap < 0 || *cap > std::numeric_limits<int>::max()) {
      return SchemaError("/max_branches", "must be >= 0 (0 = unlimited)");
    }
    config.max_branches = static_cast<int>(*cap);
  }
  if (doc.contains("class_attr")) {
    auto name = GetString(doc.at("class_attr"), "/class_attr");
    if (!name.ok()) return name.status();
    config.class_attr = *std::move(name);
  }

  // Role lists must not overlap.
  std::map<std::string, std::string> seen;
  auto claim = [&](const std::string& name,
                   const std::string& where) -> absl::Status {
    auto [it, inserted] = seen.try_emplace(name, where);
    if (!inserted) {
      return SchemaError(where, absl::StrCat("attribute '", name,
                                             "' already listed at ",
                                             it->second));
    }
    return absl::OkStatus();
  };
  for (size_t i = 0; i < config.quasi_identifiers.size(); ++i) {
    if (auto s = claim(config.quasi_identifiers[i].name,
                       absl::StrCat("/quasi_identifiers/", i, "/name"));
        !s.ok()) {
      return s;
    }
  }
  for (size_t i = 0; i < config.sensitive.size(); ++i) {
    if (auto s = claim(config.sensitive[i], absl::StrCat("/sensitive/", i));
        !s.ok()) {
      return s;
    }
  }
  for (size_t i = 0; i < config.identifiers.size(); ++i) {
    if (auto s = claim(config.identifiers[i], absl::StrCat("/identifiers/", i));
        !s.ok()) {
      return s;
    }
  }
  return config;
}

absl::StatusOr<RunConfig> ParseConfig(const std::string& path) {
  absl::StatusOr<std::string> text = ReadTextFile(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<RunConfig> config = ParseConfigJson(*text);
  if (!config.ok()) {
    return absl::Status(config.status().code(),
                        absl::StrCat(path, ": ", config.status().message()));
  }
  return config;
}

absl::StatusOr<Table> ApplyConfig(const Table& raw, const RunConfig& config,
                                  bool require_identifiers) {
  std::vector<AttributeSchema> schema = raw.schema();
  auto assign = [&](const std::string& name, AttributeRole role,
                    std::shared_ptr<const GeneralizationHierarchy> h,
                    bool required) -> absl::Status {
    std::optional<size_t> column = raw.ColumnIndex(name);
    if (!column.has_value()) {
      if (!required) return absl::OkStatus();
      return absl::InvalidArgumentError(absl::StrCat(
          "config names column '", name, "' which is absent from the CSV "
                                         "header [",
          absl::StrJoin(raw.ColumnNames(), ", "), "]"));
    }
    schema[*column].role = role;
    schema[*column].hierarchy = std::move(h);
    return absl::OkStatus();
  };
  for (const QuasiIdentifierConfig& qi : config.quasi_identifiers) {
    if (auto s = assign(qi.name, AttributeRole::kQuasiIdentifier, qi.hierarchy,
                        true);
        !s.ok()) {
      return s;
    }
  }
  for (const std::string& name : config.sensitive) {
    if (auto s = assign(name, AttributeRole::kSensitive, nullptr, true);
        !s.ok()) {
      return s;
    }
  }
  for (const std::string& name : config.identifiers) {
    if (auto s = assign(name, AttributeRole::kIdentifier, nullptr,
                        require_identifiers);
        !s.ok()) {
      return s;
    }
  }
  return Table::Create(std::move(schema), raw.rows());
}

}  // namespace prgain
