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

#include "prgain/table.h"

#include <algorithm>
#include <utility>

#include "absl/container/flat_hash_map.h"
#include "absl/container/flat_hash_set.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace prgain {

absl::string_view AttributeRoleName(AttributeRole role) {
  switch (role) {
    case AttributeRole::kIdentifier:
      return "identifier";
    case AttributeRole::kQuasiIdentifier:
      return "quasi_identifier";
    case AttributeRole::kSensitive:
      return "sensitive";
    case AttributeRole::kInsensitive:
      return "insensitive";
  }
  return "unknown";
}

absl::StatusOr<Table> Table::Create(std::vector<AttributeSchema> schema,
                                    std::vector<Tuple> rows) {
  absl::flat_hash_set<std::string> names;
  for (const AttributeSchema& attr : schema) {
    if (!names.insert(attr.name).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate column '", attr.name, "'"));
    }
    const bool is_qi = attr.role == AttributeRole::kQuasiIdentifier;
    if (is_qi != (attr.hierarchy != nullptr)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "column '", attr.name, "': a hierarchy is required exactly for "
                                 "quasi-identifiers"));
    }
  }
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != schema.size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("row ", r + 1, " has ", rows[r].size(),
                       " cells, expected ", schema.size()));
    }
  }
  return Table(std::move(schema), std::move(rows));
}

absl::StatusOr<Table> Table::FromHeader(std::vector<std::string> header,
                                        std::vector<Tuple> rows) {
  std::vector<AttributeSchema> schema;
  schema.reserve(header.size());
  for (std::string& name : header) {
    schema.push_back({std::move(name), AttributeRole::kInsensitive, nullptr});
  }
  return Create(std::move(schema), std::move(rows));
}

std::optional<size_t> Table::ColumnIndex(absl::string_view name) const {
  for (size_t i = 0; i < schema_.size(); ++i) {
    if (schema_[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<std::string> Table::ColumnNames() const {
  std::vector<std::string> names;
  names.reserve(schema_.size());
  for (const AttributeSchema& attr : schema_) names.push_back(attr.name);
  return names;
}

bool operator==(const Table& a, const Table& b) {
  if (a.rows_ != b.rows_ || a.schema_.size() != b.schema_.size()) return false;
  for (size_t i = 0; i < a.schema_.size(); ++i) {
    if (a.schema_[i].name != b.schema_[i].name ||
        a.schema_[i].role != b.schema_[i].role) {
      return false;
    }
  }
  return true;
}

absl::StatusOr<Table> TableFromCsv(CsvDocument document,
                                   std::span<const AttributeSchema> schema) {
  absl::flat_hash_map<absl::string_view, const AttributeSchema*> by_name;
  for (const AttributeSchema& attr : schema) by_name[attr.name] = &attr;

  std::vector<AttributeSchema> ordered;
  std::vector<std::string> unknown;
  for (const std::string& name : document.header) {
    auto it = by_name.find(name);
    if (it == by_name.end()) {
      unknown.push_back(name);
      continue;
    }
    ordered.push_back(*it->second);
  }
  if (!unknown.empty() || ordered.size() != schema.size()) {
    std::vector<std::string> missing;
    for (const AttributeSchema& attr : schema) {
      if (std::find(document.header.begin(), document.header.end(),
                    attr.name) == document.header.end()) {
        missing.push_back(attr.name);
      }
    }
    return absl::InvalidArgumentError(absl::StrCat(
        "CSV header does not match the schema; unexpected columns [",
        absl::StrJoin(unknown, ", "), "], missing columns [",
        absl::StrJoin(missing, ", "), "]"));
  }
  for (size_t r = 0; r < document.records.size(); ++r) {
    if (document.records[r].size() != ordered.size()) {
      const size_t line =
          r < document.record_lines.size() ? document.record_lines[r] : 0;
      return absl::InvalidArgumentError(absl::StrCat(
          "row ", r + 1, " (line ", line, ") has ", document.records[r].size(),
          " cells, expected ", ordered.size()));
    }
  }
  return Table::Create(std::move(ordered), std::move(document.records));
}

absl::StatusOr<Table> LoadTable(const std::string& csv_path,
                                std::span<const AttributeSchema> schema) {
  absl::StatusOr<CsvDocument> doc = ReadCsvFile(csv_path);
  if (!doc.ok()) return doc.status();
  absl::StatusOr<Table> table = TableFromCsv(*std::move(doc), schema);
  if (!table.ok()) {
    return absl::Status(table.status().code(),
                        absl::StrCat(csv_path, ": ", table.status().message()));
  }
  return table;
}

absl::StatusOr<Table> LoadRawTable(const std::string& csv_path) {
  absl::StatusOr<CsvDocument> doc = ReadCsvFile(csv_path);
  if (!doc.ok()) return doc.status();
  std::vector<AttributeSchema> schema;
  for (const std::string& name : doc->header) {
    schema.push_back({name, AttributeRole::kInsensitive, nullptr});
  }
  return LoadTable(csv_path, schema);
}

Table DropIdentifiers(const Table& table) {
  std::vector<size_t> keep;
  std::vector<AttributeSchema> schema;
  for (size_t i = 0; i < table.num_columns(); ++i) {
    if (table.schema()[i].role == AttributeRole::kIdentifier) continue;
    keep.push_back(i);
    schema.push_back(table.schema()[i]);
  }
  std::vector<Tuple> rows;
  rows.reserve(table.num_rows());
  for (const Tuple& row : table.rows()) {
    Tuple out;
    out.reserve(keep.size());
    for (size_t i : keep) out.push_back(row[i]);
    rows.push_back(std::move(out));
  }
  // The source table already satisfied every invariant.
  return *Table::Create(std::move(schema), std::move(rows));
}

std::string FormatTableCsv(const Table& table) {
  std::string text = FormatCsvRecord(table.ColumnNames());
  for (const Tuple& row : table.rows()) text += FormatCsvRecord(row);
  return text;
}

absl::Status WriteTable(const Table& table, const std::string& csv_path) {
  return WriteTextFile(csv_path, FormatTableCsv(table));
}

absl::StatusOr<std::vector<QuasiIdentifier>> ResolveQuasiIdentifiers(
    const Table& table, std::span<const std::string> names) {
  std::vector<QuasiIdentifier> qis;
  if (names.empty()) {
    for (size_t i = 0; i < table.num_columns(); ++i) {
      const AttributeSchema& attr = table.schema()[i];
      if (attr.role == AttributeRole::kQuasiIdentifier) {
        qis.push_back({attr.name, i, attr.hierarchy});
      }
    }
    return qis;
  }
  for (const std::string& name : names) {
    std::optional<size_t> column = table.ColumnIndex(name);
    if (!column.has_value()) {
      return absl::InvalidArgumentError(
          absl::StrCat("quasi-identifier '", name, "' is not a column"));
    }
    const AttributeSchema& attr = table.schema()[*column];
    if (attr.role != AttributeRole::kQuasiIdentifier) {
      return absl::InvalidArgumentError(absl::StrCat(
          "column '", name, "' is not marked as a quasi-identifier"));
    }
    qis.push_back({attr.name, *column, attr.hierarchy});
  }
  return qis;
}

std::vector<int> MaxLevels(std::span<const QuasiIdentifier> qis) {
  std::vector<int> levels;
  levels.reserve(qis.size());
  for (const QuasiIdentifier& qi : qis) {
    levels.push_back(qi.hierarchy->max_level());
  }
  return levels;
}

}  // namespace prgain
