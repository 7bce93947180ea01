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

#ifndef PRGAIN_TABLE_H_
#define PRGAIN_TABLE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "prgain/csv.h"
#include "prgain/hierarchy.h"

namespace prgain {

// Positional id of a row in the loaded file, 0-based.
using TupleId = uint32_t;

enum class AttributeRole {
  kIdentifier,
  kQuasiIdentifier,
  kSensitive,
  kInsensitive,
};

absl::string_view AttributeRoleName(AttributeRole role);

struct AttributeSchema {
  std::string name;
  AttributeRole role = AttributeRole::kInsensitive;
  // Present iff role == kQuasiIdentifier.
  std::shared_ptr<const GeneralizationHierarchy> hierarchy;
};

using Tuple = std::vector<std::string>;

// Immutable string table. Every row has one cell per schema column.
class Table {
 public:
  static absl::StatusOr<Table> Create(std::vector<AttributeSchema> schema,
                                      std::vector<Tuple> rows);

  // Every column insensitive, named after `header`.
  static absl::StatusOr<Table> FromHeader(std::vector<std::string> header,
                                          std::vector<Tuple> rows);

  Table() = default;

  const std::vector<AttributeSchema>& schema() const { return schema_; }
  const std::vector<Tuple>& rows() const { return rows_; }
  size_t num_rows() const { return rows_.size(); }
  size_t num_columns() const { return schema_.size(); }
  const std::string& cell(TupleId row, size_t column) const {
    return rows_[row][column];
  }

  std::optional<size_t> ColumnIndex(absl::string_view name) const;
  std::vector<std::string> ColumnNames() const;

  friend bool operator==(const Table& a, const Table& b);

 private:
  Table(std::vector<AttributeSchema> schema, std::vector<Tuple> rows)
      : schema_(std::move(schema)), rows_(std::move(rows)) {}

  std::vector<AttributeSchema> schema_;
  std::vector<Tuple> rows_;
};

// Builds a table from parsed CSV. Header names must match `schema` names as a
// set; the table keeps the file's column order.
absl::StatusOr<Table> TableFromCsv(CsvDocument document,
                                   std::span<const AttributeSchema> schema);

absl::StatusOr<Table> LoadTable(const std::string& csv_path,
                                std::span<const AttributeSchema> schema);

// Loads with every column marked insensitive.
absl::StatusOr<Table> LoadRawTable(const std::string& csv_path);

Table DropIdentifiers(const Table& table);

std::string FormatTableCsv(const Table& table);
absl::Status WriteTable(const Table& table, const std::string& csv_path);

// A quasi-identifier column in declaration order, with its hierarchy.
struct QuasiIdentifier {
  std::string name;
  size_t column = 0;
  std::shared_ptr<const GeneralizationHierarchy> hierarchy;
};

// Quasi-identifiers of `table` in the order of `names`, or in schema order
// when `names` is empty.
absl::StatusOr<std::vector<QuasiIdentifier>> ResolveQuasiIdentifiers(
    const Table& table, std::span<const std::string> names = {});

std::vector<int> MaxLevels(std::span<const QuasiIdentifier> qis);

}  // namespace prgain

#endif  // PRGAIN_TABLE_H_
