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

// Minimal RFC 4180 reader and writer: comma delimiter, double-quote quoting,
// quoted fields may span lines. Unquoted fields are trimmed of surrounding
// blanks; quoted content is kept verbatim.

#ifndef PRGAIN_CSV_H_
#define PRGAIN_CSV_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace prgain {

using CsvRecord = std::vector<std::string>;

struct CsvDocument {
  CsvRecord header;
  std::vector<CsvRecord> records;
  // 1-based source line on which each record starts.
  std::vector<size_t> record_lines;
};

// Parses CSV text. Empty lines are skipped. The first record is the header.
absl::StatusOr<CsvDocument> ParseCsv(absl::string_view text);

// Reads and parses a file. I/O problems yield kUnavailable.
absl::StatusOr<CsvDocument> ReadCsvFile(const std::string& path);

// Quotes only when needed for the value to survive ParseCsv unchanged.
std::string EscapeCsvField(absl::string_view field);

std::string FormatCsvRecord(const CsvRecord& record);

// Writes text to `path`, truncating. I/O problems yield kUnavailable.
absl::Status WriteTextFile(const std::string& path, absl::string_view text);
absl::StatusOr<std::string> ReadTextFile(const std::string& path);

}  // namespace prgain

#endif  // PRGAIN_CSV_H_
