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

#include "prgain/csv.h"

#include <fstream>
#include <sstream>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"

namespace prgain {
namespace {

bool IsBlank(char c) { return c == ' ' || c == '\t'; }

}  // namespace

absl::StatusOr<CsvDocument> ParseCsv(absl::string_view text) {
  // Skip a UTF-8 byte order mark.
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::vector<CsvRecord> records;
  CsvRecord record;
  std::string field;
  bool quoted = false;       // the current field had a quoted section
  bool in_quotes = false;    // currently inside quotes
  bool after_quote = false;  // closing quote seen, only blanks may follow
  bool line_has_content = false;
  size_t line = 1;
  size_t quote_line = 0;
  size_t record_line = 1;
  std::vector<size_t> lines;

  auto finish_field = [&]() {
    if (!quoted) {
      field = std::string(absl::StripAsciiWhitespace(field));
    }
    record.push_back(std::move(field));
    field.clear();
    quoted = in_quotes = after_quote = false;
  };
  auto finish_record = [&]() {
    if (line_has_content) {
      finish_field();
      records.push_back(std::move(record));
      lines.push_back(record_line);
    }
    record.clear();
    field.clear();
    quoted = in_quotes = after_quote = false;
    line_has_content = false;
  };

  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
          after_quote = true;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') continue;
    if (c == '\n' || c == '\r') {
      finish_record();
      ++line;
      continue;
    }
    if (!line_has_content) record_line = line;
    line_has_content = true;
    if (c == ',') {
      finish_field();
      continue;
    }
    if (after_quote) {
      if (IsBlank(c)) continue;
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line, ": unexpected character after quoted "
                                      "field"));
    }
    if (c == '"') {
      if (!absl::StripAsciiWhitespace(field).empty()) {
        return absl::InvalidArgumentError(
            absl::StrCat("line ", line, ": quote inside unquoted field"));
      }
      field.clear();
      quoted = in_quotes = true;
      quote_line = line;
      continue;
    }
    field.push_back(c);
  }
  if (in_quotes) {
    return absl::InvalidArgumentError(
        absl::StrCat("line ", quote_line, ": unterminated quoted field"));
  }
  finish_record();

  CsvDocument doc;
  if (records.empty()) {
    return absl::InvalidArgumentError("CSV input has no header row");
  }
  doc.header = std::move(records.front());
  doc.records.assign(std::make_move_iterator(records.begin() + 1),
                     std::make_move_iterator(records.end()));
  doc.record_lines.assign(lines.begin() + 1, lines.end());
  return doc;
}

absl::StatusOr<std::string> ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::UnavailableError(absl::StrCat("cannot open '", path, "'"));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    return absl::UnavailableError(absl::StrCat("error reading '", path, "'"));
  }
  return std::move(buffer).str();
}

absl::StatusOr<CsvDocument> ReadCsvFile(const std::string& path) {
  absl::StatusOr<std::string> text = ReadTextFile(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<CsvDocument> doc = ParseCsv(*text);
  if (!doc.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path, ": ", doc.status().message()));
  }
  return doc;
}

std::string EscapeCsvField(absl::string_view field) {
  bool needs_quotes = field.empty() || absl::ascii_isspace(field.front()) ||
                      absl::ascii_isspace(field.back());
  for (char c : field) {
    if (c == ',' || c == '"' || c == '\n' || c == '\r') {
      needs_quotes = true;
      break;
    }
  }
  if (!needs_quotes) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string FormatCsvRecord(const CsvRecord& record) {
  std::string line;
  for (size_t i = 0; i < record.size(); ++i) {
    if (i > 0) line.push_back(',');
    // Empty fields only need quoting when they would otherwise form a blank
    // line, which the reader skips.
    if (record[i].empty() && record.size() > 1) continue;
    line += EscapeCsvField(record[i]);
  }
  line.push_back('\n');
  return line;
}

absl::Status WriteTextFile(const std::string& path, absl::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::UnavailableError(
        absl::StrCat("cannot open '", path, "' for writing"));
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) {
    return absl::UnavailableError(absl::StrCat("error writing '", path, "'"));
  }
  return absl::OkStatus();
}

}  // namespace prgain
