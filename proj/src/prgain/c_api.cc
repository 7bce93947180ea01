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

#include "prgain/prgain.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <string>
#include <utility>

#include "absl/status/status.h"
#include "prgain/anonymizer.h"
#include "prgain/classifier.h"
#include "prgain/config.h"
#include "prgain/metrics.h"
#include "prgain/report.h"
#include "prgain/table.h"

struct prg_config {
  prgain::RunConfig config;
};

struct prg_table {
  prgain::Table table;
};

struct prg_result {
  prgain::Table source;
  std::vector<prgain::QuasiIdentifier> qis;
  prgain::AnonymizationResult result;
  prgain::MetricsReport metrics;
  prgain::ReportOptions report_options;
};

namespace {

thread_local std::string last_error;

prg_status Fail(prg_status code, std::string message) {
  last_error = std::move(message);
  return code;
}

prg_status FromStatus(const absl::Status& status) {
  if (status.ok()) {
    last_error.clear();
    return PRG_OK;
  }
  prg_status code = PRG_ERR_INTERNAL;
  switch (status.code()) {
    case absl::StatusCode::kInvalidArgument:
    case absl::StatusCode::kNotFound:
    case absl::StatusCode::kOutOfRange:
      code = PRG_ERR_INVALID;
      break;
    case absl::StatusCode::kFailedPrecondition:
      code = PRG_ERR_IMPOSSIBLE;
      break;
    case absl::StatusCode::kUnavailable:
      code = PRG_ERR_IO;
      break;
    default:
      break;
  }
  return Fail(code, std::string(status.message()));
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs `body`, converting escaping exceptions into PRG_ERR_INTERNAL.
template <typename F>
prg_status Guard(F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return Fail(PRG_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(PRG_ERR_INTERNAL, "unknown error");
  }
}

}  // namespace

extern "C" {

const char* prg_version(void) { return "0.1.0"; }

const char* prg_last_error(void) { return last_error.c_str(); }

void prg_string_free(char* s) { std::free(s); }

prg_status prg_config_load(const char* json_path, prg_config** out) {
  if (json_path == nullptr || out == nullptr) {
    return Fail(PRG_ERR_INVALID, "null argument");
  }
  return Guard([&] {
    absl::StatusOr<prgain::RunConfig> config = prgain::ParseConfig(json_path);
    if (!config.ok()) return FromStatus(config.status());
    *out = new prg_config{*std::move(config)};
    return FromStatus(absl::OkStatus());
  });
}

prg_status prg_config_parse(const char* json_text, prg_config** out) {
  if (json_text == nullptr || out == nullptr) {
    return Fail(PRG_ERR_INVALID, "null argument");
  }
  return Guard([&] {
    absl::StatusOr<prgain::RunConfig> config =
        prgain::ParseConfigJson(json_text);
    if (!config.ok()) return FromStatus(config.status());
    *out = new prg_config{*std::move(config)};
    return FromStatus(absl::OkStatus());
  });
}

void prg_config_free(prg_config* config) { delete config; }

int prg_config_k(const prg_config* config) {
  return config == nullptr ? 0 : config->config.k;
}

size_t prg_config_num_quasi_identifiers(const prg_config* config) {
  return config == nullptr ? 0 : config->config.quasi_identifiers.size();
}

const char* prg_config_class_attr(const prg_config* config) {
  if (config == nullptr || !config->config.class_attr.has_value()) {
    return nullptr;
  }
  return config->config.class_attr->c_str();
}

prg_status prg_table_load(const char* csv_path, prg_table** out) {
  if (csv_path == nullptr || out == nullptr) {
    return Fail(PRG_ERR_INVALID, "null argument");
  }
  return Guard([&] {
    absl::StatusOr<prgain::Table> table = prgain::LoadRawTable(csv_path);
    if (!table.ok()) return FromStatus(table.status());
    *out = new prg_table{*std::move(table)};
    return FromStatus(absl::OkStatus());
  });
}

void prg_table_free(prg_table* table) { delete table; }

size_t prg_table_num_rows(const prg_table* table) {
  return table == nullptr ? 0 : table->table.num_rows();
}

size_t prg_table_num_columns(const prg_table* table) {
  return table == nullptr ? 0 : table->table.num_columns();
}

prg_status prg_table_write(const prg_table* table, const char* csv_path) {
  if (table == nullptr || csv_path == nullptr) {
    return Fail(PRG_ERR_INVALID, "null argument");
  }
  return Guard(
      [&] { return FromStatus(prgain::WriteTable(table->table, csv_path)); });
}

void prg_anonymize_options_init(prg_anonymize_options* options) {
  if (options == nullptr) return;
  options->k = 0;
  options->residual_policy = PRG_RESIDUAL_FROM_CONFIG;
  options->max_branches = -1;
  options->record_all_branches = 0;
  options->record_timing = 1;
}

prg_status prg_anonymize(const prg_table* table, const prg_config* config,
                         const prg_anonymize_options* options,
                         prg_result** out) {
  if (table == nullptr || config == nullptr || out == nullptr) {
    return Fail(PRG_ERR_INVALID, "null argument");
  }
  prg_anonymize_options opts;
  prg_anonymize_options_init(&opts);
  if (options != nullptr) opts = *options;

  return Guard([&] {
    const prgain::RunConfig& cfg = config->config;
    const int k = opts.k > 0 ? opts.k : cfg.k;

    prgain::SearchOptions search;
    search.max_branches =
        opts.max_branches >= 0 ? opts.max_branches : cfg.max_branches;
    switch (opts.residual_policy) {
      case PRG_RESIDUAL_FROM_CONFIG:
        search.residual_policy = cfg.residual_policy;
        break;
      case PRG_RESIDUAL_DROP:
        search.residual_policy = prgain::ResidualPolicy::kDrop;
        break;
      case PRG_RESIDUAL_KEEP:
        search.residual_policy = prgain::ResidualPolicy::kKeep;
        break;
      case PRG_RESIDUAL_SUPPRESS:
        search.residual_policy = prgain::ResidualPolicy::kSuppress;
        break;
      default:
        return Fail(PRG_ERR_INVALID, "unknown residual policy");
    }
    search.record_all_branches = opts.record_all_branches != 0;

    absl::StatusOr<prgain::Table> with_roles =
        prgain::ApplyConfig(table->table, cfg);
    if (!with_roles.ok()) return FromStatus(with_roles.status());
    prgain::Table source = prgain::DropIdentifiers(*with_roles);
    const std::vector<std::string> names = cfg.QuasiIdentifierNames();
    absl::StatusOr<std::vector<prgain::QuasiIdentifier>> qis =
        prgain::ResolveQuasiIdentifiers(source, names);
    if (!qis.ok()) return FromStatus(qis.status());

    const auto start = std::chrono::steady_clock::now();
    absl::StatusOr<prgain::AnonymizationResult> result =
        prgain::Anonymize(source, *qis, k, search);
    const auto stop = std::chrono::steady_clock::now();
    if (!result.ok()) return FromStatus(result.status());

    std::chrono::duration<double, std::milli> elapsed = stop - start;
    if (opts.record_timing == 0) elapsed = elapsed.zero();

    auto handle = std::make_unique<prg_result>();
    handle->metrics = prgain::Summarize(*result, elapsed);
    handle->report_options.include_all_branches = search.record_all_branches;
    handle->report_options.max_branches = search.max_branches;
    handle->source = std::move(source);
    handle->qis = *std::move(qis);
    handle->result = *std::move(result);
    *out = handle.release();
    return FromStatus(absl::OkStatus());
  });
}

void prg_result_free(prg_result* result) { delete result; }

double prg_result_privacy_achieved(const prg_result* result) {
  return result == nullptr ? 0 : result->metrics.privacy_achieved;
}

size_t prg_result_residual_count(const prg_result* result) {
  return result == nullptr ? 0 : result->metrics.residual_count;
}

prg_status prg_result_write_csv(const prg_result* result,
                                const char* csv_path) {
  if (result == nullptr || csv_path == nullptr) {
    return Fail(PRG_ERR_INVALID, "null argument");
  }
  return Guard([&] {
    prgain::Table released = prgain::BuildAnonymizedTable(
        result->source, result->qis, result->result);
    return FromStatus(prgain::WriteTable(released, csv_path));
  });
}

prg_status prg_result_report_json(const prg_result* result, char** out_json) {
  if (result == nullptr || out_json == nullptr) {
    return Fail(PRG_ERR_INVALID, "null argument");
  }
  return Guard([&] {
    *out_json = CopyString(prgain::DumpJson(prgain::AnonymizationReportJson(
        result->result, result->metrics, result->report_options)));
    return FromStatus(absl::OkStatus());
  });
}

prg_status prg_verify(const prg_table* table, const prg_config* config, int k,
                      char** out_json) {
  if (table == nullptr || config == nullptr) {
    return Fail(PRG_ERR_INVALID, "null argument");
  }
  return Guard([&] {
    const int target = k > 0 ? k : config->config.k;
    if (target < 1) return Fail(PRG_ERR_INVALID, "k must be positive");
    std::vector<size_t> columns;
    for (const std::string& name : config->config.QuasiIdentifierNames()) {
      std::optional<size_t> c = table->table.ColumnIndex(name);
      if (!c.has_value()) {
        return Fail(PRG_ERR_INVALID, "quasi-identifier '" + name +
                                         "' is absent from the CSV header");
      }
      columns.push_back(*c);
    }
    prgain::KAnonymityReport report =
        prgain::VerifyKAnonymity(table->table, columns, target);
    if (out_json != nullptr) {
      *out_json = CopyString(prgain::DumpJson(
          prgain::KAnonymityReportJson(report, table->table.num_rows())));
    }
    if (report.passed()) return FromStatus(absl::OkStatus());
    return Fail(PRG_ERR_VERIFY_FAILED,
                std::to_string(report.offending.size()) +
                    " equivalence class(es) smaller than k");
  });
}

prg_status prg_evaluate(const prg_table* original, const prg_table* anonymized,
                        const char* class_attr, double split, uint64_t seed,
                        double alpha, const prg_config* binning_config,
                        int record_timing, char** out_json) {
  if (original == nullptr || anonymized == nullptr || class_attr == nullptr ||
      out_json == nullptr) {
    return Fail(PRG_ERR_INVALID, "null argument");
  }
  return Guard([&] {
    const prgain::Table* lhs = &original->table;
    const prgain::Table* rhs = &anonymized->table;
    prgain::Table binned_lhs, binned_rhs;
    if (binning_config != nullptr) {
      const auto hierarchies = binning_config->config.Hierarchies();
      binned_lhs = prgain::BinIntervalColumns(*lhs, hierarchies);
      binned_rhs = prgain::BinIntervalColumns(*rhs, hierarchies);
      lhs = &binned_lhs;
      rhs = &binned_rhs;
    }
    absl::StatusOr<prgain::UtilityReport> report =
        prgain::CompareUtility(*lhs, *rhs, class_attr, split, seed, alpha);
    if (!report.ok()) return FromStatus(report.status());
    if (record_timing == 0) {
      report->original.train_time_ms = 0;
      report->anonymized.train_time_ms = 0;
    }
    *out_json =
        CopyString(prgain::DumpJson(prgain::UtilityReportJson(*report, alpha)));
    return FromStatus(absl::OkStatus());
  });
}

}  // extern "C"
