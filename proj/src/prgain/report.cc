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

#include "prgain/report.h"

namespace prgain {

using json = nlohmann::json;

json IterationJson(const IterationRecord& record,
                   const std::vector<std::string>& qi_names) {
  json sizes = json::array();
  for (const EquivalenceClass& cls : record.emitted_classes) {
    sizes.push_back(cls.members.size());
  }
  return {
      {"vector", record.chosen_vector.levels()},
      {"notation", record.chosen_vector.ToString(qi_names)},
      {"prgain", record.prgain},
      {"nil", record.newly_anonymized.empty()},
      {"newly_anonymized", record.newly_anonymized},
      {"emitted_class_sizes", std::move(sizes)},
  };
}

json AnonymizationReportJson(const AnonymizationResult& result,
                             const MetricsReport& metrics,
                             const ReportOptions& options) {
  json trace = json::array();
  for (const IterationRecord& record : result.trace) {
    trace.push_back(IterationJson(record, result.qi_names));
  }
  json out = {
      {"k", result.k},
      {"q", result.qi_names.size()},
      {"quasi_identifiers", result.qi_names},
      {"total", result.total},
      {"residual_policy", std::string(ResidualPolicyName(result.residual_policy))},
      {"privacy_achieved", metrics.privacy_achieved},
      {"precision_loss", metrics.precision_loss},
      {"discernibility", metrics.discernibility},
      {"residual_count", metrics.residual_count},
      {"wall_time_ms", metrics.wall_time_ms},
      {"iterations", metrics.iterations},
      {"branch_count_peak", metrics.branch_count_peak},
      {"final_vector", result.final_vector.levels()},
      {"search",
       {{"max_branches", options.max_branches},
        {"expansions", result.stats.expansions},
        {"merged", result.stats.merged},
        {"pruned", result.stats.pruned},
        {"terminal_branches", result.stats.terminal_branches}}},
      {"trace", std::move(trace)},
  };
  if (options.include_all_branches) {
    json branches = json::array();
    for (const BranchSummary& b : result.branches) {
      json steps = json::array();
      for (const IterationRecord& record : b.trace) {
        steps.push_back(IterationJson(record, result.qi_names));
      }
      branches.push_back({{"fate", std::string(BranchFateName(b.fate))},
                          {"anonymized", b.anonymized_count},
                          {"trace", std::move(steps)}});
    }
    out["branches"] = std::move(branches);
  }
  return out;
}

json KAnonymityReportJson(const KAnonymityReport& report, size_t rows) {
  json offending = json::array();
  for (const KAnonymityReport::Offender& o : report.offending) {
    offending.push_back({{"key", o.key}, {"size", o.size}});
  }
  return {{"k", report.k},
          {"passed", report.passed()},
          {"rows", rows},
          {"classes", report.num_classes},
          {"offending", std::move(offending)}};
}

namespace {

json EvaluationJson(const EvaluationResult& e) {
  return {{"accuracy_percent", e.accuracy_percent},
          {"train_rows", e.train_rows},
          {"test_rows", e.test_rows},
          {"train_time_ms", e.train_time_ms}};
}

}  // namespace

json UtilityReportJson(const UtilityReport& report, double alpha) {
  return {{"class_attr", report.class_attr},
          {"seed", report.seed},
          {"split", report.split_fraction},
          {"alpha", alpha},
          {"original", EvaluationJson(report.original)},
          {"anonymized", EvaluationJson(report.anonymized)},
          {"delta_percent", report.delta_percent}};
}

std::string DumpJson(const json& value) { return value.dump(2) + "\n"; }

}  // namespace prgain
