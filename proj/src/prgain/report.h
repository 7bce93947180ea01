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

#ifndef PRGAIN_REPORT_H_
#define PRGAIN_REPORT_H_

#include "nlohmann/json.hpp"
#include "prgain/anonymizer.h"
#include "prgain/classifier.h"
#include "prgain/metrics.h"

namespace prgain {

struct ReportOptions {
  bool include_all_branches = false;
  int max_branches = 64;
};

// Keys: k, q, quasi_identifiers, total, residual_policy, privacy_achieved,
// precision_loss, discernibility, residual_count, wall_time_ms, iterations,
// branch_count_peak, final_vector, search, trace[] and, on request,
// branches[].
nlohmann::json AnonymizationReportJson(const AnonymizationResult& result,
                                       const MetricsReport& metrics,
                                       const ReportOptions& options = {});

nlohmann::json IterationJson(const IterationRecord& record,
                             const std::vector<std::string>& qi_names);

nlohmann::json KAnonymityReportJson(const KAnonymityReport& report,
                                    size_t rows);

nlohmann::json UtilityReportJson(const UtilityReport& report, double alpha);

// Stable text form: two-space indent, trailing newline.
std::string DumpJson(const nlohmann::json& value);

}  // namespace prgain

#endif  // PRGAIN_REPORT_H_
