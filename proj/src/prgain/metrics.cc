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

#include "prgain/metrics.h"

namespace prgain {
namespace {

double HeightRatioSum(const GeneralizationVector& vector,
                      const std::vector<int>& max_levels) {
  double sum = 0;
  for (size_t i = 0; i < vector.size(); ++i) {
    sum += static_cast<double>(vector[i]) / max_levels[i];
  }
  return sum;
}

}  // namespace

double PrivacyAchieved(const AnonymizationResult& result) {
  if (result.total == 0) return 0;
  size_t grouped = 0;
  for (const AnonymizedGroup& g : result.groups) {
    grouped += g.cls.members.size();
  }
  return static_cast<double>(grouped) / static_cast<double>(result.total);
}

double PrecisionLoss(const AnonymizationResult& result) {
  const size_t q = result.max_levels.size();
  if (result.total == 0 || q == 0) return 0;
  double sum = 0;
  for (const AnonymizedGroup& g : result.groups) {
    sum += static_cast<double>(g.cls.members.size()) *
           HeightRatioSum(g.vector, result.max_levels);
  }
  const double residual = static_cast<double>(result.residual_ids.size());
  if (result.residual_policy == ResidualPolicy::kKeep &&
      result.final_vector.size() == q) {
    sum += residual * HeightRatioSum(result.final_vector, result.max_levels);
  } else {
    sum += residual * static_cast<double>(q);
  }
  return sum / (static_cast<double>(result.total) * static_cast<double>(q));
}

uint64_t Discernibility(const AnonymizationResult& result) {
  uint64_t penalty = 0;
  for (const AnonymizedGroup& g : result.groups) {
    const uint64_t n = g.cls.members.size();
    penalty += n * n;
  }
  penalty += static_cast<uint64_t>(result.residual_ids.size()) * result.total;
  return penalty;
}

MetricsReport Summarize(const AnonymizationResult& result,
                        std::chrono::duration<double, std::milli> wall_time) {
  MetricsReport report;
  report.privacy_achieved = PrivacyAchieved(result);
  report.precision_loss = PrecisionLoss(result);
  report.discernibility = Discernibility(result);
  report.residual_count = result.residual_ids.size();
  report.wall_time_ms = wall_time.count();
  report.iterations = result.trace.size();
  report.branch_count_peak = result.stats.branch_count_peak;
  return report;
}

}  // namespace prgain
