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

#ifndef PRGAIN_METRICS_H_
#define PRGAIN_METRICS_H_

#include <chrono>
#include <cstdint>

#include "prgain/anonymizer.h"

namespace prgain {

struct MetricsReport {
  double privacy_achieved = 0;
  double precision_loss = 0;
  uint64_t discernibility = 0;
  size_t residual_count = 0;
  double wall_time_ms = 0;
  size_t iterations = 0;
  size_t branch_count_peak = 0;
};

// Fraction of tuples released inside a group.
double PrivacyAchieved(const AnonymizationResult& result);

// Mean generalization height ratio (level / max_level) over every QI cell of
// every tuple. Residual tuples count at the top of each hierarchy, except
// under the keep policy where they count at the final vector.
double PrecisionLoss(const AnonymizationResult& result);

// Sum of squared group sizes plus T for every residual tuple.
uint64_t Discernibility(const AnonymizationResult& result);

MetricsReport Summarize(const AnonymizationResult& result,
                        std::chrono::duration<double, std::milli> wall_time);

}  // namespace prgain

#endif  // PRGAIN_METRICS_H_
