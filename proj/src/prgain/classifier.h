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

// Categorical Naive Bayes with Laplace smoothing, used to compare the
// classification utility of original and anonymized tables.

#ifndef PRGAIN_CLASSIFIER_H_
#define PRGAIN_CLASSIFIER_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/statusor.h"
#include "prgain/table.h"

namespace prgain {

struct Prediction {
  std::string label;
  // Unnormalized log posterior per label.
  std::map<std::string, double> log_posteriors;
};

class NaiveBayesModel {
 public:
  struct Feature {
    std::string name;
    size_t column = 0;
    size_t vocabulary_size = 0;
    // (value, label index) -> count
    absl::flat_hash_map<std::string, std::vector<uint64_t>> counts;
  };

  const std::string& class_attr() const { return class_attr_; }
  double alpha() const { return alpha_; }
  size_t num_rows() const { return num_rows_; }
  // Sorted ascending.
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Feature>& features() const { return features_; }

  double Prior(const std::string& label) const;
  // P(feature = value | label), smoothed; unseen values get the floor
  // alpha / (count(label) + alpha * (|vocab| + 1)).
  double Conditional(const std::string& feature, const std::string& value,
                     const std::string& label) const;

  std::map<std::string, double> Priors() const;

  // `tuple` is a full row in the training table's column order; the class
  // cell is ignored. Ties go to the lexicographically smaller label.
  Prediction Predict(const Tuple& tuple) const;

 private:
  friend absl::StatusOr<NaiveBayesModel> TrainNaiveBayes(
      const Table&, const std::string&, double);

  double ConditionalAt(const Feature& f, const std::string& value,
                       size_t label) const;
  size_t LabelIndex(const std::string& label) const;

  std::string class_attr_;
  size_t class_column_ = 0;
  double alpha_ = 1.0;
  size_t num_rows_ = 0;
  std::vector<std::string> labels_;
  std::vector<uint64_t> label_counts_;
  std::vector<Feature> features_;
};

absl::StatusOr<NaiveBayesModel> TrainNaiveBayes(const Table& table,
                                                const std::string& class_attr,
                                                double alpha = 1.0);

inline Prediction Classify(const NaiveBayesModel& model, const Tuple& tuple) {
  return model.Predict(tuple);
}

struct EvaluationResult {
  double accuracy_percent = 0;
  size_t train_rows = 0;
  size_t test_rows = 0;
  double train_time_ms = 0;
};

// Shuffles rows deterministically by `seed`, trains on the first
// `split_fraction` of them and tests on the rest. split_fraction == 1 trains
// and tests on the whole table.
absl::StatusOr<EvaluationResult> EvaluateNaiveBayes(
    const Table& table, const std::string& class_attr, double split_fraction,
    uint64_t seed, double alpha = 1.0);

struct UtilityReport {
  std::string class_attr;
  double split_fraction = 0;
  uint64_t seed = 0;
  EvaluationResult original;
  EvaluationResult anonymized;
  // original - anonymized, in percentage points.
  double delta_percent = 0;
};

absl::StatusOr<UtilityReport> CompareUtility(const Table& original,
                                             const Table& anonymized,
                                             const std::string& class_attr,
                                             double split_fraction,
                                             uint64_t seed, double alpha = 1.0);

// Replaces numeric cells of interval-hierarchy quasi-identifiers by their
// level-1 bin label so numeric columns become categorical. Cells that are
// already labels, or fall outside every bin, pass through.
Table BinIntervalColumns(
    const Table& table,
    std::span<const std::pair<std::string,
                              std::shared_ptr<const GeneralizationHierarchy>>>
        hierarchies);

// Deterministic permutation of [0, n) from a 64-bit seed (Fisher-Yates over
// mt19937_64 with unbiased bounded draws).
std::vector<size_t> SeededPermutation(size_t n, uint64_t seed);

}  // namespace prgain

#endif  // PRGAIN_CLASSIFIER_H_
