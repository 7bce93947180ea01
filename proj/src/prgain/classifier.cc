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

#include "prgain/classifier.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace prgain {

size_t NaiveBayesModel::LabelIndex(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return labels_.size();
  return static_cast<size_t>(it - labels_.begin());
}

double NaiveBayesModel::Prior(const std::string& label) const {
  const size_t i = LabelIndex(label);
  const double count = i < labels_.size() ? label_counts_[i] : 0.0;
  return (count + alpha_) /
         (static_cast<double>(num_rows_) + alpha_ * labels_.size());
}

std::map<std::string, double> NaiveBayesModel::Priors() const {
  std::map<std::string, double> priors;
  for (const std::string& label : labels_) priors[label] = Prior(label);
  return priors;
}

double NaiveBayesModel::ConditionalAt(const Feature& f,
                                      const std::string& value,
                                      size_t label) const {
  const double label_count = static_cast<double>(label_counts_[label]);
  const double vocab = static_cast<double>(f.vocabulary_size);
  auto it = f.counts.find(value);
  if (it == f.counts.end()) {
    return alpha_ / (label_count + alpha_ * (vocab + 1));
  }
  return (static_cast<double>(it->second[label]) + alpha_) /
         (label_count + alpha_ * vocab);
}

double NaiveBayesModel::Conditional(const std::string& feature,
                                    const std::string& value,
                                    const std::string& label) const {
  const size_t li = LabelIndex(label);
  if (li == labels_.size()) return 0;
  for (const Feature& f : features_) {
    if (f.name == feature) return ConditionalAt(f, value, li);
  }
  return 0;
}

Prediction NaiveBayesModel::Predict(const Tuple& tuple) const {
  Prediction prediction;
  double best = -std::numeric_limits<double>::infinity();
  for (size_t li = 0; li < labels_.size(); ++li) {
    double score = std::log(Prior(labels_[li]));
    for (const Feature& f : features_) {
      score += std::log(ConditionalAt(f, tuple[f.column], li));
    }
    prediction.log_posteriors[labels_[li]] = score;
    // Labels are sorted, so a strict comparison keeps the smaller on ties.
    if (score > best || prediction.label.empty()) {
      best = score;
      prediction.label = labels_[li];
    }
  }
  return prediction;
}

absl::StatusOr<NaiveBayesModel> TrainNaiveBayes(const Table& table,
                                                const std::string& class_attr,
                                                double alpha) {
  if (!(alpha > 0) || !std::isfinite(alpha)) {
    return absl::InvalidArgumentError(
        absl::StrCat("smoothing alpha must be positive, got ", alpha));
  }
  std::optional<size_t> class_column = table.ColumnIndex(class_attr);
  if (!class_column.has_value()) {
    return absl::InvalidArgumentError(
        absl::StrCat("class attribute '", class_attr, "' not in table"));
  }
  if (table.num_rows() == 0) {
    return absl::InvalidArgumentError("cannot train on an empty table");
  }

  NaiveBayesModel model;
  model.class_attr_ = class_attr;
  model.class_column_ = *class_column;
  model.alpha_ = alpha;
  model.num_rows_ = table.num_rows();

  for (const Tuple& row : table.rows()) {
    model.labels_.push_back(row[*class_column]);
  }
  std::sort(model.labels_.begin(), model.labels_.end());
  model.labels_.erase(std::unique(model.labels_.begin(), model.labels_.end()),
                      model.labels_.end());
  const size_t num_labels = model.labels_.size();
  model.label_counts_.assign(num_labels, 0);

  for (size_t c = 0; c < table.num_columns(); ++c) {
    if (c == *class_column) continue;
    NaiveBayesModel::Feature f;
    f.name = table.schema()[c].name;
    f.column = c;
    model.features_.push_back(std::move(f));
  }
  for (const Tuple& row : table.rows()) {
    const size_t li = model.LabelIndex(row[*class_column]);
    ++model.label_counts_[li];
    for (NaiveBayesModel::Feature& f : model.features_) {
      auto [it, inserted] = f.counts.try_emplace(row[f.column]);
      if (inserted) it->second.assign(num_labels, 0);
      ++it->second[li];
    }
  }
  for (NaiveBayesModel::Feature& f : model.features_) {
    f.vocabulary_size = f.counts.size();
  }
  return model;
}

std::vector<size_t> SeededPermutation(size_t n, uint64_t seed) {
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  auto bounded = [&rng](uint64_t bound) {
    // Rejection keeps the draw uniform and independent of the library's
    // distribution implementation.
    const uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const uint64_t r = rng();
      if (r >= threshold) return r % bound;
    }
  };
  for (size_t i = n; i > 1; --i) {
    const size_t j = static_cast<size_t>(bounded(i));
    std::swap(order[i - 1], order[j]);
  }
  return order;
}

namespace {

Table Subset(const Table& table, std::span<const size_t> rows) {
  std::vector<Tuple> out;
  out.reserve(rows.size());
  for (size_t r : rows) out.push_back(table.rows()[r]);
  return *Table::Create(table.schema(), std::move(out));
}

}  // namespace

absl::StatusOr<EvaluationResult> EvaluateNaiveBayes(
    const Table& table, const std::string& class_attr, double split_fraction,
    uint64_t seed, double alpha) {
  if (!(split_fraction > 0 && split_fraction <= 1)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "split fraction must lie in (0, 1], got ", split_fraction));
  }
  const std::vector<size_t> order = SeededPermutation(table.num_rows(), seed);
  std::span<const size_t> train_rows(order);
  std::span<const size_t> test_rows(order);
  if (split_fraction < 1) {
    const size_t n_train = static_cast<size_t>(
        std::floor(split_fraction * static_cast<double>(table.num_rows())));
    train_rows = train_rows.first(n_train);
    test_rows = test_rows.subspan(n_train);
  }
  if (test_rows.empty()) {
    return absl::InvalidArgumentError("test partition is empty");
  }

  const Table train = Subset(table, train_rows);
  const auto start = std::chrono::steady_clock::now();
  absl::StatusOr<NaiveBayesModel> model =
      TrainNaiveBayes(train, class_attr, alpha);
  const auto stop = std::chrono::steady_clock::now();
  if (!model.ok()) return model.status();

  const size_t class_column = *table.ColumnIndex(class_attr);
  size_t correct = 0;
  for (size_t r : test_rows) {
    const Tuple& row = table.rows()[r];
    if (model->Predict(row).label == row[class_column]) ++correct;
  }
  EvaluationResult result;
  result.accuracy_percent =
      100.0 * static_cast<double>(correct) / static_cast<double>(test_rows.size());
  result.train_rows = train_rows.size();
  result.test_rows = test_rows.size();
  result.train_time_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return result;
}

absl::StatusOr<UtilityReport> CompareUtility(const Table& original,
                                             const Table& anonymized,
                                             const std::string& class_attr,
                                             double split_fraction,
                                             uint64_t seed, double alpha) {
  absl::StatusOr<EvaluationResult> before =
      EvaluateNaiveBayes(original, class_attr, split_fraction, seed, alpha);
  if (!before.ok()) {
    return absl::Status(before.status().code(),
                        absl::StrCat("original table: ",
                                     before.status().message()));
  }
  absl::StatusOr<EvaluationResult> after =
      EvaluateNaiveBayes(anonymized, class_attr, split_fraction, seed, alpha);
  if (!after.ok()) {
    return absl::Status(after.status().code(),
                        absl::StrCat("anonymized table: ",
                                     after.status().message()));
  }
  UtilityReport report;
  report.class_attr = class_attr;
  report.split_fraction = split_fraction;
  report.seed = seed;
  report.original = *before;
  report.anonymized = *after;
  report.delta_percent = before->accuracy_percent - after->accuracy_percent;
  return report;
}

Table BinIntervalColumns(
    const Table& table,
    std::span<const std::pair<std::string,
                              std::shared_ptr<const GeneralizationHierarchy>>>
        hierarchies) {
  std::vector<std::pair<size_t, const GeneralizationHierarchy*>> targets;
  for (const auto& [name, h] : hierarchies) {
    if (h == nullptr || h->kind() != HierarchyKind::kInterval) continue;
    if (std::optional<size_t> c = table.ColumnIndex(name)) {
      targets.push_back({*c, h.get()});
    }
  }
  std::vector<Tuple> rows = table.rows();
  for (Tuple& row : rows) {
    for (const auto& [column, h] : targets) {
      absl::StatusOr<std::string> label = h->Generalize(row[column], 1);
      if (label.ok()) row[column] = *std::move(label);
    }
  }
  return *Table::Create(table.schema(), std::move(rows));
}

}  // namespace prgain
