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

#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "prgain/table.h"

namespace prgain {
namespace {

using ::testing::ElementsAre;

Table MakeTable(std::vector<std::string> header, std::vector<Tuple> rows) {
  auto t = Table::FromHeader(std::move(header), std::move(rows));
  EXPECT_TRUE(t.ok()) << t.status();
  return *std::move(t);
}

Table Weather() {
  return MakeTable({"outlook", "play"}, {{"sunny", "yes"},
                                         {"sunny", "yes"},
                                         {"rain", "no"},
                                         {"rain", "yes"}});
}

TEST(TrainNaiveBayesTest, WeatherPriorsAndConditionals) {
  auto model = TrainNaiveBayes(Weather(), "play");
  ASSERT_TRUE(model.ok()) << model.status();
  EXPECT_THAT(model->labels(), ElementsAre("no", "yes"));
  // (3 + 1) / (4 + 2) and (1 + 1) / (4 + 2)
  EXPECT_NEAR(model->Prior("yes"), 2.0 / 3, 1e-12);
  EXPECT_NEAR(model->Prior("no"), 1.0 / 3, 1e-12);
  // (2 + 1) / (3 + 2), (1 + 1) / (3 + 2), (0 + 1) / (1 + 2), (1 + 1) / (1 + 2)
  EXPECT_NEAR(model->Conditional("outlook", "sunny", "yes"), 3.0 / 5, 1e-12);
  EXPECT_NEAR(model->Conditional("outlook", "rain", "yes"), 2.0 / 5, 1e-12);
  EXPECT_NEAR(model->Conditional("outlook", "sunny", "no"), 1.0 / 3, 1e-12);
  EXPECT_NEAR(model->Conditional("outlook", "rain", "no"), 2.0 / 3, 1e-12);
  // Unseen floor: 1 / (3 + 1 * 3) and 1 / (1 + 1 * 3).
  EXPECT_NEAR(model->Conditional("outlook", "snow", "yes"), 1.0 / 6, 1e-12);
  EXPECT_NEAR(model->Conditional("outlook", "snow", "no"), 1.0 / 4, 1e-12);
}

TEST(TrainNaiveBayesTest, Errors) {
  EXPECT_FALSE(TrainNaiveBayes(Weather(), "play", 0).ok());
  EXPECT_FALSE(TrainNaiveBayes(Weather(), "play", -1).ok());
  EXPECT_FALSE(TrainNaiveBayes(Weather(), "missing").ok());
  EXPECT_FALSE(TrainNaiveBayes(MakeTable({"a", "c"}, {}), "c").ok());
}

TEST(TrainNaiveBayesTest, SingleLabelPriorIsOne) {
  auto model = TrainNaiveBayes(
      MakeTable({"a", "c"}, {{"x", "only"}, {"y", "only"}}), "c");
  ASSERT_TRUE(model.ok());
  EXPECT_DOUBLE_EQ(model->Prior("only"), 1.0);
  EXPECT_EQ(Classify(*model, {"never-seen", ""}).label, "only");
}

TEST(ClassifyTest, WeatherPredictions) {
  auto model = TrainNaiveBayes(Weather(), "play");
  ASSERT_TRUE(model.ok());
  Prediction sunny = Classify(*model, {"sunny", ""});
  EXPECT_EQ(sunny.label, "yes");
  // log(2/3 * 3/5) and log(1/3 * 1/3)
  EXPECT_NEAR(sunny.log_posteriors.at("yes"), std::log(0.4), 1e-12);
  EXPECT_NEAR(sunny.log_posteriors.at("no"), std::log(1.0 / 9), 1e-12);
  EXPECT_EQ(Classify(*model, {"rain", ""}).label, "yes");
  EXPECT_EQ(Classify(*model, {"snow", ""}).label, "yes");
}

TEST(ClassifyTest, TiesGoToSmallerLabel) {
  auto model = TrainNaiveBayes(
      MakeTable({"a", "c"}, {{"x", "q"}, {"x", "p"}}), "c");
  ASSERT_TRUE(model.ok());
  EXPECT_EQ(Classify(*model, {"x", ""}).label, "p");
}

// Priors sum to one and every (feature, label) conditional distribution over
// the feature's vocabulary sums to one.
TEST(NaiveBayesPropertyTest, NormalizationOnRandomTables) {
  std::mt19937_64 rng(99);
  auto draw = [&](int n) {
    return std::uniform_int_distribution<int>(0, n - 1)(rng);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const int columns = 1 + draw(4);
    const int rows = 1 + draw(60);
    const double alpha = 0.1 + draw(30) / 10.0;
    std::vector<std::string> header;
    for (int c = 0; c < columns; ++c) header.push_back("f" + std::to_string(c));
    header.push_back("label");
    std::vector<Tuple> data;
    for (int r = 0; r < rows; ++r) {
      Tuple t;
      for (int c = 0; c < columns; ++c) t.push_back("v" + std::to_string(draw(5)));
      t.push_back("L" + std::to_string(draw(3)));
      data.push_back(std::move(t));
    }
    Table table = MakeTable(header, data);
    auto model = TrainNaiveBayes(table, "label", alpha);
    ASSERT_TRUE(model.ok());
    double prior_sum = 0;
    for (const auto& [label, p] : model->Priors()) prior_sum += p;
    EXPECT_NEAR(prior_sum, 1.0, 1e-9);
    for (const NaiveBayesModel::Feature& f : model->features()) {
      std::set<std::string> vocab;
      for (const Tuple& t : data) vocab.insert(t[f.column]);
      EXPECT_EQ(f.vocabulary_size, vocab.size());
      for (const std::string& label : model->labels()) {
        double sum = 0;
        for (const std::string& v : vocab) {
          sum += model->Conditional(f.name, v, label);
        }
        EXPECT_NEAR(sum, 1.0, 1e-9);
      }
    }
    // Shifting every log posterior by a constant keeps the argmax.
    Prediction p = Classify(*model, data[0]);
    std::string best;
    double best_score = -INFINITY;
    for (const auto& [label, score] : p.log_posteriors) {
      if (score + 1000.0 > best_score) {
        best_score = score + 1000.0;
        best = label;
      }
    }
    EXPECT_EQ(best, p.label);
  }
}

TEST(EvaluateNaiveBayesTest, ResubstitutionMemorizesUniqueRows) {
  Table t = MakeTable({"id", "c"}, {{"a", "x"}, {"b", "y"}, {"c", "z"}});
  auto r = EvaluateNaiveBayes(t, "c", 1.0, 1);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->accuracy_percent, 100.0);
  EXPECT_EQ(r->train_rows, 3);
  EXPECT_EQ(r->test_rows, 3);
}

TEST(EvaluateNaiveBayesTest, SplitIsSeededAndDeterministic) {
  std::vector<Tuple> rows;
  for (int i = 0; i < 50; ++i) {
    rows.push_back({std::to_string(i % 4), i % 3 == 0 ? "a" : "b"});
  }
  Table t = MakeTable({"f", "c"}, rows);
  auto a = EvaluateNaiveBayes(t, "c", 0.7, 42);
  auto b = EvaluateNaiveBayes(t, "c", 0.7, 42);
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(a->accuracy_percent, b->accuracy_percent);
  EXPECT_EQ(a->train_rows, 35);
  EXPECT_EQ(a->test_rows, 15);
}

TEST(EvaluateNaiveBayesTest, Errors) {
  EXPECT_FALSE(EvaluateNaiveBayes(Weather(), "play", 0, 1).ok());
  EXPECT_FALSE(EvaluateNaiveBayes(Weather(), "play", 1.5, 1).ok());
  Table one = MakeTable({"f", "c"}, {{"a", "x"}});
  EXPECT_FALSE(EvaluateNaiveBayes(one, "c", 0.7, 1).ok());
}

TEST(SeededPermutationTest, IsAPermutationAndStable) {
  std::vector<size_t> p = SeededPermutation(100, 42);
  EXPECT_EQ(p, SeededPermutation(100, 42));
  EXPECT_NE(p, SeededPermutation(100, 43));
  std::vector<size_t> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) EXPECT_EQ(sorted[i], i);
}

TEST(CompareUtilityTest, IdenticalTablesHaveZeroDelta) {
  auto r = CompareUtility(Weather(), Weather(), "play", 1.0, 7);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->delta_percent, 0);
}

// x separates the labels perfectly; merging its values leaves only the tied
// prior, which resolves to "p" and gets half the rows right.
TEST(CompareUtilityTest, MergingSeparatingValuesCostsFiftyPoints) {
  Table original = MakeTable(
      {"x", "c"}, {{"a", "p"}, {"a", "p"}, {"b", "q"}, {"b", "q"}});
  Table merged = MakeTable(
      {"x", "c"}, {{"*", "p"}, {"*", "p"}, {"*", "q"}, {"*", "q"}});
  auto r = CompareUtility(original, merged, "c", 1.0, 42);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->original.accuracy_percent, 100.0);
  EXPECT_EQ(r->anonymized.accuracy_percent, 50.0);
  EXPECT_EQ(r->delta_percent, 50.0);
}

TEST(CompareUtilityTest, MissingClassAttribute) {
  Table other = MakeTable({"outlook", "y"}, {{"sunny", "1"}});
  EXPECT_FALSE(CompareUtility(Weather(), other, "play", 1.0, 1).ok());
}

TEST(BinIntervalColumnsTest, NumericCellsBecomeLevelOneLabels) {
  auto age = std::make_shared<const GeneralizationHierarchy>(
      GeneralizationHierarchy::Interval(
          {{{0, 49, "0-49"}, {50, 99, "50-99"}}, {{0, 99, "*"}}}));
  Table t = MakeTable({"age", "c"},
                      {{"17", "a"}, {"50", "b"}, {"0-49", "a"}, {"?", "b"}});
  std::vector<std::pair<std::string,
                        std::shared_ptr<const GeneralizationHierarchy>>>
      hs = {{"age", age}};
  Table binned = BinIntervalColumns(t, hs);
  EXPECT_EQ(binned.cell(0, 0), "0-49");
  EXPECT_EQ(binned.cell(1, 0), "50-99");
  EXPECT_EQ(binned.cell(2, 0), "0-49");
  EXPECT_EQ(binned.cell(3, 0), "?");
  EXPECT_EQ(binned.cell(0, 1), "a");
}

}  // namespace
}  // namespace prgain
