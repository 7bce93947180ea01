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

#include "prgain/hierarchy.h"

#include <random>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "support/oracle.h"
#include "support/random_tables.h"

namespace prgain {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using ::testing::IsEmpty;

GeneralizationHierarchy Age() {
  return GeneralizationHierarchy::Interval(
      {{{21, 30, "21-30"}, {31, 40, "31-40"}, {41, 50, "41-50"},
        {51, 60, "51-60"}},
       {{21, 30, "young"}, {31, 50, "mid age"}, {51, 60, "older"}}});
}

GeneralizationHierarchy Gender() {
  return GeneralizationHierarchy::Category(
      {{{"Male", "person"}, {"Female", "person"}}});
}

GeneralizationHierarchy Country() {
  return GeneralizationHierarchy::Category(
      {{{"France", "Europe"}, {"Spain", "Europe"}, {"Peru", "Americas"}},
       {{"Europe", "*"}, {"Americas", "*"}}});
}

std::string Gen(const GeneralizationHierarchy& h, const std::string& v,
                int level) {
  auto out = h.Generalize(v, level);
  EXPECT_TRUE(out.ok()) << out.status();
  return out.ok() ? *out : "";
}

TEST(GeneralizeTest, IntervalLevels) {
  const auto age = Age();
  EXPECT_EQ(age.max_level(), 2);
  EXPECT_EQ(Gen(age, "28", 0), "28");
  EXPECT_EQ(Gen(age, "28", 1), "21-30");
  EXPECT_EQ(Gen(age, "31", 1), "31-40");
  EXPECT_EQ(Gen(age, "40", 2), "mid age");
  EXPECT_EQ(Gen(age, "55", 2), "older");
}

TEST(GeneralizeTest, IntervalRejectsOutOfRangeAndText) {
  EXPECT_FALSE(Age().Generalize("61", 1).ok());
  EXPECT_FALSE(Age().Generalize("abc", 1).ok());
}

TEST(GeneralizeTest, CategoryStepsThroughEachMap) {
  EXPECT_EQ(Gen(Gender(), "Female", 1), "person");
  EXPECT_EQ(Gen(Country(), "Spain", 1), "Europe");
  EXPECT_EQ(Gen(Country(), "Peru", 2), "*");
  EXPECT_FALSE(Country().Generalize("Chad", 1).ok());
}

TEST(GeneralizeTest, CategoryFallsBackToRawKey) {
  // The second map is keyed by raw values only.
  auto h = GeneralizationHierarchy::Category(
      {{{"a", "x"}, {"b", "x"}}, {{"a", "*"}, {"b", "*"}}});
  EXPECT_EQ(Gen(h, "b", 2), "*");
}

TEST(GeneralizeTest, MaskReplacesTrailingCharacters) {
  auto zip = GeneralizationHierarchy::Mask(4);
  EXPECT_EQ(Gen(zip, "13053", 0), "13053");
  EXPECT_EQ(Gen(zip, "13053", 2), "130**");
  EXPECT_EQ(Gen(zip, "13053", 4), "1****");
  EXPECT_EQ(Gen(GeneralizationHierarchy::Mask(2, '#'), "ab", 2), "##");
}

TEST(GeneralizeTest, MissingValueStaysBelowTheRoot) {
  EXPECT_EQ(Gen(Country(), "?", 1), "?");
  EXPECT_EQ(Gen(Country(), "?", 2), "*");
  EXPECT_EQ(Gen(Age(), "?", 2), "?");  // three top bins, no single root
  EXPECT_EQ(Gen(GeneralizationHierarchy::Mask(3), "?", 3), "?");
}

TEST(GeneralizeTest, RootExistsOnlyForSingleTopValue) {
  ASSERT_NE(Country().Root(), nullptr);
  EXPECT_EQ(*Country().Root(), "*");
  ASSERT_NE(Gender().Root(), nullptr);
  EXPECT_EQ(Age().Root(), nullptr);
}

TEST(ValidateHierarchyTest, ShippedShapesAreValid) {
  std::vector<std::string> ages = {"21", "30", "31", "50", "60"};
  EXPECT_TRUE(ValidateHierarchy(Age(), ages).ok());
  EXPECT_TRUE(ValidateHierarchy(Gender(), {}).ok());
  EXPECT_TRUE(ValidateHierarchy(Country(), {}).ok());
  std::vector<std::string> zips = {"13053", "?"};
  EXPECT_TRUE(ValidateHierarchy(GeneralizationHierarchy::Mask(4), zips).ok());
}

TEST(ValidateHierarchyTest, OverlappingBins) {
  auto h = GeneralizationHierarchy::Interval(
      {{{0, 10, "a"}, {10, 20, "b"}}});
  auto report = ValidateHierarchy(h, {});
  ASSERT_FALSE(report.ok());
  EXPECT_THAT(report.ToString(), HasSubstr("overlap"));
}

TEST(ValidateHierarchyTest, GapBetweenBins) {
  auto h = GeneralizationHierarchy::Interval({{{0, 9, "a"}, {11, 20, "b"}}});
  EXPECT_THAT(ValidateHierarchy(h, {}).ToString(), HasSubstr("gap"));
}

TEST(ValidateHierarchyTest, DuplicateLabel) {
  auto h = GeneralizationHierarchy::Interval({{{0, 9, "a"}, {10, 20, "a"}}});
  EXPECT_THAT(ValidateHierarchy(h, {}).ToString(), HasSubstr("duplicate"));
}

TEST(ValidateHierarchyTest, FinerBinStraddlesCoarserBins) {
  auto h = GeneralizationHierarchy::Interval(
      {{{0, 9, "0-9"}, {10, 19, "10-19"}},
       {{0, 14, "low"}, {15, 19, "high"}}});
  auto report = ValidateHierarchy(h, {});
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violations[0].level, 2);
  EXPECT_THAT(report.violations[0].values, ElementsAre("10-19"));
}

TEST(ValidateHierarchyTest, ValueOutsideEveryBin) {
  std::vector<std::string> sample = {"25", "75"};
  auto report = ValidateHierarchy(Age(), sample);
  ASSERT_FALSE(report.ok());
  EXPECT_THAT(report.violations[0].values, ElementsAre("75"));
}

TEST(ValidateHierarchyTest, CategoryNestingViolation) {
  // a and b share level 1 but split at level 2.
  auto h = GeneralizationHierarchy::Category(
      {{{"a", "x"}, {"b", "x"}}, {{"a", "p"}, {"b", "q"}}});
  auto report = ValidateHierarchy(h, {});
  ASSERT_FALSE(report.ok());
  EXPECT_THAT(report.ToString(), HasSubstr("nesting"));
  EXPECT_THAT(report.violations[0].values, ElementsAre("a", "b"));
}

TEST(ValidateHierarchyTest, CategoryMissingValue) {
  std::vector<std::string> sample = {"France", "Chad"};
  auto report = ValidateHierarchy(Country(), sample);
  ASSERT_FALSE(report.ok());
  EXPECT_THAT(report.violations[0].values, ElementsAre("Chad"));
}

TEST(ValidateHierarchyTest, MaskLongerThanValue) {
  std::vector<std::string> sample = {"12"};
  EXPECT_FALSE(
      ValidateHierarchy(GeneralizationHierarchy::Mask(3), sample).ok());
}

TEST(ValidateHierarchyTest, ZeroLevels) {
  EXPECT_FALSE(ValidateHierarchy(GeneralizationHierarchy::Mask(0), {}).ok());
  EXPECT_FALSE(ValidateHierarchy(GeneralizationHierarchy::Category({}), {}).ok());
}

TEST(GeneralizationVectorTest, Notation) {
  GeneralizationVector v({1, 0, 0});
  std::vector<std::string> names = {"Age", "Gender", "ZIP"};
  EXPECT_EQ(v.ToString(), "<1,0,0>");
  EXPECT_EQ(v.ToString(names), "<Age^1, Gender^0, ZIP^0>");
  EXPECT_EQ(v.Sum(), 1);
  EXPECT_LT(GeneralizationVector({0, 1, 0}), v);
}

TEST(SuccessorsTest, OneStepPerCoordinateInOrder) {
  std::vector<int> max = {2, 1, 4};
  auto next = Successors(GeneralizationVector({1, 1, 0}), max);
  ASSERT_EQ(next.size(), 2);
  EXPECT_THAT(next[0].levels(), ElementsAre(2, 1, 0));
  EXPECT_THAT(next[1].levels(), ElementsAre(1, 1, 1));
  EXPECT_THAT(Successors(GeneralizationVector({2, 1, 4}), max), IsEmpty());
}

// Random dimension tables agree with the naive reference and are monotone:
// values equal at one level stay equal at every higher level.
TEST(HierarchyPropertyTest, RandomHierarchiesMatchReference) {
  std::mt19937_64 rng(11);
  testing::RandomCaseOptions options;
  options.min_rows = 20;
  options.max_rows = 40;
  for (int trial = 0; trial < 200; ++trial) {
    testing::RandomCase c = testing::MakeRandomCase(rng, options);
    for (size_t q = 0; q < c.qis.size(); ++q) {
      const auto& h = *c.qis[q].hierarchy;
      const testing::OracleQi& ref = c.oracle.qis[q];
      std::vector<std::string> column;
      for (const auto& row : c.oracle.rows) column.push_back(row[q]);
      ASSERT_TRUE(ValidateHierarchy(h, column).ok())
          << ValidateHierarchy(h, column).ToString();
      for (const std::string& v : column) {
        for (int l = 0; l <= h.max_level(); ++l) {
          ASSERT_EQ(Gen(h, v, l), testing::OracleGeneralize(ref, v, l));
        }
      }
      for (const std::string& a : column) {
        for (const std::string& b : column) {
          for (int l = 0; l < h.max_level(); ++l) {
            if (Gen(h, a, l) == Gen(h, b, l)) {
              ASSERT_EQ(Gen(h, a, l + 1), Gen(h, b, l + 1));
            }
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace prgain
