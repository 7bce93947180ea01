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

// Black-box tests of the prgain executable: exit codes and artifacts.

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace {

using ::testing::HasSubstr;
using ::testing::Not;

const std::string kCli = PRGAIN_CLI_PATH;
const std::string kFixtures = std::string(PRGAIN_SOURCE_DIR) + "/fixtures/";
const std::string kTable1 = kFixtures + "table1.csv";
const std::string kConfig1 = kFixtures + "table1.config.json";

std::string Tmp(const std::string& name) {
  return ::testing::TempDir() + "/cli_" + name;
}

// Runs the CLI with `args`, capturing stdout and stderr into `output`.
int RunCli(const std::string& args, std::string* output = nullptr) {
  const std::string log = Tmp("log.txt");
  const std::string cmd = kCli + " " + args + " > " + log + " 2>&1";
  const int status = std::system(cmd.c_str());
  if (output != nullptr) {
    std::ifstream in(log);
    std::ostringstream s;
    s << in.rdbuf();
    *output = s.str();
  }
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void Write(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

std::string Anonymize(const std::string& tag, const std::string& extra = "") {
  return "anonymize --input " + kTable1 + " --config " + kConfig1 +
         " --output " + Tmp(tag + ".csv") + " --report " +
         Tmp(tag + ".json") + " " + extra;
}

TEST(CliAnonymizeTest, FixtureRunSucceeds) {
  ASSERT_EQ(RunCli(Anonymize("fixture", "--no-timing")), 0);
  const std::string report = Slurp(Tmp("fixture.json"));
  EXPECT_THAT(report, HasSubstr("\"notation\": \"<Age^1, Gender^0, ZIP^0>\""));
  EXPECT_THAT(report, HasSubstr("\"privacy_achieved\": 0.9"));
  EXPECT_THAT(report, HasSubstr("\"wall_time_ms\": 0.0"));
  EXPECT_THAT(report, Not(HasSubstr("\"branches\"")));
  EXPECT_THAT(Slurp(Tmp("fixture.csv")),
              HasSubstr("13053,31-40,Male,Cancer\n"));
}

TEST(CliAnonymizeTest, TraceAllDumpsBranches) {
  ASSERT_EQ(RunCli(Anonymize("all", "--trace all --max-branches 0")), 0);
  EXPECT_THAT(Slurp(Tmp("all.json")), HasSubstr("\"branches\""));
}

TEST(CliAnonymizeTest, ResidualOverrides) {
  ASSERT_EQ(RunCli(Anonymize("keep", "--residual keep")), 0);
  ASSERT_EQ(RunCli(Anonymize("suppress", "--residual=suppress")), 0);
  EXPECT_THAT(Slurp(Tmp("suppress.csv")), HasSubstr("*****,*,*,"));
  EXPECT_EQ(RunCli(Anonymize("bad", "--residual hide")), 1);
}

TEST(CliAnonymizeTest, RepeatedRunsAreByteIdentical) {
  ASSERT_EQ(RunCli(Anonymize("r1", "--no-timing")), 0);
  ASSERT_EQ(RunCli(Anonymize("r2", "--no-timing")), 0);
  EXPECT_EQ(Slurp(Tmp("r1.csv")), Slurp(Tmp("r2.csv")));
  EXPECT_EQ(Slurp(Tmp("r1.json")), Slurp(Tmp("r2.json")));
}

TEST(CliAnonymizeTest, FewerRowsThanKExitsTwo) {
  Write(Tmp("one.csv"), "ZIP,Age,Gender,Condition\n13053,28,Male,Flu\n");
  std::string out;
  EXPECT_EQ(RunCli("anonymize --input " + Tmp("one.csv") + " --config " +
                    kConfig1 + " --output " + Tmp("o.csv") + " --report " +
                    Tmp("o.json"),
                &out),
            2);
  EXPECT_THAT(out, HasSubstr("not possible"));
}

TEST(CliAnonymizeTest, InvalidConfigExitsOne) {
  Write(Tmp("k1.json"),
        R"({"k":1,"quasi_identifiers":[{"name":"ZIP","hierarchy":)"
        R"({"kind":"mask","max_level":2}}],"sensitive":["Condition"]})");
  std::string out;
  EXPECT_EQ(RunCli("anonymize --input " + kTable1 + " --config " + Tmp("k1.json") +
                    " --output " + Tmp("o.csv") + " --report " + Tmp("o.json"),
                &out),
            1);
  EXPECT_THAT(out, HasSubstr("/k"));
}

TEST(CliAnonymizeTest, ConfigNamingAbsentColumnExitsOne) {
  Write(Tmp("absent.json"),
        R"({"k":2,"quasi_identifiers":[{"name":"Postcode","hierarchy":)"
        R"({"kind":"mask","max_level":2}}],"sensitive":["Condition"]})");
  std::string out;
  EXPECT_EQ(RunCli("anonymize --input " + kTable1 + " --config " +
                    Tmp("absent.json") + " --output " + Tmp("o.csv") +
                    " --report " + Tmp("o.json"),
                &out),
            1);
  EXPECT_THAT(out, HasSubstr("Postcode"));
}

TEST(CliAnonymizeTest, MalformedCsvExitsOne) {
  Write(Tmp("ragged.csv"), "ZIP,Age,Gender,Condition\n13053,28\n");
  EXPECT_EQ(RunCli("anonymize --input " + Tmp("ragged.csv") + " --config " +
                kConfig1 + " --output " + Tmp("o.csv") + " --report " +
                Tmp("o.json")),
            1);
}

TEST(CliAnonymizeTest, IoFailuresExitFour) {
  EXPECT_EQ(RunCli("anonymize --input /nonexistent/in.csv --config " + kConfig1 +
                " --output " + Tmp("o.csv") + " --report " + Tmp("o.json")),
            4);
  EXPECT_EQ(RunCli("anonymize --input " + kTable1 + " --config " + kConfig1 +
                " --output /nonexistent/dir/o.csv --report " + Tmp("o.json")),
            4);
  EXPECT_EQ(RunCli("anonymize --input " + kTable1 + " --config " + kConfig1 +
                " --output " + Tmp("o.csv") +
                " --report /nonexistent/dir/o.json"),
            4);
}

TEST(CliUsageTest, BadArgumentsExitOne) {
  EXPECT_EQ(RunCli(""), 1);
  EXPECT_EQ(RunCli("frobnicate"), 1);
  EXPECT_EQ(RunCli("anonymize --input " + kTable1), 1);
  EXPECT_EQ(RunCli(Anonymize("x", "--k 1")), 1);
  EXPECT_EQ(RunCli("--help"), 0);
}

TEST(CliVerifyTest, AnonymizedOutputPasses) {
  ASSERT_EQ(RunCli(Anonymize("verify")), 0);
  EXPECT_EQ(RunCli("verify --input " + Tmp("verify.csv") + " --config " +
                kConfig1 + " --k 3"),
            0);
}

TEST(CliVerifyTest, RawTableFailsWithOffenders) {
  std::string out;
  EXPECT_EQ(
      RunCli("verify --input " + kTable1 + " --config " + kConfig1 + " --k 2",
          &out),
      3);
  EXPECT_THAT(out, HasSubstr("\"offending\""));
  EXPECT_THAT(out, HasSubstr("\"size\": 1"));
  EXPECT_EQ(
      RunCli("verify --input " + kTable1 + " --config " + kConfig1 + " --k 21"),
      3);
}

TEST(CliVerifyTest, BadInputs) {
  EXPECT_EQ(RunCli("verify --input /nonexistent.csv --config " + kConfig1), 4);
  Write(Tmp("noqi.csv"), "a,b\n1,2\n");
  EXPECT_EQ(RunCli("verify --input " + Tmp("noqi.csv") + " --config " + kConfig1),
            1);
}

TEST(CliEvaluateTest, IdenticalFilesHaveZeroDelta) {
  std::string out;
  ASSERT_EQ(RunCli("evaluate --original " + kTable1 + " --anonymized " + kTable1 +
                    " --class-attr Condition --seed 42 --split 1.0 --output " +
                    Tmp("eval.json"),
                &out),
            0);
  EXPECT_THAT(Slurp(Tmp("eval.json")), HasSubstr("\"delta_percent\": 0.0"));
  EXPECT_THAT(out, HasSubstr("\"delta_percent\": 0.0"));
}

TEST(CliEvaluateTest, MergedFixtureHasPositiveDelta) {
  Write(Tmp("sep.csv"), "x,c\na,p\na,p\nb,q\nb,q\n");
  Write(Tmp("merged.csv"), "x,c\n*,p\n*,p\n*,q\n*,q\n");
  ASSERT_EQ(RunCli("evaluate --original " + Tmp("sep.csv") + " --anonymized " +
                Tmp("merged.csv") + " --class-attr c --split 1 --output " +
                Tmp("merged.json")),
            0);
  EXPECT_THAT(Slurp(Tmp("merged.json")),
              HasSubstr("\"delta_percent\": 50.0"));
}

TEST(CliEvaluateTest, FixedSeedRerunsMatch) {
  const std::string base = "evaluate --original " + kTable1 +
                           " --anonymized " + kTable1 +
                           " --class-attr Condition --seed 7 --no-timing";
  ASSERT_EQ(RunCli(base + " --output " + Tmp("e1.json")), 0);
  ASSERT_EQ(RunCli(base + " --output " + Tmp("e2.json")), 0);
  EXPECT_EQ(Slurp(Tmp("e1.json")), Slurp(Tmp("e2.json")));
}

TEST(CliEvaluateTest, Errors) {
  const std::string base =
      "evaluate --original " + kTable1 + " --anonymized " + kTable1;
  EXPECT_EQ(RunCli(base + " --class-attr Missing"), 1);
  EXPECT_EQ(RunCli(base), 1);
  EXPECT_EQ(RunCli(base + " --class-attr Condition --split 0"), 1);
  EXPECT_EQ(RunCli("evaluate --original /nonexistent.csv --anonymized " +
                kTable1 + " --class-attr Condition"),
            4);
}

}  // namespace
