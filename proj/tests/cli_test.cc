// Copyright 2026 The ProFL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "profl/cli.h"
#include "profl/io.h"
#include "worked_examples.h"

namespace profl {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("profl_cli_" + std::string(::testing::UnitTest::GetInstance()
                                           ->current_test_info()
                                           ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    WriteBugDirectory(testing::Math40NineTestBug(), dir_ / "math40");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }
  std::string Bug(const std::string& file) const {
    return (dir_ / "math40" / file).string();
  }

  fs::path dir_;
};

TEST_F(CliTest, UnknownSubcommandIsUsageError) {
  const CliRun r = Cli({"frobnicate"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_EQ(r.err.rfind("ERROR usage: ", 0), 0u) << r.err;
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"rank", "--spectra", Bug("spectra.json")}).code, kExitUsage);
  EXPECT_EQ(Cli({"sbfl", "--spectra", Bug("spectra.json"), "--formula", "bogus"}).code,
            kExitUsage);
}

TEST_F(CliTest, HelpExitsZero) {
  const CliRun r = Cli({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("simulate-partial"), std::string::npos);
}

TEST_F(CliTest, RankMath40PutsBuggyFirst) {
  const CliRun r = Cli({"rank", "--spectra", Bug("spectra.json"), "--matrix",
                     Bug("matrix.json"), "--base-scores", Bug("base_scores.json"),
                     "-o", Path("ranking.json"), "--stages", Path("stages.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  const Json ranking = Json::parse(ReadFile(Path("ranking.json")));
  EXPECT_EQ(ranking["v"], 1);
  EXPECT_EQ(ranking["entries"][0]["element"], "e4");
  EXPECT_EQ(ranking["entries"][0]["group"], "CleanFix");
  EXPECT_EQ(ranking["entries"][0]["worst_rank"], 1);
  const Json stages = Json::parse(ReadFile(Path("stages.json")));
  EXPECT_EQ(stages["v"], 1);
}

TEST_F(CliTest, ValidationErrorsExitOne) {
  WriteTextFile(Path("bad.json"), R"({"v": 1, "tests": [], "statements": {}})");
  const CliRun r = Cli({"sbfl", "--spectra", Path("bad.json")});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_EQ(r.err.rfind("ERROR validation: ", 0), 0u) << r.err;
  const CliRun missing = Cli({"sbfl", "--spectra", Path("nope.json")});
  EXPECT_EQ(missing.code, kExitValidation);
  EXPECT_EQ(missing.err.rfind("ERROR io: ", 0), 0u) << missing.err;
}

TEST_F(CliTest, SbflCsvSortedDescending) {
  const CliRun r = Cli({"sbfl", "--spectra", Bug("spectra.json"), "--formula", "ochiai",
                     "--level", "statement"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.substr(0, 9), "id,score\n");
  EXPECT_NE(r.out.find("e1.s1,1\n"), std::string::npos) << r.out;
  const CliRun elements = Cli({"sbfl", "--spectra", Bug("spectra.json")});
  EXPECT_NE(elements.out.find("e1,1\ne2,1\n"), std::string::npos) << elements.out;
}

TEST_F(CliTest, MbflWritesRanking) {
  for (const char* technique : {"muse", "metallaxis", "mcbfl"}) {
    const CliRun r = Cli({"mbfl", "--technique", technique, "--spectra",
                       Bug("spectra.json"), "--matrix", Bug("matrix.json")});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const Json doc = Json::parse(r.out);
    EXPECT_EQ(doc["v"], 1);
    EXPECT_EQ(doc["entries"].size(), 5u);
  }
}

TEST_F(CliTest, CategorizeCsvs) {
  const CliRun r = Cli({"categorize", "--matrix", Bug("matrix.json"), "--spectra",
                     Bug("spectra.json"), "--patches-out", Path("p.csv"),
                     "--elements-out", Path("e.csv")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(ReadFile(Path("p.csv")),
            "patch,target,group\nP1,e1,NegFix\nP2,e2,NegFix\nP3,e3,NoneFix\n"
            "P4,e4,CleanFix\nP5,e4,NoisyFix\nP6,e5,NoisyFix\n");
  EXPECT_EQ(ReadFile(Path("e.csv")),
            "element,group,no_patch_evidence\ne1,NegFix,false\ne2,NegFix,false\n"
            "e3,NoneFix,false\ne4,CleanFix,false\ne5,NoisyFix,false\n");
  const CliRun finer = Cli({"categorize", "--matrix", Bug("matrix.json"), "--finer",
                         "--rule", "r1"});
  EXPECT_NE(finer.out.find("P4,e4,CleanAllFix"), std::string::npos);
  EXPECT_NE(finer.out.find("e4,CleanAllFix,false"), std::string::npos);
}

TEST_F(CliTest, SimulatePartialMatchesHandMatrix) {
  const CliRun r = Cli({"simulate-partial", "--matrix", Bug("matrix.json"), "--order",
                     "org", "-o", Path("partial.json"), "--cost", Path("cost.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(LoadPatchMatrix(Path("partial.json")), testing::Math40PartialMatrix());
  const Json cost = Json::parse(ReadFile(Path("cost.json")));
  EXPECT_EQ(cost["executed_cells"], 16);
  EXPECT_EQ(cost["total_cells"], 54);
  const CliRun again = Cli({"simulate-partial", "--matrix", Path("partial.json")});
  EXPECT_EQ(again.code, kExitValidation);
  EXPECT_EQ(again.err.rfind("ERROR not-full-matrix: ", 0), 0u) << again.err;
}

TEST_F(CliTest, SynthThenEval) {
  ASSERT_EQ(Cli({"synth", "--out", Path("corpus"), "--seed", "7", "--n-bugs", "10"}).code,
            kExitOk);
  fs::create_directories(dir_ / "corpus" / "incomplete");
  const CliRun r = Cli({"eval", "--dataset", Path("corpus"), "--jobs", "2",
                     "--bug-report", Path("bugs.csv"), "--subject-report",
                     Path("subjects.csv"), "--ratio-report", Path("ratio.csv")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::vector<std::string> lines;
  std::stringstream ss(r.out);
  for (std::string line; std::getline(ss, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 7u) << r.out;
  EXPECT_EQ(lines[0], "technique,top1,top3,top5,mfr,mar");
  EXPECT_EQ(lines[1].substr(0, 6), "profl,");
  EXPECT_EQ(lines[5].substr(0, 6), "mcbfl,");
  EXPECT_EQ(lines[6], "# skipped_bugs=1");
  for (std::size_t i = 1; i <= 5; ++i) {
    EXPECT_EQ(std::count(lines[i].begin(), lines[i].end(), ','), 5);
  }
  EXPECT_EQ(ReadFile(Path("bugs.csv")).substr(0, 34),
            "technique,bug,first_rank,avg_rank\n");
}

TEST_F(CliTest, EvalWithoutUsableBugs) {
  fs::create_directories(dir_ / "empty");
  const CliRun r = Cli({"eval", "--dataset", Path("empty")});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_EQ(r.err.rfind("ERROR empty-input: ", 0), 0u) << r.err;
  EXPECT_EQ(Cli({"eval", "--dataset", Path("empty"), "--techniques", "foo"}).code,
            kExitUsage);
}

TEST_F(CliTest, SynthAcceptsTomlConfig) {
  WriteTextFile(Path("gen.toml"),
                "preset = \"noisy\"\nseed = 3\nn_tests = 15\n"
                "[group_profile.buggy]\nCleanFix = 1.0\n");
  ASSERT_EQ(Cli({"synth", "--config", Path("gen.toml"), "--out", Path("one")}).code,
            kExitOk);
  const BugData bug = LoadBugDirectory(dir_ / "one");
  EXPECT_EQ(bug.spectra.tests().size(), 15u);
  WriteTextFile(Path("gen.json"),
                R"({"preset": "noisy", "seed": 3, "n_tests": 15,
                    "group_profile": {"buggy": {"CleanFix": 1.0}}})");
  ASSERT_EQ(Cli({"synth", "--config", Path("gen.json"), "--out", Path("two")}).code,
            kExitOk);
  EXPECT_EQ(ReadFile(dir_ / "one" / "matrix.json"),
            ReadFile(dir_ / "two" / "matrix.json"));
  WriteTextFile(Path("bad.toml"), "sed = 3\n");
  const CliRun bad = Cli({"synth", "--config", Path("bad.toml"), "--out", Path("x")});
  EXPECT_EQ(bad.code, kExitValidation);
  EXPECT_EQ(bad.err.rfind("ERROR config: ", 0), 0u) << bad.err;
}

TEST_F(CliTest, FlagConfigFileFlagsWin) {
  WriteTextFile(Path("rank.toml"),
                "spectra = \"" + Bug("spectra.json") + "\"\nmatrix = \"" +
                    Bug("matrix.json") + "\"\nrule = \"r9\"\n");
  EXPECT_EQ(Cli({"rank", "--config", Path("rank.toml")}).code, kExitUsage);
  const CliRun ok = Cli({"rank", "--config", Path("rank.toml"), "--rule", "r1",
                      "--base-scores", Bug("base_scores.json")});
  ASSERT_EQ(ok.code, kExitOk) << ok.err;
  EXPECT_EQ(Json::parse(ok.out)["entries"][0]["group"], "CleanAllFix");
  WriteTextFile(Path("rank.json"), R"({"spectra": ")" + Bug("spectra.json") +
                                       R"(", "matrix": ")" + Bug("matrix.json") +
                                       R"(", "base-scores": ")" +
                                       Bug("base_scores.json") + R"("})");
  const CliRun json = Cli({"rank", "--config", Path("rank.json")});
  ASSERT_EQ(json.code, kExitOk) << json.err;
  EXPECT_EQ(Json::parse(json.out)["entries"][0]["element"], "e4");
}

TEST_F(CliTest, WilcoxonStats) {
  WriteTextFile(Path("a.json"), "[1, 2, 3, 4, 5, 6]");
  WriteTextFile(Path("b.json"), "[0, 0, 0, 0, 0, 0]");
  const CliRun r = Cli({"stats", "wilcoxon", "--a", Path("a.json"), "--b", Path("b.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["v"], 1);
  EXPECT_DOUBLE_EQ(doc["p_value"].get<double>(), 0.03125);
  EXPECT_EQ(doc["method"], "exact");
  const CliRun same = Cli({"stats", "wilcoxon", "--a", Path("a.json"), "--b", Path("a.json")});
  EXPECT_DOUBLE_EQ(Json::parse(same.out)["p_value"].get<double>(), 1.0);
  WriteTextFile(Path("c.json"), "[1, 2]");
  EXPECT_EQ(Cli({"stats", "wilcoxon", "--a", Path("a.json"), "--b", Path("c.json")}).code,
            kExitValidation);
  EXPECT_EQ(Cli({"stats"}).code, kExitUsage);
}

TEST(CsvFieldTest, QuotesPerRfc4180) {
  EXPECT_EQ(CsvField("plain"), "plain");
  EXPECT_EQ(CsvField("a,b"), "\"a,b\"");
  EXPECT_EQ(CsvField("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(CsvField("two\nlines"), "\"two\nlines\"");
}

TEST(BinaryTest, ExitCodesFromProcess) {
  const std::string binary = PROFL_BINARY;
  const int unknown = std::system((binary + " frobnicate 2>/dev/null").c_str());
  EXPECT_EQ(WEXITSTATUS(unknown), kExitUsage);
  const int help = std::system((binary + " --help >/dev/null").c_str());
  EXPECT_EQ(WEXITSTATUS(help), kExitOk);
}

}  // namespace
}  // namespace profl
