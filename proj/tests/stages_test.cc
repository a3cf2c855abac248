// Copyright 2026 The Euphrase Authors.
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

#include "euphrase/stages.h"

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <sstream>

#include "euphrase/config.h"
#include "euphrase/error.h"
#include "euphrase/synthetic.h"
#include "test_util.h"

namespace euphrase {
namespace {

namespace fs = std::filesystem;

// A synthetic benchmark bundle shared by every test in this file.
class StagesTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = new testing::TempDir;
    WriteSyntheticBundle(GenerateSyntheticCorpus(SyntheticConfig()),
                         dir_->path());
  }
  static void TearDownTestSuite() {
    delete dir_;
    dir_ = nullptr;
  }

  static fs::path Bundle() { return dir_->path(); }

  static PipelineConfig Config(const std::string &out) {
    PipelineConfig config = LoadConfig(Bundle() / "pipeline.conf");
    config.out_dir = Bundle() / out;
    return config;
  }

  // Runs the CLI, returning its exit code; stderr goes to `err` if given.
  static int Cli(const std::string &args, std::string *err = nullptr) {
    const fs::path err_path = Bundle() / "cli.err";
    const std::string command = std::string(EUPHRASE_CLI) + " " + args +
                                " > /dev/null 2> " + err_path.string();
    const int status = std::system(command.c_str());
    if (err) *err = testing::ReadFile(err_path);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  static std::string Read(const fs::path &out, std::string_view name) {
    return testing::ReadFile(out / std::string(name));
  }

 private:
  static testing::TempDir *dir_;
};

testing::TempDir *StagesTest::dir_ = nullptr;

const std::string_view kStageArtifacts[] = {
    artifacts::kPhrases, artifacts::kInventory, artifacts::kSegmented,
    artifacts::kEmbeddings, artifacts::kPool, artifacts::kContexts};

TEST_F(StagesTest, CliRunsEverything) {
  const std::string conf = (Bundle() / "pipeline.conf").string();
  const fs::path out = Bundle() / "cli_all";
  std::string err;
  ASSERT_EQ(Cli("--config " + conf + " --out " + out.string() + " all", &err),
            0)
      << err;
  for (std::string_view name : kStageArtifacts) {
    EXPECT_TRUE(fs::exists(out / std::string(name))) << name;
  }
  EXPECT_TRUE(fs::exists(out / std::string(artifacts::kResolvedConfig)));
  EXPECT_TRUE(fs::exists(RankedPath(out, RankMethod::kEpd)));
  EXPECT_TRUE(fs::exists(EvalTsvPath(out, RankMethod::kEpd)));
  EXPECT_TRUE(fs::exists(EvalJsonPath(out, RankMethod::kEpd)));
  EXPECT_EQ(Read(out, "eval_epd.tsv").rfind("method\tk\thits\tprecision\n", 0),
            0u);
}

TEST_F(StagesTest, CliReportsMissingContexts) {
  const std::string conf = (Bundle() / "pipeline.conf").string();
  const std::string out = (Bundle() / "cli_partial").string();
  const std::string base = "--config " + conf + " --out " + out + " ";
  ASSERT_EQ(Cli(base + "mine"), 0);
  ASSERT_EQ(Cli(base + "embed"), 0);
  ASSERT_EQ(Cli(base + "preselect"), 0);
  std::string err;
  EXPECT_EQ(Cli(base + "rank", &err), 2);
  EXPECT_NE(err.find("contexts"), std::string::npos) << err;
}

TEST_F(StagesTest, CliRejectsBadConfig) {
  const fs::path conf = Bundle() / "bad.conf";
  testing::WriteFile(conf, "windw = 5\n");
  std::string err;
  EXPECT_EQ(Cli("--config " + conf.string() + " mine", &err), 1);
  EXPECT_NE(err.find("windw"), std::string::npos) << err;
  EXPECT_EQ(Cli("--config " + (Bundle() / "pipeline.conf").string() +
                " --set windw=5 mine"),
            1);
  EXPECT_EQ(Cli("no-such-stage"), 1);
  EXPECT_EQ(Cli("--help"), 0);
}

TEST_F(StagesTest, CliWritesSyntheticBundle) {
  const fs::path dir = Bundle() / "synth_out";
  ASSERT_EQ(Cli("synth " + dir.string() + " --docs 50 --synth-seed 3"), 0);
  EXPECT_TRUE(fs::exists(dir / "pipeline.conf"));
  EXPECT_TRUE(fs::exists(dir / "corpus.txt"));
}

TEST_F(StagesTest, MissingArtifactNamesTheStage) {
  const PipelineConfig config = Config("missing");
  try {
    RunStage(Stage::kEmbed, config);
    FAIL() << "expected MissingArtifactError";
  } catch (const MissingArtifactError &e) {
    EXPECT_EQ(e.stage(), "mine");
    EXPECT_NE(std::string(e.what()).find("segmented.jsonl"),
              std::string::npos);
  }
}

TEST_F(StagesTest, EvalNeedsTruth) {
  PipelineConfig config = Config("no_truth");
  config.truth_path.clear();
  std::ostringstream log;
  RunStage(Stage::kAll, config, &log);
  EXPECT_TRUE(fs::exists(RankedPath(config.out_dir, RankMethod::kEpd)));
  EXPECT_FALSE(fs::exists(EvalTsvPath(config.out_dir, RankMethod::kEpd)));
  EXPECT_THROW(RunStage(Stage::kEval, config), ConfigError);
}

TEST_F(StagesTest, AllMatchesStageByStageAndIsRepeatable) {
  const PipelineConfig whole = Config("whole");
  RunStage(Stage::kAll, whole);
  const PipelineConfig steps = Config("steps");
  for (Stage stage : {Stage::kMine, Stage::kEmbed, Stage::kPreselect,
                      Stage::kContexts, Stage::kRank, Stage::kEval}) {
    RunStage(stage, steps);
  }
  std::vector<std::string> names(std::begin(kStageArtifacts),
                                 std::end(kStageArtifacts));
  names.push_back("ranked_epd.tsv");
  names.push_back("eval_epd.tsv");
  names.push_back("eval_epd.json");
  std::map<std::string, std::string> first;
  for (const std::string &name : names) {
    first[name] = Read(whole.out_dir, name);
    EXPECT_FALSE(first[name].empty()) << name;
    EXPECT_EQ(first[name], Read(steps.out_dir, name)) << name;
  }
  RunStage(Stage::kAll, whole);
  for (const std::string &name : names) {
    EXPECT_EQ(first[name], Read(whole.out_dir, name)) << name;
  }
}

TEST_F(StagesTest, EveryMethodRanks) {
  PipelineConfig config = Config("methods");
  RunStage(Stage::kAll, config);
  for (RankMethod method :
       {RankMethod::kWord2vec, RankMethod::kEigen, RankMethod::kRankAll}) {
    config.rank_method = method;
    RunStage(Stage::kRank, config);
    RunStage(Stage::kEval, config);
    std::istringstream ranked(testing::ReadFile(RankedPath(config.out_dir, method)));
    const RankedList list = ReadRankedTsv(ranked);
    EXPECT_EQ(list.method, method);
    EXPECT_FALSE(list.entries.empty()) << RankMethodName(method);
    EXPECT_TRUE(fs::exists(EvalJsonPath(config.out_dir, method)));
  }
}

TEST_F(StagesTest, ResolvedConfigParses) {
  const PipelineConfig config = Config("resolved");
  RunStage(Stage::kMine, config);
  const PipelineConfig reread =
      LoadConfig(config.out_dir / std::string(artifacts::kResolvedConfig));
  std::ostringstream a, b;
  WriteResolvedConfig(config, a);
  WriteResolvedConfig(reread, b);
  EXPECT_EQ(a.str(), b.str());
}

}  // namespace
}  // namespace euphrase
