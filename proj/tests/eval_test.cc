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

#include "euphrase/eval.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "euphrase/error.h"
#include "json.hpp"
#include "oracles.h"
#include "test_util.h"

namespace euphrase {
namespace {

RankedList Ranked(const std::vector<std::string> &phrases) {
  std::vector<double> weights;
  for (size_t i = 0; i < phrases.size(); ++i) {
    weights.push_back(static_cast<double>(phrases.size() - i));
  }
  return MakeRankedList(phrases, weights, RankMethod::kEpd);
}

std::string Surface(std::string unit) {
  std::replace(unit.begin(), unit.end(), '_', ' ');
  return unit;
}

std::vector<std::string> Numbered(const std::string &prefix, size_t n) {
  std::vector<std::string> out;
  for (size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i) + "_x");
  return out;
}

TEST(PrecisionAtKTest, ThreeOfTen) {
  const auto truth = GroundTruth::Create({"t0 x", "t1 x", "t2 x"});
  std::vector<std::string> phrases = {"t0_x", "n0_x", "t1_x", "n1_x", "n2_x",
                                      "n3_x", "n4_x", "t2_x", "n5_x", "n6_x"};
  EXPECT_DOUBLE_EQ(PrecisionAtK(Ranked(phrases), truth, 10), 0.3);
}

TEST(PrecisionAtKTest, ShortListKeepsDenominator) {
  const auto truth = GroundTruth::Create(
      {"p0 x", "p1 x", "p2 x", "p3 x", "p4 x"});
  EXPECT_DOUBLE_EQ(PrecisionAtK(Ranked(Numbered("p", 5)), truth, 10), 0.5);
}

TEST(PrecisionAtKTest, NoHits) {
  const auto truth = GroundTruth::Create({"black tar"});
  EXPECT_DOUBLE_EQ(PrecisionAtK(Ranked(Numbered("n", 10)), truth, 10), 0.0);
  EXPECT_DOUBLE_EQ(PrecisionAtK(RankedList(), truth, 10), 0.0);
}

TEST(PrecisionAtKTest, ZeroKThrows) {
  const auto truth = GroundTruth::Create({"black tar"});
  EXPECT_THROW(PrecisionAtK(Ranked({"black_tar"}), truth, 0), Error);
}

TEST(PrecisionAtKTest, PrependingTruthNeverLowersPrecision) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::string> pool = Numbered("c", 30);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<std::string> surface = {"fresh truth"};
    for (size_t i = 0; i < 8; ++i) surface.push_back(Surface(pool[i]));
    const auto truth = GroundTruth::Create(surface);
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::vector<std::string> ranked(pool.begin(),
                                          pool.begin() + rng() % 25);
    auto longer = ranked;
    longer.insert(longer.begin(), "fresh_truth");
    for (size_t k : {1, 5, 10, 20}) {
      EXPECT_GE(PrecisionAtK(Ranked(longer), truth, k),
                PrecisionAtK(Ranked(ranked), truth, k));
    }
  }
}

TEST(PrecisionAtKTest, MatchesOracle) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::string> pool = Numbered("c", 60);
    std::shuffle(pool.begin(), pool.end(), rng);
    const size_t n_truth = 2 + rng() % 20;
    std::set<std::string> truth_units(pool.begin(), pool.begin() + n_truth);
    std::vector<std::string> surface;
    for (const auto &u : truth_units) surface.push_back(Surface(u));
    const auto truth = GroundTruth::Create(surface);
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::vector<std::string> ranked(pool.begin(),
                                          pool.begin() + rng() % 60);
    const size_t k = 1 + rng() % 70;
    EXPECT_DOUBLE_EQ(PrecisionAtK(Ranked(ranked), truth, k),
                     oracle::PrecisionAtK(ranked, truth_units, k));
  }
}

TEST(GroundTruthTest, MatchesUnitsAndSurfaceForms) {
  const auto truth = GroundTruth::Create({"Black Tar", "  og  kush "});
  EXPECT_EQ(truth.size(), 2u);
  EXPECT_TRUE(truth.Contains("black_tar"));
  EXPECT_TRUE(truth.Contains("black tar"));
  EXPECT_TRUE(truth.Contains("og_kush"));
  EXPECT_FALSE(truth.Contains("black"));
}

TEST(GroundTruthTest, RejectsBadLists) {
  EXPECT_THROW(GroundTruth::Create({}), Error);
  EXPECT_THROW(GroundTruth::Create({"black tar", "heroin"}), Error);
}

TEST(GroundTruthTest, LoadsFile) {
  testing::TempDir dir;
  testing::WriteFile(dir / "truth.txt", "black tar\n\nblue dream\n");
  const auto truth = LoadGroundTruth(dir / "truth.txt");
  EXPECT_EQ(truth.size(), 2u);
  EXPECT_THROW(LoadGroundTruth(dir / "absent.txt"), Error);
}

TEST(EvaluateTest, ReportAndFormats) {
  const auto truth = GroundTruth::Create({"black tar", "blue dream"});
  RankedList ranked = Ranked({"black_tar", "a_b", "blue_dream"});
  ranked.method = RankMethod::kWord2vec;
  const std::vector<size_t> ks = {1, 2, 4};
  const EvalReport report = Evaluate(ranked, truth, ks);
  ASSERT_EQ(report.rows.size(), 3u);
  EXPECT_EQ(report.rows[0].hits, 1u);
  EXPECT_DOUBLE_EQ(report.rows[1].precision, 0.5);
  EXPECT_EQ(report.rows[2].hits, 2u);
  EXPECT_DOUBLE_EQ(report.rows[2].precision, 0.5);

  std::ostringstream tsv;
  WriteEvalTsv(report, tsv);
  EXPECT_EQ(tsv.str(),
            "method\tk\thits\tprecision\n"
            "word2vec\t1\t1\t1.000000\n"
            "word2vec\t2\t1\t0.500000\n"
            "word2vec\t4\t2\t0.500000\n");

  std::ostringstream json;
  WriteEvalJson(report, json);
  const auto doc = nlohmann::json::parse(json.str());
  EXPECT_EQ(doc["method"], "word2vec");
  ASSERT_EQ(doc["results"].size(), 3u);
  EXPECT_EQ(doc["results"][2]["k"], 4);
  EXPECT_EQ(doc["results"][2]["hits"], 2);
  EXPECT_DOUBLE_EQ(doc["results"][2]["precision"].get<double>(), 0.5);
}

TEST(EvaluateTest, DefaultKs) {
  const auto truth = GroundTruth::Create({"black tar"});
  const EvalReport report = Evaluate(Ranked({"black_tar"}), truth);
  ASSERT_EQ(report.rows.size(), 4u);
  EXPECT_EQ(report.rows[3].k, 50u);
  EXPECT_DOUBLE_EQ(report.rows[3].precision, 0.02);
}

}  // namespace
}  // namespace euphrase
