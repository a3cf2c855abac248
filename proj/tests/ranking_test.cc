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

#include "euphrase/ranking.h"

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "euphrase/error.h"
#include "oracles.h"

namespace euphrase {
namespace {

using Phrases = std::vector<std::string>;

// Serves a fixed matrix: sentence m is identified by its doc_id, candidates
// by name.
class TableScorer : public Scorer {
 public:
  explicit TableScorer(std::map<std::string, std::vector<double>> rows)
      : rows_(std::move(rows)) {}

  void set_order(Phrases order) { order_ = std::move(order); }

  std::vector<double> ScoreBatch(std::span<const std::string> candidates,
                                 const MaskedSentence &sentence) const override {
    const std::vector<double> &row = rows_.at(sentence.doc_id);
    std::vector<double> out;
    for (const std::string &c : candidates) {
      const size_t j = std::find(order_.begin(), order_.end(), c) -
                       order_.begin();
      out.push_back(row.at(j));
    }
    return out;
  }

 private:
  std::map<std::string, std::vector<double>> rows_;
  Phrases order_;
};

std::vector<MaskedSentence> Sentences(size_t n) {
  std::vector<MaskedSentence> out(n);
  for (size_t i = 0; i < n; ++i) out[i].doc_id = std::to_string(i);
  return out;
}

CandidatePool Pool(const std::vector<std::pair<std::string, double>> &items) {
  CandidatePool pool;
  for (const auto &[p, s] : items) pool.entries.push_back({p, s});
  return pool;
}

Phrases Names(const RankedList &ranked) {
  Phrases out;
  for (const RankedEntry &e : ranked.entries) out.push_back(e.phrase);
  return out;
}

TEST(RankMethodTest, Names) {
  for (RankMethod m : {RankMethod::kEpd, RankMethod::kWord2vec,
                       RankMethod::kEigen, RankMethod::kRankAll}) {
    EXPECT_EQ(ParseRankMethod(RankMethodName(m)), m);
  }
  EXPECT_EQ(RankMethodName(RankMethod::kRankAll), "rank-all");
  EXPECT_FALSE(ParseRankMethod("sentiment"));
}

TEST(RankEpdTest, SingleSentence) {
  TableScorer scorer({{"0", {0.2, 0.8}}});
  scorer.set_order({"a_b", "c_d"});
  const RankedList ranked =
      RankEpd(Pool({{"a_b", 0.9}, {"c_d", 0.1}}), Sentences(1), scorer);
  ASSERT_EQ(ranked.entries.size(), 2u);
  EXPECT_EQ(ranked.entries[0].phrase, "c_d");
  EXPECT_DOUBLE_EQ(ranked.entries[0].weight, 0.8);
  EXPECT_EQ(ranked.entries[1].phrase, "a_b");
  EXPECT_DOUBLE_EQ(ranked.entries[1].weight, 0.2);
  EXPECT_EQ(ranked.method, RankMethod::kEpd);
}

TEST(RankEpdTest, WeightsAdd) {
  TableScorer scorer({{"0", {0.2, 0.8}}, {"1", {0.3, 0.7}}});
  scorer.set_order({"a_b", "c_d"});
  const RankedList ranked =
      RankEpd(Pool({{"a_b", 0.9}, {"c_d", 0.1}}), Sentences(2), scorer);
  EXPECT_DOUBLE_EQ(ranked.entries[1].weight, 0.5);
}

TEST(RankEpdTest, Errors) {
  TableScorer scorer({{"0", {1.0}}});
  scorer.set_order({"a_b"});
  EXPECT_THROW(RankEpd(Pool({{"a_b", 1}}), {}, scorer), Error);
  EXPECT_THROW(RankEpd(CandidatePool(), Sentences(1), scorer), Error);
}

TEST(RankEpdTest, TiesAreLexicographic) {
  TableScorer scorer({{"0", {0.25, 0.25, 0.5}}});
  scorer.set_order({"z_z", "a_a", "m_m"});
  const RankedList ranked = RankEpd(
      Pool({{"z_z", 0.1}, {"a_a", 0.2}, {"m_m", 0.3}}), Sentences(1), scorer);
  EXPECT_EQ(Names(ranked), (Phrases{"m_m", "a_a", "z_z"}));
}

// Randomized matrices whose entries are multiples of 1/64, so every partial
// sum is exact and additivity can be checked with ==.
TEST(RankEpdTest, AdditivityOverDisjointSentenceSets) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const size_t n_c = 1 + rng() % 6;
    const size_t n_m = 2 + rng() % 10;
    Phrases order;
    for (size_t c = 0; c < n_c; ++c) order.push_back("p" + std::to_string(c) + "_x");
    std::map<std::string, std::vector<double>> rows;
    for (size_t m = 0; m < n_m; ++m) {
      std::vector<double> row(n_c, 0.0);
      // Distribute 64 sixty-fourths over the candidates.
      for (int unit = 0; unit < 64; ++unit) row[rng() % n_c] += 1.0 / 64;
      rows[std::to_string(m)] = row;
    }
    TableScorer scorer(rows);
    scorer.set_order(order);
    CandidatePool pool;
    for (const auto &p : order) pool.entries.push_back({p, 0});
    const auto all = Sentences(n_m);
    const size_t cut = 1 + rng() % (n_m - 1);
    const std::vector<MaskedSentence> first(all.begin(), all.begin() + cut);
    const std::vector<MaskedSentence> second(all.begin() + cut, all.end());
    const RankedList whole = RankEpd(pool, all, scorer);
    const RankedList a = RankEpd(pool, first, scorer);
    const RankedList b = RankEpd(pool, second, scorer);
    auto weight_of = [](const RankedList &list, const std::string &p) {
      for (const auto &e : list.entries) {
        if (e.phrase == p) return e.weight;
      }
      return -1.0;
    };
    for (const std::string &p : order) {
      EXPECT_EQ(weight_of(whole, p), weight_of(a, p) + weight_of(b, p));
    }
  }
}

TEST(RankEpdTest, MatchesBruteForceOnRandomMatrices) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const size_t n_c = 1 + rng() % 50;
    const size_t n_m = 1 + rng() % 100;
    Phrases order;
    for (size_t c = 0; c < n_c; ++c) order.push_back("c" + std::to_string(c) + "_x");
    std::map<std::string, std::vector<double>> rows;
    ScoreMatrix reference(order, n_m);
    for (size_t m = 0; m < n_m; ++m) {
      std::vector<double> raw(n_c);
      for (double &x : raw) x = std::floor(u(rng) * 4);  // forces ties
      const std::vector<double> h = NormalizeScores(raw);
      rows[std::to_string(m)] = h;
      std::copy(h.begin(), h.end(), reference.Row(m).begin());
    }
    TableScorer scorer(rows);
    scorer.set_order(order);
    CandidatePool pool;
    for (const auto &p : order) pool.entries.push_back({p, 0});
    const RankedList ranked = RankEpd(pool, Sentences(n_m), scorer);
    const std::vector<double> w = oracle::Weights(reference);
    EXPECT_EQ(Names(ranked), oracle::RankByWeight(order, w));
    for (const RankedEntry &e : ranked.entries) {
      const size_t c = std::find(order.begin(), order.end(), e.phrase) -
                       order.begin();
      EXPECT_NEAR(e.weight, w[c], 1e-9);
    }
  }
}

TEST(RankWord2vecTest, KeepsPoolOrder) {
  const RankedList ranked = RankWord2vec(Pool({{"x_y", 0.9}, {"u_v", 0.4}}));
  EXPECT_EQ(Names(ranked), (Phrases{"x_y", "u_v"}));
  EXPECT_DOUBLE_EQ(ranked.entries[0].weight, 0.9);
}

TEST(RankWord2vecTest, EqualSimilaritiesAreLexicographic) {
  EXPECT_EQ(Names(RankWord2vec(Pool({{"m_n", 0.5}, {"a_b", 0.5}}))),
            (Phrases{"a_b", "m_n"}));
}

TEST(RankWord2vecTest, EmptyPool) {
  EXPECT_TRUE(RankWord2vec(CandidatePool()).entries.empty());
}

TEST(RankAllTest, EqualsEpdWhenInventoryIsThePool) {
  TableScorer scorer({{"0", {0.1, 0.6, 0.3}}, {"1", {0.5, 0.25, 0.25}}});
  scorer.set_order({"a_b", "c_d", "e_f"});
  const CandidatePool pool = Pool({{"a_b", 0.3}, {"c_d", 0.2}, {"e_f", 0.1}});
  const RankedList epd = RankEpd(pool, Sentences(2), scorer);
  const RankedList all =
      RankAll(Phrases{"a_b", "c_d", "e_f"}, Sentences(2), scorer);
  ASSERT_EQ(epd.entries.size(), all.entries.size());
  for (size_t i = 0; i < epd.entries.size(); ++i) {
    EXPECT_EQ(epd.entries[i].phrase, all.entries[i].phrase);
    EXPECT_EQ(epd.entries[i].weight, all.entries[i].weight);
  }
  EXPECT_EQ(all.method, RankMethod::kRankAll);
}

TEST(RankAllTest, NoisePhraseOutsideThePoolCanRankHigh) {
  // noise_x never made the pool, yet it dominates the scorer.
  TableScorer scorer({{"0", {0.1, 0.1, 0.8}}});
  scorer.set_order({"a_b", "c_d", "noise_x"});
  const RankedList all =
      RankAll(Phrases{"a_b", "c_d", "noise_x", "a_b"}, Sentences(1), scorer);
  EXPECT_EQ(all.entries.size(), 3u);
  EXPECT_EQ(all.entries[0].phrase, "noise_x");
  const RankedList epd =
      RankEpd(Pool({{"a_b", 0.9}, {"c_d", 0.8}}), Sentences(1), scorer);
  for (const RankedEntry &e : epd.entries) EXPECT_NE(e.phrase, "noise_x");
}

TEST(MakeRankedListTest, RejectsDuplicates) {
  EXPECT_THROW(MakeRankedList(Phrases{"a_b", "a_b"},
                              std::vector<double>{1, 2}, RankMethod::kEpd),
               Error);
}

// Dense symmetric adjacency of a graph.
Eigen::MatrixXd Dense(const SimilarityGraph &graph) {
  const auto n = static_cast<Eigen::Index>(graph.nodes.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (size_t i = 0; i < graph.adjacency.size(); ++i) {
    for (const auto &[j, w] : graph.adjacency[i]) {
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = w;
    }
  }
  return a;
}

// Unit eigenvector of the largest eigenvalue, signed non-negative.
Eigen::VectorXd Principal(const Eigen::MatrixXd &a, double *lambda) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  const Eigen::Index last = a.rows() - 1;
  Eigen::VectorXd v = solver.eigenvectors().col(last);
  if (v.sum() < 0) v = -v;
  *lambda = solver.eigenvalues()(last);
  return v;
}

SimilarityGraph Graph(Phrases nodes) {
  SimilarityGraph g;
  g.nodes = std::move(nodes);
  g.adjacency.resize(g.nodes.size());
  return g;
}

TEST(EigenvectorCentralityTest, StarGraph) {
  SimilarityGraph g = Graph({"heroin", "c_c", "a_a", "b_b"});
  for (size_t leaf = 1; leaf < 4; ++leaf) g.AddEdge(0, leaf, 0.7);
  const CentralityResult r = EigenvectorCentrality(g);
  ASSERT_TRUE(r.converged);
  EXPECT_FALSE(r.degenerate);
  EXPECT_NEAR(r.centrality[1], r.centrality[2], 1e-12);
  EXPECT_NEAR(r.centrality[2], r.centrality[3], 1e-12);
  EXPECT_GT(r.centrality[0], r.centrality[1]);
  EXPECT_LT(r.residual, 1e-8);
  EXPECT_NEAR(r.eigenvalue, 0.7 * std::sqrt(3.0), 1e-9);
}

TEST(EigenvectorCentralityTest, TwoCliquesAgainstDenseSolver) {
  // Clique {heroin, p_a, p_b} and clique {q_a, q_b}.
  SimilarityGraph g = Graph({"p_a", "p_b", "q_a", "q_b", "heroin"});
  g.AddEdge(0, 1, 0.8);
  g.AddEdge(0, 4, 0.8);
  g.AddEdge(1, 4, 0.8);
  g.AddEdge(2, 3, 0.9);
  const CentralityResult r = EigenvectorCentrality(g);
  double lambda = 0;
  const Eigen::VectorXd v = Principal(Dense(g), &lambda);
  ASSERT_TRUE(r.converged);
  for (size_t i = 0; i < 5; ++i) {
    EXPECT_NEAR(r.centrality[i], v(static_cast<Eigen::Index>(i)), 1e-7);
  }
  EXPECT_NEAR(r.eigenvalue, lambda, 1e-9);
  EXPECT_GT(r.centrality[0], r.centrality[2]);
  EXPECT_GT(r.centrality[1], r.centrality[3]);
}

TEST(EigenvectorCentralityTest, RandomConnectedGraphsAgainstDenseSolver) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> weight(0.5, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    const size_t n = 2 + rng() % 30;
    Phrases nodes;
    for (size_t i = 0; i < n; ++i) nodes.push_back("n" + std::to_string(i));
    SimilarityGraph g = Graph(nodes);
    // A random spanning tree keeps the graph connected.
    for (size_t i = 1; i < n; ++i) g.AddEdge(rng() % i, i, weight(rng));
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        if (rng() % 4 == 0) {
          bool exists = false;
          for (const auto &[k, w] : g.adjacency[i]) exists = exists || k == j;
          if (!exists) g.AddEdge(i, j, weight(rng));
        }
      }
    }
    const CentralityResult r = EigenvectorCentrality(g, 1e-10, 100000);
    ASSERT_TRUE(r.converged) << "n=" << n;
    EXPECT_LT(r.residual, 1e-8);
    double lambda = 0;
    const Eigen::VectorXd v = Principal(Dense(g), &lambda);
    EXPECT_NEAR(r.eigenvalue, lambda, 1e-8);
    for (size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(r.centrality[i], v(static_cast<Eigen::Index>(i)), 1e-6);
      EXPECT_GE(r.centrality[i], 0.0);
    }
  }
}

TEST(EigenvectorCentralityTest, EdgelessGraphIsDegenerate) {
  const CentralityResult r = EigenvectorCentrality(Graph({"a_b", "c_d"}));
  EXPECT_TRUE(r.degenerate);
  EXPECT_EQ(r.centrality, (std::vector<double>{0, 0}));
}

// Leaves e_i + 0.9 u around the target u: cos(leaf, target) = 0.669 and
// cos(leaf, leaf) = 0.448, so with threshold 0.5 the graph is a star.
EmbeddingTable StarTable() {
  return EmbeddingTable(4, {"heroin", "c_c", "a_a", "b_b"},
                        {0, 0, 0, 1,
                         1, 0, 0, 0.9f,
                         0, 1, 0, 0.9f,
                         0, 0, 1, 0.9f});
}

TEST(RankEigenTest, StarLeavesTieLexicographically) {
  const CandidatePool pool = Pool({{"c_c", 0.669}, {"a_a", 0.669}, {"b_b", 0.669}});
  const EigenRanking r = RankEigen(StarTable(), pool,
                                   TargetKeywordSet::Create({"heroin"}), {});
  EXPECT_FALSE(r.centrality.degenerate);
  EXPECT_EQ(Names(r.ranked), (Phrases{"a_a", "b_b", "c_c"}));
  EXPECT_EQ(r.ranked.method, RankMethod::kEigen);
}

TEST(RankEigenTest, SinglePhrasePool) {
  const EigenRanking r =
      RankEigen(StarTable(), Pool({{"b_b", 0.5}}),
                TargetKeywordSet::Create({"heroin"}), {});
  EXPECT_EQ(Names(r.ranked), (Phrases{"b_b"}));
}

TEST(RankEigenTest, IsolatedNodesFallBackToPoolOrder) {
  EigenConfig config;
  config.sim_threshold = 0.99;
  const CandidatePool pool = Pool({{"c_c", 0.7}, {"a_a", 0.6}, {"b_b", 0.5}});
  const EigenRanking r = RankEigen(
      StarTable(), pool, TargetKeywordSet::Create({"heroin"}), config);
  EXPECT_TRUE(r.centrality.degenerate);
  EXPECT_EQ(Names(r.ranked), (Phrases{"c_c", "a_a", "b_b"}));
}

TEST(RankedTsvTest, RoundTrip) {
  const RankedList ranked =
      MakeRankedList(Phrases{"black_tar", "og_kush_x"},
                     std::vector<double>{1.5, 2.25}, RankMethod::kRankAll);
  std::stringstream buffer;
  WriteRankedTsv(ranked, buffer);
  EXPECT_EQ(buffer.str(),
            "rank\tphrase\tweight\tmethod\n"
            "1\tog kush x\t2.250000\trank-all\n"
            "2\tblack tar\t1.500000\trank-all\n");
  const RankedList read = ReadRankedTsv(buffer);
  EXPECT_EQ(read.method, RankMethod::kRankAll);
  EXPECT_EQ(Names(read), (Phrases{"og_kush_x", "black_tar"}));
}

}  // namespace
}  // namespace euphrase
