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

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <unordered_set>

#include "euphrase/error.h"
#include "euphrase/phrase_miner.h"
#include "euphrase/tsv.h"

namespace euphrase {

std::string_view RankMethodName(RankMethod method) {
  switch (method) {
    case RankMethod::kEpd:
      return "epd";
    case RankMethod::kWord2vec:
      return "word2vec";
    case RankMethod::kEigen:
      return "eigen";
    case RankMethod::kRankAll:
      return "rank-all";
  }
  return "epd";
}

std::optional<RankMethod> ParseRankMethod(std::string_view name) {
  for (RankMethod m : {RankMethod::kEpd, RankMethod::kWord2vec,
                       RankMethod::kEigen, RankMethod::kRankAll}) {
    if (RankMethodName(m) == name) return m;
  }
  return std::nullopt;
}

RankedList MakeRankedList(std::span<const std::string> phrases,
                          std::span<const double> weights, RankMethod method) {
  if (phrases.size() != weights.size()) {
    throw Error("ranked list: phrase and weight counts differ");
  }
  std::vector<PoolEntry> entries;
  std::unordered_set<std::string_view> seen;
  for (size_t i = 0; i < phrases.size(); ++i) {
    if (!seen.insert(phrases[i]).second) {
      throw Error("ranked list: duplicate phrase " + phrases[i]);
    }
    entries.push_back({phrases[i], weights[i]});
  }
  SortByScore(entries);
  RankedList ranked;
  ranked.method = method;
  ranked.entries.reserve(entries.size());
  for (PoolEntry &e : entries) {
    ranked.entries.push_back({std::move(e.phrase), e.similarity});
  }
  return ranked;
}

std::vector<double> AccumulateWeights(const ScoreMatrix &matrix) {
  std::vector<double> weights(matrix.candidate_count(), 0.0);
  for (size_t m = 0; m < matrix.sentence_count(); ++m) {
    const auto row = matrix.Row(m);
    for (size_t c = 0; c < weights.size(); ++c) weights[c] += row[c];
  }
  return weights;
}

namespace {

RankedList RankByScorer(std::span<const std::string> phrases,
                        std::span<const MaskedSentence> sentences,
                        const Scorer &scorer, RankMethod method) {
  if (phrases.empty()) throw Error("cannot rank an empty candidate list");
  if (sentences.empty()) {
    throw Error("cannot rank without masked sentences: every weight would "
                "be zero");
  }
  const ScoreMatrix matrix = scorer.ScoreAll(phrases, sentences);
  const std::vector<double> weights = AccumulateWeights(matrix);
  return MakeRankedList(phrases, weights, method);
}

}  // namespace

RankedList RankEpd(const CandidatePool &pool,
                   std::span<const MaskedSentence> sentences,
                   const Scorer &scorer) {
  return RankByScorer(pool.Phrases(), sentences, scorer, RankMethod::kEpd);
}

RankedList RankWord2vec(const CandidatePool &pool) {
  std::vector<double> weights;
  for (const PoolEntry &e : pool.entries) weights.push_back(e.similarity);
  return MakeRankedList(pool.Phrases(), weights, RankMethod::kWord2vec);
}

RankedList RankAll(std::span<const std::string> phrases,
                   std::span<const MaskedSentence> sentences,
                   const Scorer &scorer) {
  std::vector<std::string> unique;
  std::unordered_set<std::string_view> seen;
  for (const std::string &p : phrases) {
    if (seen.insert(p).second) unique.push_back(p);
  }
  return RankByScorer(unique, sentences, scorer, RankMethod::kRankAll);
}

void SimilarityGraph::AddEdge(size_t u, size_t v, double weight) {
  if (adjacency.size() < nodes.size()) adjacency.resize(nodes.size());
  adjacency[u].emplace_back(v, weight);
  adjacency[v].emplace_back(u, weight);
}

size_t SimilarityGraph::edge_count() const {
  size_t twice = 0;
  for (const auto &list : adjacency) twice += list.size();
  return twice / 2;
}

CentralityResult EigenvectorCentrality(const SimilarityGraph &graph,
                                       double tolerance, int max_iterations) {
  const size_t n = graph.nodes.size();
  CentralityResult result;
  if (n == 0) {
    result.degenerate = true;
    return result;
  }
  auto multiply = [&](const std::vector<double> &v, std::vector<double> &out) {
    for (size_t i = 0; i < n; ++i) {
      double sum = 0;
      if (i < graph.adjacency.size()) {
        for (const auto &[j, w] : graph.adjacency[i]) sum += w * v[j];
      }
      out[i] = sum;
    }
  };
  auto normalize = [](std::vector<double> &v) {
    double norm = 0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm > 0) {
      for (double &x : v) x /= norm;
    }
    return norm;
  };

  if (graph.edge_count() == 0) {
    result.degenerate = true;
    result.centrality.assign(n, 0.0);
    result.converged = true;
    return result;
  }

  std::vector<double> v(n, 1.0);
  normalize(v);
  std::vector<double> next(n);
  for (int it = 1; it <= max_iterations; ++it) {
    multiply(v, next);
    for (size_t i = 0; i < n; ++i) next[i] += v[i];
    normalize(next);
    double change = 0;
    for (size_t i = 0; i < n; ++i) {
      change = std::max(change, std::abs(next[i] - v[i]));
    }
    v.swap(next);
    result.iterations = it;
    if (change < tolerance) {
      result.converged = true;
      break;
    }
  }
  std::vector<double> av(n);
  multiply(v, av);
  double lambda = 0;
  for (size_t i = 0; i < n; ++i) lambda += v[i] * av[i];
  result.eigenvalue = lambda;
  for (size_t i = 0; i < n; ++i) {
    result.residual = std::max(result.residual, std::abs(av[i] - lambda * v[i]));
  }
  result.centrality = std::move(v);
  return result;
}

EigenRanking RankEigen(const EmbeddingTable &table, const CandidatePool &pool,
                       const TargetKeywordSet &targets,
                       const EigenConfig &config) {
  if (pool.entries.empty()) throw Error("cannot rank an empty pool");
  SimilarityGraph graph;
  std::vector<std::span<const float>> vectors;
  for (const PoolEntry &e : pool.entries) {
    auto row = table.Find(e.phrase);
    if (!row) throw Error("pool phrase has no embedding: " + e.phrase);
    graph.nodes.push_back(e.phrase);
    vectors.push_back(*row);
  }
  for (const std::string &t : targets.units()) {
    if (auto row = table.Find(t)) {
      graph.nodes.push_back(t);
      vectors.push_back(*row);
    }
  }
  graph.adjacency.resize(graph.nodes.size());
  for (size_t i = 0; i < vectors.size(); ++i) {
    for (size_t j = i + 1; j < vectors.size(); ++j) {
      const double sim = Cosine(vectors[i], vectors[j]);
      if (sim >= config.sim_threshold) graph.AddEdge(i, j, sim);
    }
  }

  EigenRanking result;
  result.centrality = EigenvectorCentrality(graph, config.tolerance,
                                            config.max_iterations);
  std::vector<std::string> phrases = pool.Phrases();
  std::vector<double> weights;
  if (result.centrality.degenerate) {
    for (const PoolEntry &e : pool.entries) weights.push_back(e.similarity);
  } else {
    weights.assign(result.centrality.centrality.begin(),
                   result.centrality.centrality.begin() + phrases.size());
  }
  result.ranked = MakeRankedList(phrases, weights, RankMethod::kEigen);
  return result;
}

void WriteRankedTsv(const RankedList &ranked, std::ostream &out) {
  out << "rank\tphrase\tweight\tmethod\n";
  const std::string_view method = RankMethodName(ranked.method);
  for (size_t i = 0; i < ranked.entries.size(); ++i) {
    const RankedEntry &e = ranked.entries[i];
    out << (i + 1) << '\t' << UnitToSurface(e.phrase) << '\t'
        << FormatFixed(e.weight, 6) << '\t' << method << '\n';
  }
}

RankedList ReadRankedTsv(std::istream &in) {
  RankedList ranked;
  std::string line;
  int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line_number == 1 || line.empty()) continue;
    const auto fields = SplitFields(line);
    if (fields.size() != 4) {
      throw Error("ranked list line " + std::to_string(line_number) +
                  ": expected 4 columns");
    }
    auto method = ParseRankMethod(fields[3]);
    if (!method) {
      throw Error("ranked list line " + std::to_string(line_number) +
                  ": unknown method " + std::string(fields[3]));
    }
    ranked.method = *method;
    std::string phrase(fields[1]);
    std::replace(phrase.begin(), phrase.end(), ' ', kJoiner);
    ranked.entries.push_back({std::move(phrase),
                              ParseDouble(fields[2], "weight")});
  }
  return ranked;
}

}  // namespace euphrase
