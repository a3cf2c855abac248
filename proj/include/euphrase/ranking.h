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

#ifndef EUPHRASE_RANKING_H_
#define EUPHRASE_RANKING_H_

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "euphrase/contexts.h"
#include "euphrase/embeddings.h"
#include "euphrase/preselect.h"
#include "euphrase/scoring.h"
#include "euphrase/targets.h"

namespace euphrase {

enum class RankMethod { kEpd, kWord2vec, kEigen, kRankAll };

std::string_view RankMethodName(RankMethod method);
std::optional<RankMethod> ParseRankMethod(std::string_view name);

struct RankedEntry {
  std::string phrase;
  double weight = 0;

  bool operator==(const RankedEntry &other) const = default;
};

// Phrases by weight desc, ties by phrase asc, no duplicates.
struct RankedList {
  RankMethod method = RankMethod::kEpd;
  std::vector<RankedEntry> entries;
};

// Sorts (phrase, weight) pairs into a ranked list. Throws Error on a
// duplicate phrase or a size mismatch.
RankedList MakeRankedList(std::span<const std::string> phrases,
                          std::span<const double> weights, RankMethod method);

// w_c = sum_m h[c][m], summed in sentence order.
std::vector<double> AccumulateWeights(const ScoreMatrix &matrix);

// Ranks the pool by accumulated scorer probability. Throws Error on an empty
// pool or sentence list and propagates scorer errors.
RankedList RankEpd(const CandidatePool &pool,
                   std::span<const MaskedSentence> sentences,
                   const Scorer &scorer);

// The pool order itself, weighted by similarity.
RankedList RankWord2vec(const CandidatePool &pool);

// RankEpd's rule over an unfiltered phrase list.
RankedList RankAll(std::span<const std::string> phrases,
                   std::span<const MaskedSentence> sentences,
                   const Scorer &scorer);

// Undirected weighted graph in adjacency-list form.
struct SimilarityGraph {
  std::vector<std::string> nodes;
  std::vector<std::vector<std::pair<size_t, double>>> adjacency;

  void AddEdge(size_t u, size_t v, double weight);
  size_t edge_count() const;
};

struct CentralityResult {
  std::vector<double> centrality;  // unit 2-norm, non-negative
  double eigenvalue = 0;
  int iterations = 0;
  bool converged = false;
  // True when the graph has no edges.
  bool degenerate = false;
  // max_i |(A v)_i - eigenvalue * v_i| at termination.
  double residual = 0;
};

// Power iteration on A + I from a uniform start. The shift keeps bipartite
// graphs from oscillating without changing the eigenvectors. Stops when the
// iterate moves less than `tolerance` in max-norm.
CentralityResult EigenvectorCentrality(const SimilarityGraph &graph,
                                       double tolerance = 1e-10,
                                       int max_iterations = 1000);

struct EigenConfig {
  double sim_threshold = 0.5;
  double tolerance = 1e-10;
  int max_iterations = 1000;
};

struct EigenRanking {
  RankedList ranked;
  CentralityResult centrality;
};

// Graph over pool phrases and in-vocabulary targets with an edge wherever
// cosine >= sim_threshold; pool phrases are ranked by centrality. An
// edgeless graph falls back to the pool order.
EigenRanking RankEigen(const EmbeddingTable &table, const CandidatePool &pool,
                       const TargetKeywordSet &targets,
                       const EigenConfig &config);

// Columns rank, phrase (space-separated), weight (six decimals), method,
// with a header row.
void WriteRankedTsv(const RankedList &ranked, std::ostream &out);
RankedList ReadRankedTsv(std::istream &in);

}  // namespace euphrase

#endif  // EUPHRASE_RANKING_H_
