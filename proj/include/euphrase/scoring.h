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

#ifndef EUPHRASE_SCORING_H_
#define EUPHRASE_SCORING_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "euphrase/contexts.h"
#include "euphrase/corpus.h"
#include "euphrase/error.h"
#include "euphrase/lexicon.h"

namespace euphrase {

// h[c][m]: probability that candidate c fills the mask of sentence m,
// normalized over the candidates of each sentence.
class ScoreMatrix {
 public:
  ScoreMatrix(std::vector<std::string> candidates, size_t sentence_count)
      : candidates_(std::move(candidates)),
        sentence_count_(sentence_count),
        scores_(candidates_.size() * sentence_count, 0.0) {}

  const std::vector<std::string> &candidates() const { return candidates_; }
  size_t candidate_count() const { return candidates_.size(); }
  size_t sentence_count() const { return sentence_count_; }

  double at(size_t candidate, size_t sentence) const {
    return scores_[sentence * candidates_.size() + candidate];
  }
  std::span<double> Row(size_t sentence) {
    return {scores_.data() + sentence * candidates_.size(),
            candidates_.size()};
  }
  std::span<const double> Row(size_t sentence) const {
    return {scores_.data() + sentence * candidates_.size(),
            candidates_.size()};
  }

 private:
  std::vector<std::string> candidates_;
  size_t sentence_count_;
  std::vector<double> scores_;
};

// Scores mask fillers. Candidates are phrase units ("black_tar").
class Scorer {
 public:
  virtual ~Scorer() = default;

  // Distribution over `candidates` for the mask of `sentence`; sums to 1.
  // Throws Error when `candidates` is empty.
  virtual std::vector<double> ScoreBatch(
      std::span<const std::string> candidates,
      const MaskedSentence &sentence) const = 0;

  // Full matrix, one ScoreBatch per sentence unless overridden.
  virtual ScoreMatrix ScoreAll(std::span<const std::string> candidates,
                               std::span<const MaskedSentence> sentences) const;
};

// Divides raw non-negative scores by their sum. An all-zero row becomes
// uniform. Throws Error on an empty row or on negative or non-finite input.
std::vector<double> NormalizeScores(std::span<const double> raw);

// Same normalization for log-domain scores: exp(x_i) / sum_j exp(x_j).
// Throws Error on an empty row.
std::vector<double> NormalizeLogScores(std::span<const double> log_raw);

struct OfflineScorerConfig {
  // Context tokens used on each side of the mask, and the co-occurrence
  // window counted in the corpus.
  int window = 3;
  // Additive smoothing.
  double alpha = 0.1;
  // Worker threads for ScoreAll. Results do not depend on it.
  int threads = 1;
};

// Count-based context model. For candidate c and masked sentence m,
//
//   raw(c, m) = prod_{w in W(m)} (count(c near w) + alpha)
//                                / (count(c) + alpha * V)
//
// where W(m) are the up-to-`window` tokens on each side of the mask (with
// repetition), count(c near w) counts occurrences of w within `window`
// positions of c in the corpus, and V is the number of distinct units.
class OfflineScorer : public Scorer {
 public:
  // Throws Error on an empty corpus or a non-positive window/alpha.
  OfflineScorer(const Corpus &corpus, const OfflineScorerConfig &config);

  std::vector<double> ScoreBatch(std::span<const std::string> candidates,
                                 const MaskedSentence &sentence) const override;
  ScoreMatrix ScoreAll(
      std::span<const std::string> candidates,
      std::span<const MaskedSentence> sentences) const override;

  // log raw(c, m) before normalization.
  double LogRaw(std::string_view candidate,
                const MaskedSentence &sentence) const;

  int64_t UnitCount(std::string_view unit) const;
  int64_t Cooccurrences(std::string_view unit, std::string_view context) const;
  size_t vocabulary_size() const { return lexicon_.size(); }
  const OfflineScorerConfig &config() const { return config_; }

  // Context tokens the model conditions on for `sentence`.
  std::vector<std::string> ContextWindow(const MaskedSentence &sentence) const;

 private:
  static uint64_t PairKey(TokenId unit, TokenId context) {
    return (static_cast<uint64_t>(unit) << 32) | context;
  }

  OfflineScorerConfig config_;
  Lexicon lexicon_;
  std::vector<int64_t> counts_;
  std::unordered_map<uint64_t, int64_t> cooccurrences_;
};

// Builds the offline scorer.
OfflineScorer BuildOfflineScorer(const Corpus &corpus,
                                 const OfflineScorerConfig &config);

}  // namespace euphrase

#endif  // EUPHRASE_SCORING_H_
