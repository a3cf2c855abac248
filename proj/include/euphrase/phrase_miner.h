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

#ifndef EUPHRASE_PHRASE_MINER_H_
#define EUPHRASE_PHRASE_MINER_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "euphrase/corpus.h"
#include "euphrase/lexicon.h"
#include "euphrase/stopwords.h"

namespace euphrase {

// Separator used when a multi-token phrase becomes a single unit.
inline constexpr char kJoiner = '_';

std::string JoinUnit(std::span<const std::string> tokens);
std::vector<std::string> SplitUnit(std::string_view unit);
// "black_tar" -> "black tar".
std::string UnitToSurface(std::string_view unit);
bool IsMultiWordUnit(std::string_view unit);

// Exact counts of all contiguous n-grams, 1 <= n <= max_len, that lie
// within a single sentence.
class NgramCounts {
 public:
  int max_len() const { return max_len_; }
  int64_t total_tokens() const { return total_tokens_; }
  size_t size() const { return counts_.size(); }
  const Lexicon &lexicon() const { return lexicon_; }

  // Count of the given token sequence, 0 when absent.
  int64_t Count(std::span<const std::string> ngram) const;
  int64_t Count(std::span<const TokenId> ngram) const;

  void ForEach(
      const std::function<void(std::span<const TokenId>, int64_t)> &visit)
      const;

  // Materialized copy keyed by token strings. Meant for small corpora.
  std::map<std::vector<std::string>, int64_t> ToMap() const;

 private:
  friend NgramCounts CountNgrams(const Corpus &corpus, int max_len);

  int max_len_ = 0;
  int64_t total_tokens_ = 0;
  Lexicon lexicon_;
  std::unordered_map<std::vector<TokenId>, int64_t, TokenSeqHash> counts_;
};

// Throws Error if max_len < 2.
NgramCounts CountNgrams(const Corpus &corpus, int max_len);

struct PhraseFeatures {
  double pmi = 0;
  double left_entropy = 0;
  double right_entropy = 0;
};

struct PhraseCandidate {
  std::vector<std::string> tokens;
  int64_t frequency = 0;
  PhraseFeatures features;
  double quality = 0;

  std::string Unit() const { return JoinUnit(tokens); }
};

struct MinerConfig {
  // Longest phrase considered, in tokens.
  int max_len = 4;
  int64_t min_count = 5;
  // Phrases at or above this quality are joined into units.
  double quality_threshold = 0.5;
  // Weights of the min-max normalized features in the quality score.
  double pmi_weight = 0.5;
  double left_entropy_weight = 0.25;
  double right_entropy_weight = 0.25;
  // quality = 1 / (1 + exp(-steepness * (z - center))).
  double sigmoid_center = 0.5;
  double sigmoid_steepness = 10.0;
  const StopwordSet *stopwords = &DefaultStopwords();
};

// Scores every n-gram with 2 <= n <= min(config.max_len, counts.max_len()-1)
// that occurs at least config.min_count times, does not start or end with a
// stopword, and has no token containing the joiner. Branching entropies are
// read from the (n+1)-gram counts, so callers count one order beyond the
// longest phrase. Neighbors across sentence boundaries do not exist.
//
//   pmi = log2(p(phrase) / prod_i p(token_i)),  p(x) = count(x) / N
//
// where N = total_tokens. Output order is unspecified.
std::vector<PhraseCandidate> ScoreCandidates(const NgramCounts &counts,
                                             int64_t total_tokens,
                                             const MinerConfig &config);

// All scored candidates sorted by quality desc, then frequency desc, then
// token sequence ascending.
std::vector<PhraseCandidate> MinePhrases(const Corpus &corpus,
                                         const MinerConfig &config);

void SortCandidates(std::vector<PhraseCandidate> &candidates);

// Candidates with quality >= threshold, order preserved.
std::vector<PhraseCandidate> AcceptedPhrases(
    std::span<const PhraseCandidate> candidates, double threshold);

// Corpus whose accepted phrases have been joined into single units.
struct SegmentedCorpus {
  Corpus corpus;
  std::vector<PhraseCandidate> inventory;
  // Extra token sequences joined regardless of mining (multi-word targets).
  std::vector<std::vector<std::string>> forced;
};

// Greedy left-to-right segmentation. At each position the longest listed
// phrase starting there is joined; a match that overlaps an earlier one is
// not considered. Phrases whose joined form already occurs as a raw token
// are left out, both from the corpus and from the returned inventory.
SegmentedCorpus SegmentCorpus(
    const Corpus &corpus, std::vector<PhraseCandidate> phrases,
    std::vector<std::vector<std::string>> forced = {});

// Splits every joined unit of `segmented` back into its tokens.
Corpus Unjoin(const SegmentedCorpus &segmented);

// Phrase list TSV with a header row:
// phrase, frequency, pmi, left_entropy, right_entropy, quality.
void WritePhraseTsv(std::span<const PhraseCandidate> phrases,
                    std::ostream &out);
std::vector<PhraseCandidate> ReadPhraseTsv(std::istream &in);

}  // namespace euphrase

#endif  // EUPHRASE_PHRASE_MINER_H_
