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

#include "euphrase/phrase_miner.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <unordered_set>

#include "euphrase/error.h"
#include "euphrase/tsv.h"

namespace euphrase {

namespace {

bool HasJoiner(std::string_view token) {
  return token.find(kJoiner) != std::string_view::npos;
}

double Entropy(std::vector<int64_t> &neighbor_counts) {
  // Sorted so the summation order does not depend on hash iteration.
  std::sort(neighbor_counts.begin(), neighbor_counts.end());
  double total = 0;
  for (int64_t c : neighbor_counts) total += static_cast<double>(c);
  double entropy = 0;
  for (int64_t c : neighbor_counts) {
    const double p = static_cast<double>(c) / total;
    entropy -= p * std::log2(p);
  }
  return entropy;
}

struct Range {
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();

  void Add(double x) {
    min = std::min(min, x);
    max = std::max(max, x);
  }

  // A degenerate range maps every value to the midpoint.
  double Normalize(double x) const {
    if (!(max > min)) return 0.5;
    return (x - min) / (max - min);
  }
};

bool CandidateLess(const PhraseCandidate &a, const PhraseCandidate &b) {
  if (a.quality != b.quality) return a.quality > b.quality;
  if (a.frequency != b.frequency) return a.frequency > b.frequency;
  return a.tokens < b.tokens;
}

}  // namespace

std::string JoinUnit(std::span<const std::string> tokens) {
  std::string unit;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) unit += kJoiner;
    unit += tokens[i];
  }
  return unit;
}

std::vector<std::string> SplitUnit(std::string_view unit) {
  std::vector<std::string> tokens;
  for (std::string_view part : SplitFields(unit, kJoiner)) {
    tokens.emplace_back(part);
  }
  return tokens;
}

std::string UnitToSurface(std::string_view unit) {
  std::string surface(unit);
  std::replace(surface.begin(), surface.end(), kJoiner, ' ');
  return surface;
}

bool IsMultiWordUnit(std::string_view unit) { return HasJoiner(unit); }

int64_t NgramCounts::Count(std::span<const std::string> ngram) const {
  std::vector<TokenId> key;
  key.reserve(ngram.size());
  for (const std::string &token : ngram) {
    auto id = lexicon_.Find(token);
    if (!id) return 0;
    key.push_back(*id);
  }
  return Count(key);
}

int64_t NgramCounts::Count(std::span<const TokenId> ngram) const {
  auto it = counts_.find(std::vector<TokenId>(ngram.begin(), ngram.end()));
  return it == counts_.end() ? 0 : it->second;
}

void NgramCounts::ForEach(
    const std::function<void(std::span<const TokenId>, int64_t)> &visit)
    const {
  for (const auto &[key, count] : counts_) visit(key, count);
}

std::map<std::vector<std::string>, int64_t> NgramCounts::ToMap() const {
  std::map<std::vector<std::string>, int64_t> result;
  for (const auto &[key, count] : counts_) {
    std::vector<std::string> tokens;
    for (TokenId id : key) tokens.push_back(lexicon_.Token(id));
    result.emplace(std::move(tokens), count);
  }
  return result;
}

NgramCounts CountNgrams(const Corpus &corpus, int max_len) {
  if (max_len < 2) {
    throw Error("count_ngrams requires max_len >= 2, got " +
                std::to_string(max_len));
  }
  NgramCounts counts;
  counts.max_len_ = max_len;
  counts.total_tokens_ = corpus.token_count();
  std::vector<TokenId> ids;
  std::vector<TokenId> key;
  for (const Document &doc : corpus.documents()) {
    for (const Sentence &sentence : doc.sentences) {
      ids.clear();
      for (const std::string &token : sentence) {
        ids.push_back(counts.lexicon_.Intern(token));
      }
      for (size_t i = 0; i < ids.size(); ++i) {
        const size_t longest =
            std::min(ids.size() - i, static_cast<size_t>(max_len));
        for (size_t n = 1; n <= longest; ++n) {
          key.assign(ids.begin() + i, ids.begin() + i + n);
          ++counts.counts_[key];
        }
      }
    }
  }
  return counts;
}

std::vector<PhraseCandidate> ScoreCandidates(const NgramCounts &counts,
                                             int64_t total_tokens,
                                             const MinerConfig &config) {
  const size_t longest = static_cast<size_t>(
      std::min(config.max_len, counts.max_len() - 1));
  const Lexicon &lexicon = counts.lexicon();
  const StopwordSet &stopwords =
      config.stopwords ? *config.stopwords : DefaultStopwords();
  if (longest < 2 || total_tokens <= 0) return {};

  auto is_stopword = [&](TokenId id) {
    return stopwords.Contains(lexicon.Token(id));
  };

  std::vector<std::vector<TokenId>> keys;
  std::unordered_map<std::vector<TokenId>, size_t, TokenSeqHash> index;
  counts.ForEach([&](std::span<const TokenId> key, int64_t count) {
    if (key.size() < 2 || key.size() > longest) return;
    if (count < config.min_count) return;
    if (is_stopword(key.front()) || is_stopword(key.back())) return;
    for (TokenId id : key) {
      if (HasJoiner(lexicon.Token(id))) return;
    }
    index.emplace(std::vector<TokenId>(key.begin(), key.end()), keys.size());
    keys.emplace_back(key.begin(), key.end());
  });

  // Neighbor distributions come from the (n+1)-grams extending a candidate.
  std::vector<std::vector<int64_t>> left(keys.size());
  std::vector<std::vector<int64_t>> right(keys.size());
  std::vector<TokenId> part;
  counts.ForEach([&](std::span<const TokenId> key, int64_t count) {
    if (key.size() < 3 || key.size() > longest + 1) return;
    part.assign(key.begin(), key.end() - 1);
    if (auto it = index.find(part); it != index.end()) {
      right[it->second].push_back(count);
    }
    part.assign(key.begin() + 1, key.end());
    if (auto it = index.find(part); it != index.end()) {
      left[it->second].push_back(count);
    }
  });

  const double n = static_cast<double>(total_tokens);
  std::vector<PhraseCandidate> candidates(keys.size());
  Range pmi_range, left_range, right_range;
  for (size_t i = 0; i < keys.size(); ++i) {
    PhraseCandidate &c = candidates[i];
    c.frequency = counts.Count(keys[i]);
    double independent = 1.0;
    for (TokenId id : keys[i]) {
      c.tokens.push_back(lexicon.Token(id));
      const TokenId unigram[] = {id};
      independent *= static_cast<double>(counts.Count(unigram)) / n;
    }
    c.features.pmi =
        std::log2((static_cast<double>(c.frequency) / n) / independent);
    c.features.left_entropy = Entropy(left[i]);
    c.features.right_entropy = Entropy(right[i]);
    pmi_range.Add(c.features.pmi);
    left_range.Add(c.features.left_entropy);
    right_range.Add(c.features.right_entropy);
  }
  for (PhraseCandidate &c : candidates) {
    const double z =
        config.pmi_weight * pmi_range.Normalize(c.features.pmi) +
        config.left_entropy_weight *
            left_range.Normalize(c.features.left_entropy) +
        config.right_entropy_weight *
            right_range.Normalize(c.features.right_entropy);
    c.quality = 1.0 / (1.0 + std::exp(-config.sigmoid_steepness *
                                      (z - config.sigmoid_center)));
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const PhraseCandidate &a, const PhraseCandidate &b) {
              return a.tokens < b.tokens;
            });
  return candidates;
}

void SortCandidates(std::vector<PhraseCandidate> &candidates) {
  std::sort(candidates.begin(), candidates.end(), CandidateLess);
}

std::vector<PhraseCandidate> MinePhrases(const Corpus &corpus,
                                         const MinerConfig &config) {
  if (config.max_len < 2) {
    throw Error("phrase max_len must be >= 2, got " +
                std::to_string(config.max_len));
  }
  const NgramCounts counts = CountNgrams(corpus, config.max_len + 1);
  std::vector<PhraseCandidate> candidates =
      ScoreCandidates(counts, counts.total_tokens(), config);
  SortCandidates(candidates);
  return candidates;
}

std::vector<PhraseCandidate> AcceptedPhrases(
    std::span<const PhraseCandidate> candidates, double threshold) {
  std::vector<PhraseCandidate> accepted;
  for (const PhraseCandidate &c : candidates) {
    if (c.quality >= threshold) accepted.push_back(c);
  }
  return accepted;
}

namespace {

// Joined forms of every segmentable phrase. Phrases with fewer than two
// tokens, or with a token that already contains the joiner, are ignored.
struct PhraseSet {
  std::unordered_set<std::string> units;
  size_t max_len = 0;

  void Add(const std::vector<std::string> &tokens) {
    if (tokens.size() < 2) return;
    for (const std::string &t : tokens) {
      if (t.empty() || HasJoiner(t)) return;
    }
    units.insert(JoinUnit(tokens));
    max_len = std::max(max_len, tokens.size());
  }
};

PhraseSet BuildPhraseSet(const std::vector<PhraseCandidate> &inventory,
                         const std::vector<std::vector<std::string>> &forced) {
  PhraseSet set;
  for (const PhraseCandidate &c : inventory) set.Add(c.tokens);
  for (const auto &tokens : forced) set.Add(tokens);
  return set;
}

}  // namespace

SegmentedCorpus SegmentCorpus(const Corpus &corpus,
                              std::vector<PhraseCandidate> phrases,
                              std::vector<std::vector<std::string>> forced) {
  // A phrase spelled like an existing raw token could not be told apart
  // from it when un-joining, so it is not joined at all.
  std::erase_if(phrases, [&](const PhraseCandidate &p) {
    return corpus.Count(p.Unit()) > 0;
  });
  std::erase_if(forced, [&](const std::vector<std::string> &tokens) {
    return corpus.Count(JoinUnit(tokens)) > 0;
  });
  const PhraseSet set = BuildPhraseSet(phrases, forced);
  std::vector<Document> documents;
  documents.reserve(corpus.documents().size());
  std::string unit;
  for (const Document &doc : corpus.documents()) {
    Document out{doc.id, {}};
    out.sentences.reserve(doc.sentences.size());
    for (const Sentence &sentence : doc.sentences) {
      Sentence units;
      size_t i = 0;
      while (i < sentence.size()) {
        size_t matched = 0;
        const size_t longest = std::min(set.max_len, sentence.size() - i);
        for (size_t len = longest; len >= 2; --len) {
          std::span<const std::string> window(sentence.data() + i, len);
          unit = JoinUnit(window);
          if (set.units.count(unit) > 0) {
            // A token with a joiner inside can never be part of a phrase.
            bool clean = true;
            for (const std::string &t : window) clean = clean && !HasJoiner(t);
            if (clean) {
              matched = len;
              break;
            }
          }
        }
        if (matched > 0) {
          units.push_back(unit);
          i += matched;
        } else {
          units.push_back(sentence[i]);
          ++i;
        }
      }
      out.sentences.push_back(std::move(units));
    }
    documents.push_back(std::move(out));
  }
  return SegmentedCorpus{Corpus(std::move(documents)), std::move(phrases),
                         std::move(forced)};
}

Corpus Unjoin(const SegmentedCorpus &segmented) {
  const PhraseSet set = BuildPhraseSet(segmented.inventory, segmented.forced);
  std::vector<Document> documents;
  for (const Document &doc : segmented.corpus.documents()) {
    Document out{doc.id, {}};
    for (const Sentence &sentence : doc.sentences) {
      Sentence tokens;
      for (const std::string &unit : sentence) {
        if (set.units.count(unit) > 0) {
          for (std::string &t : SplitUnit(unit)) tokens.push_back(std::move(t));
        } else {
          tokens.push_back(unit);
        }
      }
      out.sentences.push_back(std::move(tokens));
    }
    documents.push_back(std::move(out));
  }
  return Corpus(std::move(documents));
}

void WritePhraseTsv(std::span<const PhraseCandidate> phrases,
                    std::ostream &out) {
  out << "phrase\tfrequency\tpmi\tleft_entropy\tright_entropy\tquality\n";
  for (const PhraseCandidate &c : phrases) {
    out << c.Unit() << '\t' << c.frequency << '\t'
        << FormatFixed(c.features.pmi, 6) << '\t'
        << FormatFixed(c.features.left_entropy, 6) << '\t'
        << FormatFixed(c.features.right_entropy, 6) << '\t'
        << FormatFixed(c.quality, 6) << '\n';
  }
}

std::vector<PhraseCandidate> ReadPhraseTsv(std::istream &in) {
  std::vector<PhraseCandidate> phrases;
  std::string line;
  int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line_number == 1 || line.empty()) continue;
    const auto fields = SplitFields(line);
    if (fields.size() != 6) {
      throw Error("phrase list line " + std::to_string(line_number) +
                  ": expected 6 columns, found " +
                  std::to_string(fields.size()));
    }
    PhraseCandidate c;
    c.tokens = SplitUnit(fields[0]);
    c.frequency = ParseInt(fields[1], "frequency");
    c.features.pmi = ParseDouble(fields[2], "pmi");
    c.features.left_entropy = ParseDouble(fields[3], "left_entropy");
    c.features.right_entropy = ParseDouble(fields[4], "right_entropy");
    c.quality = ParseDouble(fields[5], "quality");
    phrases.push_back(std::move(c));
  }
  return phrases;
}

}  // namespace euphrase
