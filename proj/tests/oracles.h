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

// Brute-force reference implementations and fixtures. They recompute
// everything from raw token lists with the most direct loops available,
// sharing no code with the library beyond plain data types.

#ifndef EUPHRASE_TESTS_ORACLES_H_
#define EUPHRASE_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "euphrase/corpus.h"
#include "euphrase/scoring.h"

namespace euphrase::oracle {

using Sentences = std::vector<std::vector<std::string>>;

inline Sentences AllSentences(const Corpus &corpus) {
  Sentences out;
  for (const Document &doc : corpus.documents()) {
    for (const Sentence &s : doc.sentences) out.push_back(s);
  }
  return out;
}

struct Features {
  long count = 0;
  double pmi = 0;
  double left_entropy = 0;
  double right_entropy = 0;
};

inline double ShannonEntropy(const std::map<std::string, long> &histogram) {
  long total = 0;
  for (const auto &[word, n] : histogram) total += n;
  double h = 0;
  for (const auto &[word, n] : histogram) {
    const double p = static_cast<double>(n) / total;
    h -= p * std::log2(p);
  }
  return h;
}

// Scans every sentence position for `phrase`.
inline Features PhraseFeatures(const Sentences &sentences,
                               const std::vector<std::string> &phrase) {
  long total_tokens = 0;
  std::map<std::string, long> unigram;
  for (const auto &s : sentences) {
    for (const auto &t : s) {
      ++unigram[t];
      ++total_tokens;
    }
  }
  Features f;
  std::map<std::string, long> left, right;
  for (const auto &s : sentences) {
    for (size_t i = 0; i + phrase.size() <= s.size(); ++i) {
      bool match = true;
      for (size_t j = 0; j < phrase.size(); ++j) {
        if (s[i + j] != phrase[j]) match = false;
      }
      if (!match) continue;
      ++f.count;
      if (i > 0) ++left[s[i - 1]];
      if (i + phrase.size() < s.size()) ++right[s[i + phrase.size()]];
    }
  }
  const double n = static_cast<double>(total_tokens);
  double denominator = 1;
  for (const auto &t : phrase) denominator *= unigram[t] / n;
  f.pmi = std::log2((f.count / n) / denominator);
  f.left_entropy = ShannonEntropy(left);
  f.right_entropy = ShannonEntropy(right);
  return f;
}

// |top-min(k, n) ∩ truth| / k with both sides as plain strings.
inline double PrecisionAtK(const std::vector<std::string> &ranked,
                           const std::set<std::string> &truth, size_t k) {
  std::set<std::string> top(ranked.begin(),
                            ranked.begin() + std::min(k, ranked.size()));
  size_t hits = 0;
  for (const std::string &phrase : top) hits += truth.count(phrase);
  return static_cast<double>(hits) / static_cast<double>(k);
}

// w_c = sum over m of h[c][m], candidate by candidate.
inline std::vector<double> Weights(const ScoreMatrix &matrix) {
  std::vector<double> w(matrix.candidate_count(), 0.0);
  for (size_t c = 0; c < matrix.candidate_count(); ++c) {
    for (size_t m = 0; m < matrix.sentence_count(); ++m) {
      w[c] += matrix.at(c, m);
    }
  }
  return w;
}

// Ranking by weight desc then phrase asc, by selection sort.
inline std::vector<std::string> RankByWeight(std::vector<std::string> phrases,
                                             std::vector<double> weights) {
  std::vector<std::string> out;
  while (!phrases.empty()) {
    size_t best = 0;
    for (size_t i = 1; i < phrases.size(); ++i) {
      if (weights[i] > weights[best] ||
          (weights[i] == weights[best] && phrases[i] < phrases[best])) {
        best = i;
      }
    }
    out.push_back(phrases[best]);
    phrases.erase(phrases.begin() + best);
    weights.erase(weights.begin() + best);
  }
  return out;
}

// Offline scorer log score:
//   sum_w log(near(c, w) + alpha) - |W| log(count(c) + alpha V)
// where near(c, w) counts pairs of positions of c and w at distance
// 1..window within one sentence.
inline double OfflineLogRaw(const Sentences &sentences, int window,
                            double alpha, const std::string &candidate,
                            const std::vector<std::string> &left,
                            const std::vector<std::string> &right) {
  std::set<std::string> vocab;
  long count = 0;
  for (const auto &s : sentences) {
    for (const auto &t : s) {
      vocab.insert(t);
      if (t == candidate) ++count;
    }
  }
  std::vector<std::string> context;
  const size_t w = static_cast<size_t>(window);
  for (size_t i = left.size() > w ? left.size() - w : 0; i < left.size(); ++i) {
    context.push_back(left[i]);
  }
  for (size_t i = 0; i < std::min(w, right.size()); ++i) {
    context.push_back(right[i]);
  }
  double total = 0;
  for (const std::string &word : context) {
    long near = 0;
    for (const auto &s : sentences) {
      for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] != candidate) continue;
        for (size_t j = 0; j < s.size(); ++j) {
          const size_t d = i > j ? i - j : j - i;
          if (d >= 1 && d <= w && s[j] == word) ++near;
        }
      }
    }
    total += std::log(near + alpha);
  }
  return total - static_cast<double>(context.size()) *
                     std::log(count + alpha * static_cast<double>(vocab.size()));
}

// About 10k tokens of Zipf-distributed filler with a bigram planted 50
// times whose words occur nowhere else, plus a few weaker collocations
// that reuse filler words.
inline Corpus MinerFixture(uint64_t seed = 11) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> filler;
  for (int i = 0; i < 300; ++i) filler.push_back("w" + std::to_string(i));
  std::vector<double> zipf;
  for (int i = 0; i < 300; ++i) zipf.push_back(1.0 / (i + 1));
  std::discrete_distribution<int> pick(zipf.begin(), zipf.end());
  const std::vector<std::vector<std::string>> collocations = {
      {"w3", "w40"}, {"w0", "w1", "w2"}, {"w100", "w101"}};

  std::vector<Document> docs;
  long tokens = 0;
  int planted = 0;
  int doc_id = 0;
  while (tokens < 10000) {
    Document doc{std::to_string(++doc_id), {}};
    Sentence sentence;
    const int length = 6 + static_cast<int>(rng() % 10);
    for (int i = 0; i < length; ++i) sentence.push_back(filler[pick(rng)]);
    if (rng() % 5 == 0) {
      const auto &c = collocations[rng() % collocations.size()];
      const size_t at = rng() % (sentence.size() + 1);
      sentence.insert(sentence.begin() + at, c.begin(), c.end());
    }
    if (planted < 50 && rng() % 4 == 0) {
      const size_t at = rng() % (sentence.size() + 1);
      sentence.insert(sentence.begin() + at, {"xylo", "phonic"});
      ++planted;
    }
    tokens += static_cast<long>(sentence.size());
    doc.sentences.push_back(std::move(sentence));
    docs.push_back(std::move(doc));
  }
  // Top up so the bigram is present exactly 50 times.
  while (planted < 50) {
    docs.push_back({std::to_string(++doc_id),
                    {{filler[pick(rng)], "xylo", "phonic", filler[pick(rng)]}}});
    ++planted;
  }
  return Corpus(std::move(docs));
}

}  // namespace euphrase::oracle

#endif  // EUPHRASE_TESTS_ORACLES_H_
