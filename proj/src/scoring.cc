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

#include "euphrase/scoring.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace euphrase {

ScoreMatrix Scorer::ScoreAll(std::span<const std::string> candidates,
                             std::span<const MaskedSentence> sentences) const {
  ScoreMatrix matrix(std::vector<std::string>(candidates.begin(),
                                              candidates.end()),
                     sentences.size());
  for (size_t m = 0; m < sentences.size(); ++m) {
    const std::vector<double> row = ScoreBatch(candidates, sentences[m]);
    std::copy(row.begin(), row.end(), matrix.Row(m).begin());
  }
  return matrix;
}

std::vector<double> NormalizeScores(std::span<const double> raw) {
  if (raw.empty()) throw Error("cannot normalize an empty score row");
  double total = 0;
  for (double x : raw) {
    if (!std::isfinite(x) || x < 0) {
      throw Error("raw score must be finite and non-negative");
    }
    total += x;
  }
  std::vector<double> out(raw.size());
  if (total == 0) {
    std::fill(out.begin(), out.end(), 1.0 / static_cast<double>(raw.size()));
    return out;
  }
  for (size_t i = 0; i < raw.size(); ++i) out[i] = raw[i] / total;
  return out;
}

std::vector<double> NormalizeLogScores(std::span<const double> log_raw) {
  if (log_raw.empty()) throw Error("cannot normalize an empty score row");
  std::vector<double> out(log_raw.size());
  double top = -std::numeric_limits<double>::infinity();
  for (double x : log_raw) {
    if (std::isnan(x) || x == std::numeric_limits<double>::infinity()) {
      throw Error("log score must be finite or -inf");
    }
    top = std::max(top, x);
  }
  if (top == -std::numeric_limits<double>::infinity()) {
    std::fill(out.begin(), out.end(),
              1.0 / static_cast<double>(log_raw.size()));
    return out;
  }
  double total = 0;
  for (size_t i = 0; i < log_raw.size(); ++i) {
    out[i] = std::exp(log_raw[i] - top);
    total += out[i];
  }
  for (double &x : out) x /= total;
  return out;
}

OfflineScorer::OfflineScorer(const Corpus &corpus,
                             const OfflineScorerConfig &config)
    : config_(config) {
  if (corpus.token_count() == 0) {
    throw Error("offline scorer needs a non-empty corpus");
  }
  if (config.window <= 0 || !(config.alpha > 0)) {
    throw Error("offline scorer needs window > 0 and alpha > 0");
  }
  std::vector<TokenId> ids;
  for (const Document &doc : corpus.documents()) {
    for (const Sentence &sentence : doc.sentences) {
      ids.clear();
      for (const std::string &unit : sentence) {
        const TokenId id = lexicon_.Intern(unit);
        if (id >= counts_.size()) counts_.resize(id + 1, 0);
        ++counts_[id];
        ids.push_back(id);
      }
      const int n = static_cast<int>(ids.size());
      for (int i = 0; i < n; ++i) {
        const int lo = std::max(0, i - config.window);
        const int hi = std::min(n - 1, i + config.window);
        for (int j = lo; j <= hi; ++j) {
          if (j != i) ++cooccurrences_[PairKey(ids[i], ids[j])];
        }
      }
    }
  }
}

int64_t OfflineScorer::UnitCount(std::string_view unit) const {
  auto id = lexicon_.Find(unit);
  return id ? counts_[*id] : 0;
}

int64_t OfflineScorer::Cooccurrences(std::string_view unit,
                                     std::string_view context) const {
  auto u = lexicon_.Find(unit);
  auto w = lexicon_.Find(context);
  if (!u || !w) return 0;
  auto it = cooccurrences_.find(PairKey(*u, *w));
  return it == cooccurrences_.end() ? 0 : it->second;
}

std::vector<std::string> OfflineScorer::ContextWindow(
    const MaskedSentence &sentence) const {
  const size_t window = static_cast<size_t>(config_.window);
  std::vector<std::string> context;
  const size_t left = std::min(window, sentence.left.size());
  context.insert(context.end(), sentence.left.end() - left,
                 sentence.left.end());
  const size_t right = std::min(window, sentence.right.size());
  context.insert(context.end(), sentence.right.begin(),
                 sentence.right.begin() + right);
  return context;
}

double OfflineScorer::LogRaw(std::string_view candidate,
                             const MaskedSentence &sentence) const {
  const double vocab = static_cast<double>(lexicon_.size());
  const auto id = lexicon_.Find(candidate);
  const double count = id ? static_cast<double>(counts_[*id]) : 0.0;
  const double log_denominator = std::log(count + config_.alpha * vocab);
  double log_raw = 0;
  for (const std::string &w : ContextWindow(sentence)) {
    int64_t together = 0;
    if (id) {
      if (auto w_id = lexicon_.Find(w)) {
        auto it = cooccurrences_.find(PairKey(*id, *w_id));
        if (it != cooccurrences_.end()) together = it->second;
      }
    }
    log_raw += std::log(static_cast<double>(together) + config_.alpha) -
               log_denominator;
  }
  return log_raw;
}

std::vector<double> OfflineScorer::ScoreBatch(
    std::span<const std::string> candidates,
    const MaskedSentence &sentence) const {
  if (candidates.empty()) throw Error("score_batch needs candidates");
  std::vector<double> log_raw;
  log_raw.reserve(candidates.size());
  for (const std::string &c : candidates) log_raw.push_back(LogRaw(c, sentence));
  return NormalizeLogScores(log_raw);
}

ScoreMatrix OfflineScorer::ScoreAll(
    std::span<const std::string> candidates,
    std::span<const MaskedSentence> sentences) const {
  if (candidates.empty()) throw Error("score_batch needs candidates");
  ScoreMatrix matrix(std::vector<std::string>(candidates.begin(),
                                              candidates.end()),
                     sentences.size());
  auto work = [&](size_t begin, size_t end) {
    for (size_t m = begin; m < end; ++m) {
      const std::vector<double> row = ScoreBatch(candidates, sentences[m]);
      std::copy(row.begin(), row.end(), matrix.Row(m).begin());
    }
  };
  const size_t threads = static_cast<size_t>(std::max(1, config_.threads));
  if (threads == 1 || sentences.size() < 2) {
    work(0, sentences.size());
    return matrix;
  }
  std::vector<std::thread> workers;
  const size_t per = (sentences.size() + threads - 1) / threads;
  for (size_t t = 0; t < threads; ++t) {
    const size_t begin = std::min(sentences.size(), t * per);
    const size_t end = std::min(sentences.size(), begin + per);
    if (begin < end) workers.emplace_back(work, begin, end);
  }
  for (std::thread &w : workers) w.join();
  return matrix;
}

OfflineScorer BuildOfflineScorer(const Corpus &corpus,
                                 const OfflineScorerConfig &config) {
  return OfflineScorer(corpus, config);
}

}  // namespace euphrase
