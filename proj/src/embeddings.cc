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

#include "euphrase/embeddings.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <thread>

#include "euphrase/error.h"
#include "euphrase/tsv.h"

namespace euphrase {

EmbeddingTable::EmbeddingTable(int dim, std::vector<std::string> units,
                               std::vector<float> data)
    : dim_(dim), units_(std::move(units)), data_(std::move(data)) {
  if (dim_ <= 0) throw Error("embedding dimension must be positive");
  if (data_.size() != units_.size() * static_cast<size_t>(dim_)) {
    throw Error("embedding data size does not match units x dim");
  }
  for (float x : data_) {
    if (!std::isfinite(x)) throw Error("embedding contains non-finite value");
  }
  index_.reserve(units_.size());
  for (size_t i = 0; i < units_.size(); ++i) {
    if (!index_.emplace(units_[i], i).second) {
      throw Error("duplicate embedding unit: " + units_[i]);
    }
  }
}

bool EmbeddingTable::Contains(std::string_view unit) const {
  return index_.count(std::string(unit)) > 0;
}

std::optional<std::span<const float>> EmbeddingTable::Find(
    std::string_view unit) const {
  auto it = index_.find(std::string(unit));
  if (it == index_.end()) return std::nullopt;
  return Row(it->second);
}

namespace {

constexpr float kMaxExp = 6.0f;

// Parameter access for single-threaded training.
struct PlainAccess {
  static float Load(float &x) { return x; }
  static void Store(float &x, float v) { x = v; }
};

// Parameter access for concurrent training: updates from different threads
// may overwrite each other, but every load and store is atomic.
struct RelaxedAccess {
  static float Load(float &x) {
    return std::atomic_ref<float>(x).load(std::memory_order_relaxed);
  }
  static void Store(float &x, float v) {
    std::atomic_ref<float>(x).store(v, std::memory_order_relaxed);
  }
};

double Uniform01(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

class SkipGramTrainer {
 public:
  SkipGramTrainer(const Corpus &corpus, const EmbeddingParams &params)
      : params_(params), dim_(params.dim) {
    for (const auto &[unit, count] : corpus.vocab()) {
      if (count >= params.min_count) units_.push_back(unit);
    }
    if (units_.empty()) {
      throw Error("empty effective vocabulary: no unit occurs at least "
                  "min_count=" + std::to_string(params.min_count) + " times");
    }
    std::stable_sort(units_.begin(), units_.end(),
                     [&](const std::string &a, const std::string &b) {
                       return corpus.Count(a) > corpus.Count(b);
                     });
    std::unordered_map<std::string_view, uint32_t> ids;
    for (size_t i = 0; i < units_.size(); ++i) {
      ids.emplace(units_[i], static_cast<uint32_t>(i));
      counts_.push_back(corpus.Count(units_[i]));
    }
    for (const Document &doc : corpus.documents()) {
      for (const Sentence &sentence : doc.sentences) {
        std::vector<uint32_t> encoded;
        for (const std::string &unit : sentence) {
          auto it = ids.find(unit);
          if (it != ids.end()) encoded.push_back(it->second);
        }
        if (!encoded.empty()) sentences_.push_back(std::move(encoded));
      }
    }
    train_words_ = std::accumulate(counts_.begin(), counts_.end(), int64_t{0});

    double z = 0;
    for (int64_t c : counts_) z += std::pow(static_cast<double>(c), 0.75);
    double acc = 0;
    for (int64_t c : counts_) {
      acc += std::pow(static_cast<double>(c), 0.75) / z;
      negative_cdf_.push_back(acc);
    }
    negative_cdf_.back() = 1.0;

    keep_prob_.assign(units_.size(), 1.0);
    if (params.subsample > 0) {
      const double threshold =
          params.subsample * static_cast<double>(train_words_);
      for (size_t i = 0; i < units_.size(); ++i) {
        const double f = static_cast<double>(counts_[i]);
        keep_prob_[i] = (std::sqrt(f / threshold) + 1.0) * threshold / f;
      }
    }

    std::mt19937_64 rng(params.seed);
    input_.resize(units_.size() * dim_);
    for (float &x : input_) {
      x = static_cast<float>((Uniform01(rng) - 0.5) / dim_);
    }
    output_.assign(units_.size() * dim_, 0.0f);
  }

  EmbeddingTable Train() {
    const int threads = std::max(1, params_.threads);
    if (threads == 1) {
      TrainShard<PlainAccess>(0, sentences_.size(), params_.seed);
    } else {
      std::vector<std::thread> workers;
      const size_t per = (sentences_.size() + threads - 1) / threads;
      for (int t = 0; t < threads; ++t) {
        const size_t begin = std::min(sentences_.size(), per * t);
        const size_t end = std::min(sentences_.size(), begin + per);
        workers.emplace_back([this, begin, end, t] {
          TrainShard<RelaxedAccess>(begin, end,
                                    params_.seed + 0x9E3779B97F4A7C15ULL * t);
        });
      }
      for (std::thread &w : workers) w.join();
    }
    return EmbeddingTable(dim_, std::move(units_), std::move(input_));
  }

 private:
  template <typename Access>
  void TrainShard(size_t begin, size_t end, uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x5DEECE66DULL);
    const double total =
        static_cast<double>(params_.epochs) * static_cast<double>(train_words_);
    const double floor = params_.initial_lr * 1e-4;
    std::vector<uint32_t> kept;
    std::vector<float> hidden(dim_);
    std::vector<float> gradient(dim_);
    for (int epoch = 0; epoch < params_.epochs; ++epoch) {
      for (size_t s = begin; s < end; ++s) {
        const std::vector<uint32_t> &sentence = sentences_[s];
        const int64_t seen =
            words_seen_.fetch_add(static_cast<int64_t>(sentence.size()),
                                  std::memory_order_relaxed);
        const double lr = std::max(
            floor, params_.initial_lr * (1.0 - static_cast<double>(seen) /
                                                   (total + 1.0)));
        kept.clear();
        for (uint32_t id : sentence) {
          if (keep_prob_[id] >= 1.0 || keep_prob_[id] >= Uniform01(rng)) {
            kept.push_back(id);
          }
        }
        const int n = static_cast<int>(kept.size());
        for (int i = 0; i < n; ++i) {
          const int reach = params_.window -
                            static_cast<int>(rng() % params_.window);
          const int lo = std::max(0, i - reach);
          const int hi = std::min(n - 1, i + reach);
          for (int j = lo; j <= hi; ++j) {
            if (j == i) continue;
            TrainPair<Access>(kept[j], kept[i], static_cast<float>(lr), rng,
                              hidden, gradient);
          }
        }
      }
    }
  }

  // One skip-gram update: the context unit's input vector predicts the
  // center unit against `negatives` sampled noise units.
  template <typename Access>
  void TrainPair(uint32_t context, uint32_t center, float lr,
                 std::mt19937_64 &rng, std::vector<float> &hidden,
                 std::vector<float> &gradient) {
    float *in = input_.data() + static_cast<size_t>(context) * dim_;
    for (int d = 0; d < dim_; ++d) {
      hidden[d] = Access::Load(in[d]);
      gradient[d] = 0.0f;
    }
    for (int k = 0; k <= params_.negatives; ++k) {
      uint32_t target;
      float label;
      if (k == 0) {
        target = center;
        label = 1.0f;
      } else {
        target = SampleNegative(rng);
        if (target == center) continue;
        label = 0.0f;
      }
      float *out = output_.data() + static_cast<size_t>(target) * dim_;
      float f = 0.0f;
      for (int d = 0; d < dim_; ++d) f += hidden[d] * Access::Load(out[d]);
      float g;
      if (f > kMaxExp) {
        g = (label - 1.0f) * lr;
      } else if (f < -kMaxExp) {
        g = label * lr;
      } else {
        g = (label - 1.0f / (1.0f + std::exp(-f))) * lr;
      }
      for (int d = 0; d < dim_; ++d) {
        const float o = Access::Load(out[d]);
        gradient[d] += g * o;
        Access::Store(out[d], o + g * hidden[d]);
      }
    }
    for (int d = 0; d < dim_; ++d) {
      Access::Store(in[d], Access::Load(in[d]) + gradient[d]);
    }
  }

  uint32_t SampleNegative(std::mt19937_64 &rng) const {
    const double u = Uniform01(rng);
    auto it = std::upper_bound(negative_cdf_.begin(), negative_cdf_.end(), u);
    if (it == negative_cdf_.end()) --it;
    return static_cast<uint32_t>(it - negative_cdf_.begin());
  }

  EmbeddingParams params_;
  int dim_;
  std::vector<std::string> units_;
  std::vector<int64_t> counts_;
  std::vector<std::vector<uint32_t>> sentences_;
  int64_t train_words_ = 0;
  std::vector<double> negative_cdf_;
  std::vector<double> keep_prob_;
  std::vector<float> input_;
  std::vector<float> output_;
  std::atomic<int64_t> words_seen_{0};
};

}  // namespace

EmbeddingTable TrainEmbeddings(const Corpus &corpus,
                               const EmbeddingParams &params) {
  if (params.dim <= 0 || params.window <= 0 || params.epochs <= 0 ||
      params.negatives < 0 || params.initial_lr <= 0) {
    throw Error("invalid embedding parameters");
  }
  if (corpus.token_count() == 0) throw Error("cannot train on empty corpus");
  SkipGramTrainer trainer(corpus, params);
  return trainer.Train();
}

double Cosine(std::span<const float> u, std::span<const float> v) {
  if (u.size() != v.size()) {
    throw Error("cosine of vectors with different dimensions (" +
                std::to_string(u.size()) + " vs " + std::to_string(v.size()) +
                ")");
  }
  double dot = 0, uu = 0, vv = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    dot += static_cast<double>(u[i]) * v[i];
    uu += static_cast<double>(u[i]) * u[i];
    vv += static_cast<double>(v[i]) * v[i];
  }
  if (uu == 0 || vv == 0) throw Error("cosine of a zero-norm vector");
  return std::clamp(dot / (std::sqrt(uu) * std::sqrt(vv)), -1.0, 1.0);
}

TargetEmbedding AverageTargetEmbedding(const EmbeddingTable &table,
                                       const TargetKeywordSet &targets) {
  TargetEmbedding result;
  std::vector<double> sum(table.dim(), 0.0);
  size_t found = 0;
  for (const std::string &unit : targets.units()) {
    auto row = table.Find(unit);
    if (!row) {
      result.missing.push_back(unit);
      continue;
    }
    ++found;
    for (int d = 0; d < table.dim(); ++d) sum[d] += (*row)[d];
  }
  if (found == 0) {
    std::string misses;
    for (const std::string &m : result.missing) {
      misses += misses.empty() ? m : ", " + m;
    }
    throw Error("no target keyword is in the embedding vocabulary (missing: " +
                misses + ")");
  }
  result.mean.resize(table.dim());
  for (int d = 0; d < table.dim(); ++d) {
    result.mean[d] = static_cast<float>(sum[d] / static_cast<double>(found));
  }
  return result;
}

void SaveEmbeddings(const EmbeddingTable &table, std::ostream &out) {
  out << table.size() << ' ' << table.dim() << '\n';
  for (size_t i = 0; i < table.size(); ++i) {
    out << table.units()[i];
    for (float x : table.Row(i)) out << ' ' << FormatFixed(x, 6);
    out << '\n';
  }
}

EmbeddingTable LoadEmbeddings(std::istream &in) {
  std::string line;
  if (!std::getline(in, line)) throw Error("embedding file is empty");
  const auto header = SplitFields(line, ' ');
  if (header.size() != 2) throw Error("malformed embedding header: " + line);
  const int64_t count = ParseInt(header[0], "embedding count");
  const int64_t dim = ParseInt(header[1], "embedding dim");
  if (count < 0 || dim <= 0) throw Error("malformed embedding header: " + line);
  std::vector<std::string> units;
  std::vector<float> data;
  units.reserve(count);
  data.reserve(count * dim);
  for (int64_t i = 0; i < count; ++i) {
    if (!std::getline(in, line)) {
      throw Error("embedding file truncated after " + std::to_string(i) +
                  " of " + std::to_string(count) + " vectors");
    }
    const auto fields = SplitFields(line, ' ');
    if (static_cast<int64_t>(fields.size()) != dim + 1) {
      throw Error("embedding line " + std::to_string(i + 2) + ": expected " +
                  std::to_string(dim) + " values");
    }
    units.emplace_back(fields[0]);
    for (int64_t d = 1; d <= dim; ++d) {
      data.push_back(static_cast<float>(ParseDouble(fields[d], "vector")));
    }
  }
  return EmbeddingTable(static_cast<int>(dim), std::move(units),
                        std::move(data));
}

}  // namespace euphrase
