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

#ifndef EUPHRASE_EMBEDDINGS_H_
#define EUPHRASE_EMBEDDINGS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "euphrase/corpus.h"
#include "euphrase/targets.h"

namespace euphrase {

// Dense vectors of equal dimension for a set of units.
class EmbeddingTable {
 public:
  explicit EmbeddingTable(int dim = 0) : dim_(dim) {}

  // `data` holds units.size() * dim values, row-major. Throws Error on a
  // size mismatch, a duplicate unit or a non-finite value.
  EmbeddingTable(int dim, std::vector<std::string> units,
                 std::vector<float> data);

  int dim() const { return dim_; }
  size_t size() const { return units_.size(); }
  const std::vector<std::string> &units() const { return units_; }

  bool Contains(std::string_view unit) const;
  std::optional<std::span<const float>> Find(std::string_view unit) const;
  std::span<const float> Row(size_t index) const {
    return {data_.data() + index * dim_, static_cast<size_t>(dim_)};
  }

  bool operator==(const EmbeddingTable &other) const {
    return dim_ == other.dim_ && units_ == other.units_ &&
           data_ == other.data_;
  }

 private:
  int dim_;
  std::vector<std::string> units_;
  std::vector<float> data_;
  std::unordered_map<std::string, size_t> index_;
};

struct EmbeddingParams {
  int window = 6;
  int dim = 100;
  int64_t min_count = 5;
  // Frequent-unit subsampling threshold; <= 0 disables subsampling.
  double subsample = 1e-4;
  int negatives = 5;
  int epochs = 5;
  double initial_lr = 0.025;
  uint64_t seed = 1;
  // Training is bit-deterministic only with a single thread.
  int threads = 1;
};

// Skip-gram with negative sampling over every sentence of the corpus.
// Negatives are drawn from the unigram distribution raised to 0.75, the
// context window is shrunk uniformly at random per position, and the
// learning rate decays linearly to initial_lr * 1e-4. Throws Error when no
// unit reaches min_count.
EmbeddingTable TrainEmbeddings(const Corpus &corpus,
                               const EmbeddingParams &params);

// dot(u, v) / (|u| |v|). Throws Error on a dimension mismatch or a zero
// vector.
double Cosine(std::span<const float> u, std::span<const float> v);

struct TargetEmbedding {
  std::vector<float> mean;
  // Targets skipped because they are not in the table.
  std::vector<std::string> missing;
};

// Mean of the in-vocabulary target vectors. Throws Error listing the
// misses when no target is in the table.
TargetEmbedding AverageTargetEmbedding(const EmbeddingTable &table,
                                       const TargetKeywordSet &targets);

// Text format: "<count> <dim>", then "<unit> <v1> ... <vdim>" per line with
// six decimals.
void SaveEmbeddings(const EmbeddingTable &table, std::ostream &out);
EmbeddingTable LoadEmbeddings(std::istream &in);

}  // namespace euphrase

#endif  // EUPHRASE_EMBEDDINGS_H_
