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

#ifndef EUPHRASE_PRESELECT_H_
#define EUPHRASE_PRESELECT_H_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "euphrase/embeddings.h"
#include "euphrase/targets.h"

namespace euphrase {

struct PoolEntry {
  std::string phrase;
  double similarity = 0;

  bool operator==(const PoolEntry &other) const = default;
};

// Multi-word phrase units ordered by similarity desc, ties by phrase.
struct CandidatePool {
  std::vector<PoolEntry> entries;
  // Targets without an embedding (ignored for the mean).
  std::vector<std::string> missing_targets;
  // Input phrases that have no embedding.
  std::vector<std::string> unembedded;

  std::vector<std::string> Phrases() const;
};

// Top-k phrases by cosine to the mean target embedding. Target keywords,
// single-word units and duplicate inputs are excluded. Propagates the
// errors of AverageTargetEmbedding.
CandidatePool Preselect(const EmbeddingTable &table,
                        std::span<const std::string> phrases,
                        const TargetKeywordSet &targets, size_t k = 1000);

// Sort order shared by every ranked output: score desc, then phrase asc.
void SortByScore(std::vector<PoolEntry> &entries);

// Columns phrase, similarity (six decimals), with a header row.
void WritePoolTsv(const CandidatePool &pool, std::ostream &out);
CandidatePool ReadPoolTsv(std::istream &in);

}  // namespace euphrase

#endif  // EUPHRASE_PRESELECT_H_
