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

#include "euphrase/preselect.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "euphrase/error.h"
#include "euphrase/phrase_miner.h"
#include "euphrase/tsv.h"

namespace euphrase {

namespace {

bool ScoreOrder(const PoolEntry &a, const PoolEntry &b) {
  if (a.similarity != b.similarity) return a.similarity > b.similarity;
  return a.phrase < b.phrase;
}

}  // namespace

std::vector<std::string> CandidatePool::Phrases() const {
  std::vector<std::string> phrases;
  phrases.reserve(entries.size());
  for (const PoolEntry &e : entries) phrases.push_back(e.phrase);
  return phrases;
}

void SortByScore(std::vector<PoolEntry> &entries) {
  std::sort(entries.begin(), entries.end(), ScoreOrder);
}

CandidatePool Preselect(const EmbeddingTable &table,
                        std::span<const std::string> phrases,
                        const TargetKeywordSet &targets, size_t k) {
  CandidatePool pool;
  TargetEmbedding target = AverageTargetEmbedding(table, targets);
  pool.missing_targets = std::move(target.missing);

  std::unordered_set<std::string> seen;
  std::vector<PoolEntry> scored;
  for (const std::string &phrase : phrases) {
    if (!seen.insert(phrase).second) continue;
    if (!IsMultiWordUnit(phrase) || targets.Contains(phrase)) continue;
    auto row = table.Find(phrase);
    if (!row) {
      pool.unembedded.push_back(phrase);
      continue;
    }
    scored.push_back({phrase, Cosine(*row, target.mean)});
  }
  const size_t keep = std::min(k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + keep, scored.end(),
                    ScoreOrder);
  scored.resize(keep);
  pool.entries = std::move(scored);
  return pool;
}

void WritePoolTsv(const CandidatePool &pool, std::ostream &out) {
  out << "phrase\tsimilarity\n";
  for (const PoolEntry &e : pool.entries) {
    out << e.phrase << '\t' << FormatFixed(e.similarity, 6) << '\n';
  }
}

CandidatePool ReadPoolTsv(std::istream &in) {
  CandidatePool pool;
  std::string line;
  int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line_number == 1 || line.empty()) continue;
    const auto fields = SplitFields(line);
    if (fields.size() != 2) {
      throw Error("pool line " + std::to_string(line_number) +
                  ": expected 2 columns");
    }
    pool.entries.push_back(
        {std::string(fields[0]), ParseDouble(fields[1], "similarity")});
  }
  return pool;
}

}  // namespace euphrase
