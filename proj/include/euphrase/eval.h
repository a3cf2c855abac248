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

#ifndef EUPHRASE_EVAL_H_
#define EUPHRASE_EVAL_H_

#include <filesystem>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "euphrase/ranking.h"

namespace euphrase {

// Euphemistic phrases in space-separated lowercase form.
class GroundTruth {
 public:
  // Normalizes like corpus text. Throws Error if the list is empty or an
  // entry is a single word.
  static GroundTruth Create(const std::vector<std::string> &phrases);

  // `phrase` may be a unit ("black_tar") or a surface form ("Black tar").
  bool Contains(std::string_view phrase) const;
  const std::set<std::string, std::less<>> &phrases() const {
    return phrases_;
  }
  size_t size() const { return phrases_.size(); }

 private:
  std::set<std::string, std::less<>> phrases_;
};

GroundTruth LoadGroundTruth(const std::filesystem::path &path);

// Number of the first min(k, |ranked|) phrases that are in `truth`.
size_t HitsAtK(const RankedList &ranked, const GroundTruth &truth, size_t k);

// HitsAtK / k. The denominator stays k when the list is shorter.
// Throws Error if k == 0.
double PrecisionAtK(const RankedList &ranked, const GroundTruth &truth,
                    size_t k);

struct EvalRow {
  size_t k = 0;
  size_t hits = 0;
  double precision = 0;
};

struct EvalReport {
  RankMethod method = RankMethod::kEpd;
  std::vector<EvalRow> rows;
};

inline constexpr size_t kDefaultEvalKs[] = {10, 20, 30, 50};

EvalReport Evaluate(const RankedList &ranked, const GroundTruth &truth,
                    std::span<const size_t> ks = kDefaultEvalKs);

// Columns method, k, hits, precision, with a header row.
void WriteEvalTsv(const EvalReport &report, std::ostream &out);
// {"method": ..., "results": [{"k": .., "hits": .., "precision": ..}]}
void WriteEvalJson(const EvalReport &report, std::ostream &out);

}  // namespace euphrase

#endif  // EUPHRASE_EVAL_H_
