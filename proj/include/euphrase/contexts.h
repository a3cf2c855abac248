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

#ifndef EUPHRASE_CONTEXTS_H_
#define EUPHRASE_CONTEXTS_H_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "euphrase/corpus.h"
#include "euphrase/stopwords.h"
#include "euphrase/targets.h"

namespace euphrase {

// A sentence with one target occurrence removed. The mask sits between
// `left` and `right`.
struct MaskedSentence {
  std::vector<std::string> left;
  std::vector<std::string> right;
  std::string target;
  std::string doc_id;
  size_t sentence_index = 0;

  bool operator==(const MaskedSentence &other) const = default;
};

// One masked sentence per target occurrence, in document order. Contexts
// are complete; capping happens at the scorer boundary.
std::vector<MaskedSentence> ExtractMaskedSentences(
    const Corpus &segmented, const TargetKeywordSet &targets);

struct ContextFilterConfig {
  size_t min_context_tokens = 5;
  size_t min_content_tokens = 2;
  const StopwordSet *stopwords = &DefaultStopwords();
};

// Keeps sentences with at least min_context_tokens context tokens of which
// at least min_content_tokens are not stopwords, then drops repeated
// (left, right) contexts after their first occurrence.
std::vector<MaskedSentence> FilterInformative(
    std::span<const MaskedSentence> sentences,
    const ContextFilterConfig &config);

// JSON lines with fields left, right, target, doc_id, sent_idx.
void WriteMaskedSentencesJsonl(std::span<const MaskedSentence> sentences,
                               std::ostream &out);
std::vector<MaskedSentence> ReadMaskedSentencesJsonl(std::istream &in);

}  // namespace euphrase

#endif  // EUPHRASE_CONTEXTS_H_
