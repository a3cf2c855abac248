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

#include "euphrase/contexts.h"

#include <istream>
#include <ostream>
#include <set>

#include "euphrase/error.h"
#include "json.hpp"

namespace euphrase {

std::vector<MaskedSentence> ExtractMaskedSentences(
    const Corpus &segmented, const TargetKeywordSet &targets) {
  std::vector<MaskedSentence> sentences;
  for (const Document &doc : segmented.documents()) {
    for (size_t s = 0; s < doc.sentences.size(); ++s) {
      const Sentence &units = doc.sentences[s];
      for (size_t i = 0; i < units.size(); ++i) {
        if (!targets.Contains(units[i])) continue;
        MaskedSentence m;
        m.left.assign(units.begin(), units.begin() + i);
        m.right.assign(units.begin() + i + 1, units.end());
        m.target = units[i];
        m.doc_id = doc.id;
        m.sentence_index = s;
        sentences.push_back(std::move(m));
      }
    }
  }
  return sentences;
}

std::vector<MaskedSentence> FilterInformative(
    std::span<const MaskedSentence> sentences,
    const ContextFilterConfig &config) {
  const StopwordSet &stopwords =
      config.stopwords ? *config.stopwords : DefaultStopwords();
  std::vector<MaskedSentence> kept;
  std::set<std::pair<std::vector<std::string>, std::vector<std::string>>>
      seen;
  for (const MaskedSentence &m : sentences) {
    if (m.left.size() + m.right.size() < config.min_context_tokens) continue;
    size_t content = 0;
    for (const auto *side : {&m.left, &m.right}) {
      for (const std::string &token : *side) {
        if (!stopwords.Contains(token)) ++content;
      }
    }
    if (content < config.min_content_tokens) continue;
    if (!seen.emplace(m.left, m.right).second) continue;
    kept.push_back(m);
  }
  return kept;
}

void WriteMaskedSentencesJsonl(std::span<const MaskedSentence> sentences,
                               std::ostream &out) {
  for (const MaskedSentence &m : sentences) {
    nlohmann::json record;
    record["left"] = m.left;
    record["right"] = m.right;
    record["target"] = m.target;
    record["doc_id"] = m.doc_id;
    record["sent_idx"] = m.sentence_index;
    out << record.dump() << '\n';
  }
}

std::vector<MaskedSentence> ReadMaskedSentencesJsonl(std::istream &in) {
  std::vector<MaskedSentence> sentences;
  std::string line;
  int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      auto record = nlohmann::json::parse(line);
      MaskedSentence m;
      m.left = record.at("left").get<std::vector<std::string>>();
      m.right = record.at("right").get<std::vector<std::string>>();
      m.target = record.at("target").get<std::string>();
      m.doc_id = record.at("doc_id").get<std::string>();
      m.sentence_index = record.at("sent_idx").get<size_t>();
      sentences.push_back(std::move(m));
    } catch (const nlohmann::json::exception &e) {
      throw Error("malformed masked sentence at line " +
                  std::to_string(line_number) + ": " + e.what());
    }
  }
  return sentences;
}

}  // namespace euphrase
