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

#include "euphrase/stopwords.h"

#include <fstream>
#include <string>

#include "euphrase/error.h"

namespace euphrase {

namespace {

// Same list as data/stopwords.txt.
constexpr std::string_view kDefaultStopwords[] = {
    "a", "about", "above", "after", "again", "against", "all", "am", "an",
    "and", "any", "are", "as", "at", "be", "because", "been", "before", "being",
    "below", "between", "both", "but", "by", "can", "could", "did", "do",
    "does", "doing", "down", "during", "each", "few", "for", "from", "further",
    "had", "has", "have", "having", "he", "her", "here", "hers", "herself",
    "him", "himself", "his", "how", "i", "if", "in", "into", "is", "it", "its",
    "itself", "just", "me", "more", "most", "my", "myself", "no", "nor", "not",
    "now", "of", "off", "on", "once", "only", "or", "other", "our", "ours",
    "ourselves", "out", "over", "own", "same", "she", "should", "so", "some",
    "such", "than", "that", "the", "their", "theirs", "them", "themselves",
    "then", "there", "these", "they", "this", "those", "through", "to", "too",
    "under", "until", "up", "very", "was", "we", "were", "what", "when",
    "where", "which", "while", "who", "whom", "why", "will", "with", "would",
    "you", "your", "yours", "yourself", "yourselves",
};

}  // namespace

StopwordSet::StopwordSet(std::vector<std::string> words) {
  for (std::string &word : words) words_.insert(std::move(word));
}

bool StopwordSet::Contains(std::string_view token) const {
  return words_.find(token) != words_.end();
}

const StopwordSet &DefaultStopwords() {
  static const StopwordSet *const kSet = [] {
    std::vector<std::string> words(std::begin(kDefaultStopwords),
                                   std::end(kDefaultStopwords));
    return new StopwordSet(std::move(words));
  }();
  return *kSet;
}

StopwordSet LoadStopwords(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open stopword file: " + path.string());
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    for (std::string &token : Tokenize(line)) words.push_back(std::move(token));
  }
  return StopwordSet(std::move(words));
}

}  // namespace euphrase
