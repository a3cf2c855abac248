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

#ifndef EUPHRASE_STOPWORDS_H_
#define EUPHRASE_STOPWORDS_H_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "euphrase/corpus.h"

namespace euphrase {

// Set of function words. Phrases may not start or end with one, and they do
// not count as content in masked-sentence contexts.
class StopwordSet {
 public:
  StopwordSet() = default;
  explicit StopwordSet(std::vector<std::string> words);

  bool Contains(std::string_view token) const;
  size_t size() const { return words_.size(); }

 private:
  std::set<std::string, std::less<>> words_;
};

// Standard English function words, also shipped as data/stopwords.txt.
const StopwordSet &DefaultStopwords();

// One token per line; lines are normalized like corpus text.
StopwordSet LoadStopwords(const std::filesystem::path &path);

}  // namespace euphrase

#endif  // EUPHRASE_STOPWORDS_H_
