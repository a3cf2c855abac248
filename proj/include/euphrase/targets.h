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

#ifndef EUPHRASE_TARGETS_H_
#define EUPHRASE_TARGETS_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace euphrase {

// Non-empty, duplicate-free list of target keywords. Keywords are stored as
// units: tokenized like corpus text and joined with '_' when multi-word.
class TargetKeywordSet {
 public:
  // Normalizes and deduplicates, keeping first occurrences. Throws Error
  // when nothing is left.
  static TargetKeywordSet Create(const std::vector<std::string> &keywords);

  const std::vector<std::string> &units() const { return units_; }
  bool Contains(std::string_view unit) const;
  size_t size() const { return units_.size(); }

  // Token sequences of the multi-word keywords.
  std::vector<std::vector<std::string>> MultiWordTokens() const;

 private:
  std::vector<std::string> units_;
};

// One keyword per line; blank lines and lines starting with '#' skipped.
TargetKeywordSet LoadTargets(const std::filesystem::path &path);

}  // namespace euphrase

#endif  // EUPHRASE_TARGETS_H_
