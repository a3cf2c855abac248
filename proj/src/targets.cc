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

#include "euphrase/targets.h"

#include <algorithm>
#include <fstream>

#include "euphrase/corpus.h"
#include "euphrase/error.h"
#include "euphrase/phrase_miner.h"

namespace euphrase {

TargetKeywordSet TargetKeywordSet::Create(
    const std::vector<std::string> &keywords) {
  TargetKeywordSet set;
  for (const std::string &keyword : keywords) {
    const std::vector<std::string> tokens = Tokenize(keyword);
    if (tokens.empty()) continue;
    std::string unit = JoinUnit(tokens);
    if (!set.Contains(unit)) set.units_.push_back(std::move(unit));
  }
  if (set.units_.empty()) throw Error("target keyword set is empty");
  return set;
}

bool TargetKeywordSet::Contains(std::string_view unit) const {
  return std::find(units_.begin(), units_.end(), unit) != units_.end();
}

std::vector<std::vector<std::string>> TargetKeywordSet::MultiWordTokens()
    const {
  std::vector<std::vector<std::string>> result;
  for (const std::string &unit : units_) {
    if (IsMultiWordUnit(unit)) result.push_back(SplitUnit(unit));
  }
  return result;
}

TargetKeywordSet LoadTargets(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open target keyword file: " + path.string());
  std::vector<std::string> keywords;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    keywords.push_back(line);
  }
  return TargetKeywordSet::Create(keywords);
}

}  // namespace euphrase
