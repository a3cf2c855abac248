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

// Corpora with a known distributional structure, for the embedding and
// pre-selection tests.

#ifndef EUPHRASE_TESTS_FIXTURES_H_
#define EUPHRASE_TESTS_FIXTURES_H_

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "euphrase/corpus.h"

namespace euphrase::fixtures {

struct CooccurrenceFixture {
  Corpus corpus;
  // Always within a few tokens of each other, in topic-0 sentences.
  std::string x = "xeno";
  std::string y = "yarrow";
  // Only in topic-1 sentences.
  std::string z = "zinnia";
  // Two distinct filler words drawn from the fixture's generator.
  std::string random_a, random_b;
};

// Sentences of topic words and shared filler. Each of 12 topics has eight
// characteristic words; filler is uniform over 150 words.
inline CooccurrenceFixture MakeCooccurrenceFixture(uint64_t seed,
                                                   int sentences = 3000) {
  std::mt19937_64 rng(seed);
  CooccurrenceFixture f;
  std::vector<std::string> filler;
  for (int i = 0; i < 150; ++i) filler.push_back("f" + std::to_string(i));
  std::vector<std::vector<std::string>> topics(12);
  for (size_t t = 0; t < topics.size(); ++t) {
    for (int i = 0; i < 8; ++i) {
      topics[t].push_back("t" + std::to_string(t) + "w" + std::to_string(i));
    }
  }
  std::vector<Document> docs;
  for (int s = 0; s < sentences; ++s) {
    const size_t topic = rng() % topics.size();
    Sentence sentence;
    for (int i = 0; i < 4; ++i) sentence.push_back(topics[topic][rng() % 8]);
    for (int i = 0; i < 4; ++i) sentence.push_back(filler[rng() % 150]);
    std::shuffle(sentence.begin(), sentence.end(), rng);
    if (topic == 0) {
      const size_t at = rng() % (sentence.size() + 1);
      sentence.insert(sentence.begin() + at, {f.x, filler[rng() % 150], f.y});
    } else if (topic == 1) {
      sentence.insert(sentence.begin() + rng() % (sentence.size() + 1), f.z);
    }
    docs.push_back({std::to_string(s + 1), {std::move(sentence)}});
  }
  const size_t a = rng() % 150;
  size_t b = rng() % 149;
  if (b >= a) ++b;
  f.random_a = filler[a];
  f.random_b = filler[b];
  f.corpus = Corpus(std::move(docs));
  return f;
}

}  // namespace euphrase::fixtures

#endif  // EUPHRASE_TESTS_FIXTURES_H_
