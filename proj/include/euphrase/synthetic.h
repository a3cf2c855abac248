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

#ifndef EUPHRASE_SYNTHETIC_H_
#define EUPHRASE_SYNTHETIC_H_

#include <cstdint>
#include <iosfwd>
#include <filesystem>
#include <string>
#include <vector>

#include "euphrase/corpus.h"
#include "euphrase/eval.h"
#include "euphrase/targets.h"

namespace euphrase {

struct PlantedPhrase {
  std::string phrase;
  // Fraction of its target's template occurrences the phrase takes over.
  double rate = 0.3;
};

struct SyntheticConfig {
  size_t n_docs = 2000;
  size_t n_targets = 2;
  // Assigned to targets round-robin.
  std::vector<PlantedPhrase> planted = {
      {"black tar", 0.3}, {"blue dream", 0.3}, {"white horse", 0.3}};
  // Size of the background (filler) vocabulary.
  size_t vocab_size = 500;
  uint64_t seed = 1;
};

// A corpus with planted euphemisms and the labels needed to score it.
//
// Every target owns a set of left and right context words. A template
// sentence puts one of them on each side of a slot, one or two filler
// tokens away from it, inside more filler. The slot holds the target, or
// one of its planted phrases with the configured rate. Related phrases of a
// target also show up in its template sentences, away from the slot, and
// unrelated decoy phrases appear only in filler sentences. Everything
// except targets, planted phrases and stopwords is made of generated
// pseudo-words.
struct SyntheticCorpus {
  Corpus corpus;
  TargetKeywordSet targets;
  GroundTruth truth;
  // planted[i] substitutes for target_of[i].
  std::vector<std::string> target_of;
  std::vector<std::string> related_phrases;
  std::vector<std::string> decoy_phrases;
};

// Deterministic for a fixed config. Throws Error on a degenerate config:
// no documents, no planted phrases, a rate outside (0, 1], rates of one
// target summing above 1, a single-word planted phrase, or too few targets
// or vocabulary words.
SyntheticCorpus GenerateSyntheticCorpus(const SyntheticConfig &config);

// One document per line, sentences terminated by ". ". Loading the result
// as plain lines yields the same corpus.
void WritePlainLines(const Corpus &corpus, std::ostream &out);

// Pipeline settings of the synthetic benchmark as a config document whose
// paths point at the files written by WriteSyntheticBundle.
std::string SyntheticPipelineConfig();

// Writes corpus.txt, targets.txt, truth.txt and pipeline.conf into `dir`,
// creating it if needed.
void WriteSyntheticBundle(const SyntheticCorpus &synthetic,
                          const std::filesystem::path &dir);

}  // namespace euphrase

#endif  // EUPHRASE_SYNTHETIC_H_
