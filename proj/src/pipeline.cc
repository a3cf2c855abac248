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

#include "euphrase/pipeline.h"

#include <algorithm>

#include "euphrase/error.h"

namespace euphrase {

bool ConflictsWithTargets(std::span<const std::string> phrase,
                          const TargetKeywordSet &targets) {
  for (const std::string &target : targets.units()) {
    const std::vector<std::string> t = SplitUnit(target);
    // Segmentation is greedy and longest-first, so a phrase that starts
    // inside or before a target occurrence and reaches into it wins over
    // the target. A strict prefix of the target loses to it.
    for (size_t offset = 0; offset < phrase.size(); ++offset) {
      if (offset == 0 && phrase.size() < t.size()) continue;
      const size_t overlap = std::min(phrase.size() - offset, t.size());
      if (std::equal(t.begin(), t.begin() + overlap,
                     phrase.begin() + offset)) {
        return true;
      }
    }
  }
  return false;
}

MineResult MineStage(const Corpus &corpus, const TargetKeywordSet &targets,
                     const MinerConfig &config) {
  MineResult result;
  result.scored = MinePhrases(corpus, config);
  for (PhraseCandidate &c :
       AcceptedPhrases(result.scored, config.quality_threshold)) {
    if (!ConflictsWithTargets(c.tokens, targets)) {
      result.inventory.push_back(std::move(c));
    }
  }
  SegmentedCorpus segmented =
      SegmentCorpus(corpus, result.inventory, targets.MultiWordTokens());
  result.inventory = std::move(segmented.inventory);
  result.segmented = std::move(segmented.corpus);
  return result;
}

std::vector<std::string> InventoryUnits(
    std::span<const PhraseCandidate> inventory) {
  std::vector<std::string> units;
  units.reserve(inventory.size());
  for (const PhraseCandidate &c : inventory) units.push_back(c.Unit());
  return units;
}

EmbeddingTable EmbedStage(const Corpus &segmented,
                          const EmbeddingParams &params) {
  return TrainEmbeddings(segmented, params);
}

std::vector<MaskedSentence> ContextsStage(const Corpus &segmented,
                                          const TargetKeywordSet &targets,
                                          const ContextFilterConfig &config) {
  return FilterInformative(ExtractMaskedSentences(segmented, targets), config);
}

namespace {

template <typename T>
const T &Need(const T *input, const char *what, RankMethod method) {
  if (input == nullptr) {
    throw Error(std::string(RankMethodName(method)) + " ranking needs " +
                what);
  }
  return *input;
}

}  // namespace

RankedList RankStage(RankMethod method, const RankInputs &in) {
  switch (method) {
    case RankMethod::kEpd:
      return RankEpd(Need(in.pool, "a candidate pool", method),
                     Need(in.sentences, "masked sentences", method),
                     Need(in.scorer, "a scorer", method));
    case RankMethod::kWord2vec:
      return RankWord2vec(Need(in.pool, "a candidate pool", method));
    case RankMethod::kEigen:
      return RankEigen(Need(in.embeddings, "embeddings", method),
                       Need(in.pool, "a candidate pool", method),
                       Need(in.targets, "target keywords", method), in.eigen)
          .ranked;
    case RankMethod::kRankAll:
      return RankAll(in.inventory,
                     Need(in.sentences, "masked sentences", method),
                     Need(in.scorer, "a scorer", method));
  }
  throw Error("unknown ranking method");
}

PreparedRun PrepareRun(const Corpus &corpus, const TargetKeywordSet &targets,
                       const PipelineConfig &config) {
  PreparedRun run;
  run.mine = MineStage(corpus, targets, config.mine);
  run.inventory = InventoryUnits(run.mine.inventory);
  run.embeddings = EmbedStage(run.mine.segmented, config.embed);
  run.pool =
      Preselect(run.embeddings, run.inventory, targets, config.preselect_k);
  run.sentences = ContextsStage(run.mine.segmented, targets, config.contexts);
  return run;
}

}  // namespace euphrase
