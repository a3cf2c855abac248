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

#ifndef EUPHRASE_PIPELINE_H_
#define EUPHRASE_PIPELINE_H_

#include <span>
#include <string>
#include <vector>

#include "euphrase/config.h"
#include "euphrase/contexts.h"
#include "euphrase/corpus.h"
#include "euphrase/embeddings.h"
#include "euphrase/phrase_miner.h"
#include "euphrase/preselect.h"
#include "euphrase/ranking.h"
#include "euphrase/scoring.h"
#include "euphrase/targets.h"

namespace euphrase {

// In-memory versions of the pipeline stages. The on-disk stages in
// stages.h are thin wrappers around these.

struct MineResult {
  // Every scored candidate, best first.
  std::vector<PhraseCandidate> scored;
  // Accepted phrases that survive target protection.
  std::vector<PhraseCandidate> inventory;
  // The corpus with inventory phrases and multi-word targets joined.
  Corpus segmented;
};

// True when joining `phrase` could swallow or split a target occurrence:
// the phrase contains a target, or overlaps a multi-word target at either
// end.
bool ConflictsWithTargets(std::span<const std::string> phrase,
                          const TargetKeywordSet &targets);

MineResult MineStage(const Corpus &corpus, const TargetKeywordSet &targets,
                     const MinerConfig &config);

// Units of the inventory phrases, in inventory order.
std::vector<std::string> InventoryUnits(
    std::span<const PhraseCandidate> inventory);

EmbeddingTable EmbedStage(const Corpus &segmented,
                          const EmbeddingParams &params);

std::vector<MaskedSentence> ContextsStage(const Corpus &segmented,
                                          const TargetKeywordSet &targets,
                                          const ContextFilterConfig &config);

struct RankInputs {
  const CandidatePool *pool = nullptr;
  const std::vector<MaskedSentence> *sentences = nullptr;
  const Scorer *scorer = nullptr;
  const EmbeddingTable *embeddings = nullptr;
  const TargetKeywordSet *targets = nullptr;
  // Candidate set of rank-all: the whole inventory.
  std::span<const std::string> inventory;
  EigenConfig eigen;
};

// Runs one ranking method. Only the inputs that method reads need to be
// set; a missing one throws Error.
RankedList RankStage(RankMethod method, const RankInputs &inputs);

// Everything up to and including context extraction, for callers that
// want to rank in memory.
struct PreparedRun {
  MineResult mine;
  std::vector<std::string> inventory;
  EmbeddingTable embeddings;
  CandidatePool pool;
  std::vector<MaskedSentence> sentences;
};

PreparedRun PrepareRun(const Corpus &corpus, const TargetKeywordSet &targets,
                       const PipelineConfig &config);

}  // namespace euphrase

#endif  // EUPHRASE_PIPELINE_H_
