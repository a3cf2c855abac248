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

#ifndef EUPHRASE_CONFIG_H_
#define EUPHRASE_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "euphrase/contexts.h"
#include "euphrase/corpus.h"
#include "euphrase/embeddings.h"
#include "euphrase/phrase_miner.h"
#include "euphrase/ranking.h"
#include "euphrase/remote_scorer.h"
#include "euphrase/scoring.h"

namespace euphrase {

enum class ScorerKind { kOffline, kRemote };

// Every knob of a pipeline run. Defaults match the per-module defaults.
struct PipelineConfig {
  std::filesystem::path corpus_path;
  LoadOptions corpus;
  std::filesystem::path targets_path;
  std::filesystem::path truth_path;
  // Empty means the built-in stopword list.
  std::filesystem::path stopwords_path;
  std::filesystem::path out_dir = "out";
  uint64_t seed = 1;
  int threads = 1;

  MinerConfig mine;
  EmbeddingParams embed;
  size_t preselect_k = 1000;
  ContextFilterConfig contexts;

  ScorerKind scorer = ScorerKind::kOffline;
  OfflineScorerConfig offline;
  RemoteScorerConfig remote;

  RankMethod rank_method = RankMethod::kEpd;
  EigenConfig eigen;
  std::vector<size_t> eval_ks = {10, 20, 30, 50};
};

// Parses a flat "key = value" document ('#' starts a comment line).
// Unknown keys, duplicates, malformed values and failed validation are all
// collected and thrown together as a ConfigError. Relative paths are
// resolved against `base_dir`.
PipelineConfig ParseConfig(std::istream &in,
                           const std::filesystem::path &base_dir = {});
PipelineConfig LoadConfig(const std::filesystem::path &path);

// Sets one key; throws ConfigError for an unknown key or bad value.
void SetConfigValue(PipelineConfig &config, std::string_view key,
                    std::string_view value);

// Cross-field checks; throws ConfigError listing every problem.
void ValidateConfig(const PipelineConfig &config);

// Every key with its resolved value, one "key = value" line each, in a
// fixed order. Parsing the output yields an equivalent config.
void WriteResolvedConfig(const PipelineConfig &config, std::ostream &out);

std::vector<std::string> ConfigKeys();

}  // namespace euphrase

#endif  // EUPHRASE_CONFIG_H_
