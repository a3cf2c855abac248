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

#ifndef EUPHRASE_STAGES_H_
#define EUPHRASE_STAGES_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "euphrase/config.h"
#include "euphrase/ranking.h"

namespace euphrase {

enum class Stage { kMine, kEmbed, kPreselect, kContexts, kRank, kEval, kAll };

std::string_view StageName(Stage stage);
std::optional<Stage> ParseStage(std::string_view name);

// File names of the stage artifacts inside the output directory.
namespace artifacts {
inline constexpr std::string_view kPhrases = "phrases.tsv";
inline constexpr std::string_view kInventory = "inventory.tsv";
inline constexpr std::string_view kSegmented = "segmented.jsonl";
inline constexpr std::string_view kEmbeddings = "embeddings.txt";
inline constexpr std::string_view kPool = "pool.tsv";
inline constexpr std::string_view kContexts = "contexts.jsonl";
inline constexpr std::string_view kResolvedConfig = "config.resolved";
}  // namespace artifacts

std::filesystem::path RankedPath(const std::filesystem::path &out_dir,
                                 RankMethod method);
std::filesystem::path EvalTsvPath(const std::filesystem::path &out_dir,
                                  RankMethod method);
std::filesystem::path EvalJsonPath(const std::filesystem::path &out_dir,
                                   RankMethod method);

// Runs one stage (or the whole chain) reading and writing artifacts under
// config.out_dir, and writes the resolved config snapshot there. Rank and
// eval use config.rank_method. `all` skips eval when no truth file is
// configured. Progress lines go to `log` when it is non-null.
//
// Throws ConfigError for settings the stage needs but lacks,
// MissingArtifactError when an upstream artifact is absent, ScorerError
// from the remote scorer and Error for everything else.
void RunStage(Stage stage, const PipelineConfig &config,
              std::ostream *log = nullptr);

}  // namespace euphrase

#endif  // EUPHRASE_STAGES_H_
