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

// Command-line driver: one subcommand per pipeline stage, plus `synth` to
// write a synthetic benchmark.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "euphrase/config.h"
#include "euphrase/error.h"
#include "euphrase/remote_scorer.h"
#include "euphrase/stages.h"
#include "euphrase/synthetic.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitScorer = 3;

struct GlobalFlags {
  std::string config_path;
  std::optional<uint64_t> seed;
  std::optional<int> threads;
  std::string out_dir;
  std::vector<std::string> overrides;
  std::string method;
};

euphrase::PipelineConfig ResolveConfig(const GlobalFlags &flags) {
  euphrase::PipelineConfig config;
  if (!flags.config_path.empty()) {
    config = euphrase::LoadConfig(flags.config_path);
  }
  for (const std::string &kv : flags.overrides) {
    const size_t eq = kv.find('=');
    if (eq == std::string::npos) {
      throw euphrase::ConfigError("--set expects key=value, got \"" + kv +
                                  "\"");
    }
    euphrase::SetConfigValue(config, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (flags.seed) euphrase::SetConfigValue(config, "seed",
                                           std::to_string(*flags.seed));
  if (flags.threads) euphrase::SetConfigValue(config, "threads",
                                              std::to_string(*flags.threads));
  if (!flags.out_dir.empty()) config.out_dir = flags.out_dir;
  if (!flags.method.empty()) {
    euphrase::SetConfigValue(config, "rank.method", flags.method);
  }
  euphrase::ValidateConfig(config);
  return config;
}

int RunSynth(size_t docs, uint64_t seed, const std::string &dir) {
  euphrase::SyntheticConfig config;
  config.n_docs = docs;
  config.seed = seed;
  const euphrase::SyntheticCorpus synthetic =
      euphrase::GenerateSyntheticCorpus(config);
  euphrase::WriteSyntheticBundle(synthetic, dir);
  std::cerr << "synth: wrote " << synthetic.corpus.documents().size()
            << " documents to " << dir << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Euphemistic phrase detection pipeline."};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_option("--config", flags.config_path, "Pipeline config file")
      ->check(CLI::ExistingFile);
  app.add_option("--seed", flags.seed, "Random seed (overrides config)");
  app.add_option("--threads", flags.threads,
                 "Worker threads; 1 gives deterministic output")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", flags.out_dir, "Output directory");
  app.add_option("--set", flags.overrides,
                 "Override a config key, as key=value (repeatable)");

  const std::string methods = "epd|word2vec|eigen|rank-all";
  std::vector<std::pair<CLI::App *, euphrase::Stage>> stages;
  for (euphrase::Stage stage :
       {euphrase::Stage::kMine, euphrase::Stage::kEmbed,
        euphrase::Stage::kPreselect, euphrase::Stage::kContexts,
        euphrase::Stage::kRank, euphrase::Stage::kEval,
        euphrase::Stage::kAll}) {
    CLI::App *sub = app.add_subcommand(
        std::string(euphrase::StageName(stage)),
        "Run the " + std::string(euphrase::StageName(stage)) + " stage");
    if (stage == euphrase::Stage::kRank || stage == euphrase::Stage::kEval ||
        stage == euphrase::Stage::kAll) {
      sub->add_option("--method", flags.method, "Ranking method: " + methods);
    }
    stages.emplace_back(sub, stage);
  }
  stages.back().first->description("Run every stage in order");

  size_t synth_docs = 2000;
  uint64_t synth_seed = 1;
  std::string synth_dir;
  CLI::App *synth =
      app.add_subcommand("synth", "Write a synthetic benchmark directory");
  synth->add_option("dir", synth_dir, "Destination directory")->required();
  synth->add_option("--docs", synth_docs, "Number of documents");
  synth->add_option("--synth-seed", synth_seed, "Generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (synth->parsed()) return RunSynth(synth_docs, synth_seed, synth_dir);
    const euphrase::PipelineConfig config = ResolveConfig(flags);
    for (const auto &[sub, stage] : stages) {
      if (sub->parsed()) euphrase::RunStage(stage, config, &std::cerr);
    }
    return kExitOk;
  } catch (const euphrase::ConfigError &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const euphrase::ScorerError &e) {
    std::cerr << "scorer error: " << e.what() << "\n";
    return kExitScorer;
  } catch (const euphrase::MissingArtifactError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
