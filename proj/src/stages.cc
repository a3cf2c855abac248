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

#include "euphrase/stages.h"

#include <fstream>
#include <memory>
#include <ostream>

#include "euphrase/contexts.h"
#include "euphrase/corpus.h"
#include "euphrase/embeddings.h"
#include "euphrase/error.h"
#include "euphrase/eval.h"
#include "euphrase/phrase_miner.h"
#include "euphrase/pipeline.h"
#include "euphrase/preselect.h"
#include "euphrase/remote_scorer.h"
#include "euphrase/scoring.h"
#include "euphrase/stopwords.h"
#include "euphrase/targets.h"

namespace euphrase {

namespace fs = std::filesystem;

std::string_view StageName(Stage stage) {
  switch (stage) {
    case Stage::kMine: return "mine";
    case Stage::kEmbed: return "embed";
    case Stage::kPreselect: return "preselect";
    case Stage::kContexts: return "contexts";
    case Stage::kRank: return "rank";
    case Stage::kEval: return "eval";
    case Stage::kAll: return "all";
  }
  return "unknown";
}

std::optional<Stage> ParseStage(std::string_view name) {
  for (Stage s : {Stage::kMine, Stage::kEmbed, Stage::kPreselect,
                  Stage::kContexts, Stage::kRank, Stage::kEval, Stage::kAll}) {
    if (StageName(s) == name) return s;
  }
  return std::nullopt;
}

fs::path RankedPath(const fs::path &out_dir, RankMethod method) {
  return out_dir / ("ranked_" + std::string(RankMethodName(method)) + ".tsv");
}

fs::path EvalTsvPath(const fs::path &out_dir, RankMethod method) {
  return out_dir / ("eval_" + std::string(RankMethodName(method)) + ".tsv");
}

fs::path EvalJsonPath(const fs::path &out_dir, RankMethod method) {
  return out_dir / ("eval_" + std::string(RankMethodName(method)) + ".json");
}

namespace {

// Stage-local view of the config with the stopword list resolved.
class StageContext {
 public:
  StageContext(const PipelineConfig &config, std::ostream *log)
      : config_(config), log_(log) {
    if (!config_.stopwords_path.empty()) {
      stopwords_ = std::make_unique<StopwordSet>(
          LoadStopwords(config_.stopwords_path));
      config_.mine.stopwords = stopwords_.get();
      config_.contexts.stopwords = stopwords_.get();
    }
  }

  const PipelineConfig &config() const { return config_; }
  fs::path Out(std::string_view name) const { return config_.out_dir / name; }

  std::ostream &Log() { return log_ ? *log_ : discard_; }

  const TargetKeywordSet &Targets() {
    if (!targets_) {
      if (config_.targets_path.empty()) {
        throw ConfigError("targets.path is not set");
      }
      targets_ = LoadTargets(config_.targets_path);
    }
    return *targets_;
  }

 private:
  PipelineConfig config_;
  std::ostream *log_;
  // No stream buffer: everything written here is dropped.
  std::ostream discard_{nullptr};
  std::unique_ptr<StopwordSet> stopwords_;
  std::optional<TargetKeywordSet> targets_;
};

std::ifstream OpenArtifact(const fs::path &path, std::string_view producer) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw MissingArtifactError("missing " + path.string() + "; run the `" +
                                   std::string(producer) + "` stage first",
                               std::string(producer));
  }
  return in;
}

template <typename WriteFn>
void WriteArtifact(const fs::path &path, WriteFn write) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  write(out);
  out.close();
  if (!out) throw Error("error writing " + path.string());
}

Corpus ReadSegmented(StageContext &ctx) {
  std::ifstream in = OpenArtifact(ctx.Out(artifacts::kSegmented), "mine");
  return ReadCorpusJsonl(in);
}

std::vector<PhraseCandidate> ReadInventory(StageContext &ctx) {
  std::ifstream in = OpenArtifact(ctx.Out(artifacts::kInventory), "mine");
  return ReadPhraseTsv(in);
}

EmbeddingTable ReadEmbeddings(StageContext &ctx) {
  std::ifstream in = OpenArtifact(ctx.Out(artifacts::kEmbeddings), "embed");
  return LoadEmbeddings(in);
}

CandidatePool ReadPool(StageContext &ctx) {
  std::ifstream in = OpenArtifact(ctx.Out(artifacts::kPool), "preselect");
  return ReadPoolTsv(in);
}

std::vector<MaskedSentence> ReadContexts(StageContext &ctx) {
  std::ifstream in = OpenArtifact(ctx.Out(artifacts::kContexts), "contexts");
  return ReadMaskedSentencesJsonl(in);
}

void Mine(StageContext &ctx) {
  const PipelineConfig &config = ctx.config();
  if (config.corpus_path.empty()) throw ConfigError("corpus.path is not set");
  LoadResult loaded = LoadCorpus(config.corpus_path, config.corpus);
  for (const LoadDiagnostic &d : loaded.diagnostics) {
    ctx.Log() << "warning: " << config.corpus_path.string() << ":" << d.line
              << ": " << d.message << "\n";
  }
  if (loaded.corpus.token_count() == 0) {
    throw Error("corpus " + config.corpus_path.string() + " has no tokens");
  }
  MineResult mined = MineStage(loaded.corpus, ctx.Targets(), config.mine);
  WriteArtifact(ctx.Out(artifacts::kPhrases), [&](std::ostream &out) {
    WritePhraseTsv(mined.scored, out);
  });
  WriteArtifact(ctx.Out(artifacts::kInventory), [&](std::ostream &out) {
    WritePhraseTsv(mined.inventory, out);
  });
  WriteArtifact(ctx.Out(artifacts::kSegmented), [&](std::ostream &out) {
    WriteCorpusJsonl(mined.segmented, out);
  });
  ctx.Log() << "mine: " << loaded.corpus.documents().size() << " documents, "
            << mined.scored.size() << " candidates, "
            << mined.inventory.size() << " phrases accepted\n";
}

void Embed(StageContext &ctx) {
  const Corpus segmented = ReadSegmented(ctx);
  const EmbeddingTable table = EmbedStage(segmented, ctx.config().embed);
  WriteArtifact(ctx.Out(artifacts::kEmbeddings), [&](std::ostream &out) {
    SaveEmbeddings(table, out);
  });
  ctx.Log() << "embed: " << table.size() << " units, dim " << table.dim()
            << "\n";
}

void PreselectPool(StageContext &ctx) {
  const EmbeddingTable table = ReadEmbeddings(ctx);
  const std::vector<std::string> units = InventoryUnits(ReadInventory(ctx));
  const CandidatePool pool =
      Preselect(table, units, ctx.Targets(), ctx.config().preselect_k);
  for (const std::string &t : pool.missing_targets) {
    ctx.Log() << "warning: target " << t << " has no embedding\n";
  }
  WriteArtifact(ctx.Out(artifacts::kPool),
                [&](std::ostream &out) { WritePoolTsv(pool, out); });
  ctx.Log() << "preselect: " << pool.entries.size() << " of " << units.size()
            << " phrases kept\n";
}

void Contexts(StageContext &ctx) {
  const Corpus segmented = ReadSegmented(ctx);
  const std::vector<MaskedSentence> sentences =
      ContextsStage(segmented, ctx.Targets(), ctx.config().contexts);
  WriteArtifact(ctx.Out(artifacts::kContexts), [&](std::ostream &out) {
    WriteMaskedSentencesJsonl(sentences, out);
  });
  ctx.Log() << "contexts: " << sentences.size()
            << " informative masked sentences\n";
}

void Rank(StageContext &ctx) {
  const PipelineConfig &config = ctx.config();
  const RankMethod method = config.rank_method;
  const bool needs_pool = method != RankMethod::kRankAll;
  const bool needs_scorer =
      method == RankMethod::kEpd || method == RankMethod::kRankAll;

  // Inputs are checked in pipeline order so the error names the earliest
  // stage that is missing.
  std::optional<CandidatePool> pool;
  std::optional<std::vector<MaskedSentence>> sentences;
  std::optional<EmbeddingTable> table;
  std::vector<std::string> inventory;
  if (needs_scorer) {
    if (method == RankMethod::kRankAll) {
      inventory = InventoryUnits(ReadInventory(ctx));
    }
    sentences = ReadContexts(ctx);
  }
  if (method == RankMethod::kEigen) table = ReadEmbeddings(ctx);
  if (needs_pool) pool = ReadPool(ctx);

  RankInputs inputs;
  inputs.pool = pool ? &*pool : nullptr;
  inputs.sentences = sentences ? &*sentences : nullptr;
  inputs.embeddings = table ? &*table : nullptr;
  inputs.inventory = inventory;
  inputs.eigen = config.eigen;
  if (method == RankMethod::kEigen) inputs.targets = &ctx.Targets();

  std::unique_ptr<Scorer> scorer;
  if (needs_scorer) {
    if (config.scorer == ScorerKind::kRemote) {
      auto remote = std::make_unique<RemoteScorer>(config.remote);
      ctx.Log() << "rank: remote scorer model " << remote->model() << "\n";
      scorer = std::move(remote);
    } else {
      scorer = std::make_unique<OfflineScorer>(ReadSegmented(ctx),
                                               config.offline);
    }
    inputs.scorer = scorer.get();
  }

  const RankedList ranked = RankStage(method, inputs);
  WriteArtifact(RankedPath(config.out_dir, method),
                [&](std::ostream &out) { WriteRankedTsv(ranked, out); });
  ctx.Log() << "rank: " << RankMethodName(method) << " ranked "
            << ranked.entries.size() << " phrases\n";
}

void Eval(StageContext &ctx) {
  const PipelineConfig &config = ctx.config();
  if (config.truth_path.empty()) throw ConfigError("truth.path is not set");
  std::ifstream in =
      OpenArtifact(RankedPath(config.out_dir, config.rank_method), "rank");
  const RankedList ranked = ReadRankedTsv(in);
  const GroundTruth truth = LoadGroundTruth(config.truth_path);
  const EvalReport report = Evaluate(ranked, truth, config.eval_ks);
  WriteArtifact(EvalTsvPath(config.out_dir, config.rank_method),
                [&](std::ostream &out) { WriteEvalTsv(report, out); });
  WriteArtifact(EvalJsonPath(config.out_dir, config.rank_method),
                [&](std::ostream &out) { WriteEvalJson(report, out); });
  for (const EvalRow &row : report.rows) {
    ctx.Log() << "eval: " << RankMethodName(report.method) << " P@" << row.k
              << " = " << row.precision << " (" << row.hits << " hits)\n";
  }
}

}  // namespace

void RunStage(Stage stage, const PipelineConfig &config, std::ostream *log) {
  ValidateConfig(config);
  StageContext ctx(config, log);
  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  if (ec) {
    throw Error("cannot create " + config.out_dir.string() + ": " +
                ec.message());
  }
  WriteArtifact(ctx.Out(artifacts::kResolvedConfig), [&](std::ostream &out) {
    WriteResolvedConfig(config, out);
  });

  switch (stage) {
    case Stage::kMine: Mine(ctx); break;
    case Stage::kEmbed: Embed(ctx); break;
    case Stage::kPreselect: PreselectPool(ctx); break;
    case Stage::kContexts: Contexts(ctx); break;
    case Stage::kRank: Rank(ctx); break;
    case Stage::kEval: Eval(ctx); break;
    case Stage::kAll:
      Mine(ctx);
      Embed(ctx);
      PreselectPool(ctx);
      Contexts(ctx);
      Rank(ctx);
      if (config.truth_path.empty()) {
        ctx.Log() << "eval: skipped, truth.path is not set\n";
      } else {
        Eval(ctx);
      }
      break;
  }
}

}  // namespace euphrase
