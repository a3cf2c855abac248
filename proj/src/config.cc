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

#include "euphrase/config.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <set>

#include "euphrase/error.h"
#include "euphrase/tsv.h"

namespace euphrase {

namespace {

std::string_view Trim(std::string_view s) {
  const size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void BadValue(std::string_view key, std::string_view value,
                           std::string_view expected) {
  throw ConfigError(std::string(key) + ": invalid value \"" +
                    std::string(value) + "\" (expected " +
                    std::string(expected) + ")");
}

template <typename T>
T ParseInteger(std::string_view key, std::string_view value) {
  T parsed{};
  auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), parsed);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    BadValue(key, value, "an integer");
  }
  return parsed;
}

double ParseReal(std::string_view key, std::string_view value) {
  double parsed = 0;
  auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), parsed);
  if (ec != std::errc() || ptr != value.data() + value.size() ||
      !std::isfinite(parsed)) {
    BadValue(key, value, "a real number");
  }
  return parsed;
}

std::string FormatReal(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

struct Field {
  std::string_view key;
  std::function<void(PipelineConfig &, std::string_view)> set;
  std::function<std::string(const PipelineConfig &)> get;
};

template <typename T, typename Access>
Field IntegerField(std::string_view key, Access access) {
  return {key,
          [key, access](PipelineConfig &c, std::string_view v) {
            access(c) = ParseInteger<T>(key, v);
          },
          [access](const PipelineConfig &c) {
            return std::to_string(access(const_cast<PipelineConfig &>(c)));
          }};
}

template <typename Access>
Field RealField(std::string_view key, Access access) {
  return {key,
          [key, access](PipelineConfig &c, std::string_view v) {
            access(c) = ParseReal(key, v);
          },
          [access](const PipelineConfig &c) {
            return FormatReal(access(const_cast<PipelineConfig &>(c)));
          }};
}

template <typename Access>
Field PathField(std::string_view key, Access access) {
  return {key,
          [access](PipelineConfig &c, std::string_view v) {
            access(c) = std::filesystem::path(std::string(v));
          },
          [access](const PipelineConfig &c) {
            return access(const_cast<PipelineConfig &>(c)).string();
          }};
}

const std::vector<Field> &Fields() {
  static const std::vector<Field> *const kFields = new std::vector<Field>{
      PathField("corpus.path", [](PipelineConfig &c) -> auto & {
        return c.corpus_path;
      }),
      {"corpus.format",
       [](PipelineConfig &c, std::string_view v) {
         auto format = ParseCorpusFormat(v);
         if (!format) BadValue("corpus.format", v, "plain-lines|json-lines");
         c.corpus.format = *format;
       },
       [](const PipelineConfig &c) {
         return std::string(CorpusFormatName(c.corpus.format));
       }},
      {"corpus.text_field",
       [](PipelineConfig &c, std::string_view v) {
         if (v.empty()) BadValue("corpus.text_field", v, "a field name");
         c.corpus.text_field = std::string(v);
       },
       [](const PipelineConfig &c) { return c.corpus.text_field; }},
      PathField("targets.path", [](PipelineConfig &c) -> auto & {
        return c.targets_path;
      }),
      PathField("truth.path", [](PipelineConfig &c) -> auto & {
        return c.truth_path;
      }),
      PathField("stopwords.path", [](PipelineConfig &c) -> auto & {
        return c.stopwords_path;
      }),
      PathField("out_dir", [](PipelineConfig &c) -> auto & {
        return c.out_dir;
      }),
      {"seed",
       [](PipelineConfig &c, std::string_view v) {
         c.seed = ParseInteger<uint64_t>("seed", v);
         c.embed.seed = c.seed;
       },
       [](const PipelineConfig &c) { return std::to_string(c.seed); }},
      {"threads",
       [](PipelineConfig &c, std::string_view v) {
         c.threads = ParseInteger<int>("threads", v);
         c.embed.threads = c.threads;
         c.offline.threads = c.threads;
       },
       [](const PipelineConfig &c) { return std::to_string(c.threads); }},

      IntegerField<int>("mine.max_len", [](PipelineConfig &c) -> auto & {
        return c.mine.max_len;
      }),
      IntegerField<int64_t>("mine.min_count", [](PipelineConfig &c) -> auto & {
        return c.mine.min_count;
      }),
      RealField("mine.quality_threshold", [](PipelineConfig &c) -> auto & {
        return c.mine.quality_threshold;
      }),
      RealField("mine.pmi_weight", [](PipelineConfig &c) -> auto & {
        return c.mine.pmi_weight;
      }),
      RealField("mine.left_entropy_weight", [](PipelineConfig &c) -> auto & {
        return c.mine.left_entropy_weight;
      }),
      RealField("mine.right_entropy_weight", [](PipelineConfig &c) -> auto & {
        return c.mine.right_entropy_weight;
      }),
      RealField("mine.sigmoid_center", [](PipelineConfig &c) -> auto & {
        return c.mine.sigmoid_center;
      }),
      RealField("mine.sigmoid_steepness", [](PipelineConfig &c) -> auto & {
        return c.mine.sigmoid_steepness;
      }),

      IntegerField<int>("embed.window", [](PipelineConfig &c) -> auto & {
        return c.embed.window;
      }),
      IntegerField<int>("embed.dim", [](PipelineConfig &c) -> auto & {
        return c.embed.dim;
      }),
      IntegerField<int64_t>("embed.min_count", [](PipelineConfig &c) -> auto & {
        return c.embed.min_count;
      }),
      RealField("embed.subsample", [](PipelineConfig &c) -> auto & {
        return c.embed.subsample;
      }),
      IntegerField<int>("embed.negatives", [](PipelineConfig &c) -> auto & {
        return c.embed.negatives;
      }),
      IntegerField<int>("embed.epochs", [](PipelineConfig &c) -> auto & {
        return c.embed.epochs;
      }),
      RealField("embed.initial_lr", [](PipelineConfig &c) -> auto & {
        return c.embed.initial_lr;
      }),

      IntegerField<size_t>("preselect.k", [](PipelineConfig &c) -> auto & {
        return c.preselect_k;
      }),

      IntegerField<size_t>("contexts.min_context_tokens",
                           [](PipelineConfig &c) -> auto & {
                             return c.contexts.min_context_tokens;
                           }),
      IntegerField<size_t>("contexts.min_content_tokens",
                           [](PipelineConfig &c) -> auto & {
                             return c.contexts.min_content_tokens;
                           }),
      IntegerField<size_t>("contexts.context_cap",
                           [](PipelineConfig &c) -> auto & {
                             return c.remote.context_cap;
                           }),

      {"scorer",
       [](PipelineConfig &c, std::string_view v) {
         if (v == "offline") {
           c.scorer = ScorerKind::kOffline;
         } else if (v == "remote") {
           c.scorer = ScorerKind::kRemote;
         } else {
           BadValue("scorer", v, "offline|remote");
         }
       },
       [](const PipelineConfig &c) {
         return std::string(c.scorer == ScorerKind::kOffline ? "offline"
                                                             : "remote");
       }},
      IntegerField<int>("scorer.window", [](PipelineConfig &c) -> auto & {
        return c.offline.window;
      }),
      RealField("scorer.alpha", [](PipelineConfig &c) -> auto & {
        return c.offline.alpha;
      }),
      {"scorer.endpoint",
       [](PipelineConfig &c, std::string_view v) {
         c.remote.endpoint = std::string(v);
       },
       [](const PipelineConfig &c) { return c.remote.endpoint; }},
      {"scorer.timeout_ms",
       [](PipelineConfig &c, std::string_view v) {
         c.remote.timeout = std::chrono::milliseconds(
             ParseInteger<int64_t>("scorer.timeout_ms", v));
       },
       [](const PipelineConfig &c) {
         return std::to_string(c.remote.timeout.count());
       }},
      IntegerField<size_t>("scorer.batch_size", [](PipelineConfig &c) -> auto & {
        return c.remote.batch_size;
      }),
      IntegerField<size_t>("scorer.max_payload_bytes",
                           [](PipelineConfig &c) -> auto & {
                             return c.remote.max_payload_bytes;
                           }),
      IntegerField<int>("scorer.parallel_requests",
                        [](PipelineConfig &c) -> auto & {
                          return c.remote.parallel_requests;
                        }),
      IntegerField<int>("scorer.max_attempts", [](PipelineConfig &c) -> auto & {
        return c.remote.max_attempts;
      }),

      {"rank.method",
       [](PipelineConfig &c, std::string_view v) {
         auto method = ParseRankMethod(v);
         if (!method) BadValue("rank.method", v, "epd|word2vec|eigen|rank-all");
         c.rank_method = *method;
       },
       [](const PipelineConfig &c) {
         return std::string(RankMethodName(c.rank_method));
       }},
      RealField("rank.sim_threshold", [](PipelineConfig &c) -> auto & {
        return c.eigen.sim_threshold;
      }),
      RealField("rank.eigen_tolerance", [](PipelineConfig &c) -> auto & {
        return c.eigen.tolerance;
      }),
      IntegerField<int>("rank.eigen_max_iterations",
                        [](PipelineConfig &c) -> auto & {
                          return c.eigen.max_iterations;
                        }),

      {"eval.k",
       [](PipelineConfig &c, std::string_view v) {
         std::vector<size_t> ks;
         for (std::string_view part : SplitFields(v, ',')) {
           ks.push_back(ParseInteger<size_t>("eval.k", Trim(part)));
         }
         c.eval_ks = std::move(ks);
       },
       [](const PipelineConfig &c) {
         std::string out;
         for (size_t k : c.eval_ks) {
           if (!out.empty()) out += ',';
           out += std::to_string(k);
         }
         return out;
       }},
  };
  return *kFields;
}

const Field *FindField(std::string_view key) {
  for (const Field &f : Fields()) {
    if (f.key == key) return &f;
  }
  return nullptr;
}

void ResolvePath(std::filesystem::path &path,
                 const std::filesystem::path &base_dir) {
  if (!path.empty() && path.is_relative() && !base_dir.empty()) {
    path = (base_dir / path).lexically_normal();
  }
}

}  // namespace

std::vector<std::string> ConfigKeys() {
  std::vector<std::string> keys;
  for (const Field &f : Fields()) keys.emplace_back(f.key);
  return keys;
}

void SetConfigValue(PipelineConfig &config, std::string_view key,
                    std::string_view value) {
  const Field *field = FindField(key);
  if (!field) throw ConfigError("unknown key \"" + std::string(key) + "\"");
  field->set(config, value);
}

void ValidateConfig(const PipelineConfig &c) {
  std::vector<std::string> problems;
  auto require = [&](bool ok, std::string message) {
    if (!ok) problems.push_back(std::move(message));
  };
  require(c.threads >= 1, "threads must be >= 1");
  require(c.mine.max_len >= 2, "mine.max_len must be >= 2");
  require(c.mine.min_count >= 1, "mine.min_count must be >= 1");
  require(c.mine.quality_threshold >= 0 && c.mine.quality_threshold <= 1,
          "mine.quality_threshold must be in [0, 1]");
  require(c.mine.pmi_weight >= 0 && c.mine.left_entropy_weight >= 0 &&
              c.mine.right_entropy_weight >= 0,
          "mine feature weights must be >= 0");
  require(c.mine.sigmoid_steepness > 0, "mine.sigmoid_steepness must be > 0");
  require(c.embed.window >= 1, "embed.window must be >= 1");
  require(c.embed.dim >= 1, "embed.dim must be >= 1");
  require(c.embed.min_count >= 1, "embed.min_count must be >= 1");
  require(c.embed.subsample >= 0, "embed.subsample must be >= 0");
  require(c.embed.negatives >= 0, "embed.negatives must be >= 0");
  require(c.embed.epochs >= 1, "embed.epochs must be >= 1");
  require(c.embed.initial_lr > 0, "embed.initial_lr must be > 0");
  require(c.preselect_k >= 1, "preselect.k must be >= 1");
  require(c.remote.context_cap >= 1, "contexts.context_cap must be >= 1");
  require(c.offline.window >= 1, "scorer.window must be >= 1");
  require(c.offline.alpha > 0, "scorer.alpha must be > 0");
  if (c.scorer == ScorerKind::kRemote) {
    require(!c.remote.endpoint.empty(),
            "scorer.endpoint is required when scorer = remote");
  }
  require(c.remote.timeout.count() > 0, "scorer.timeout_ms must be > 0");
  require(c.remote.batch_size >= 1, "scorer.batch_size must be >= 1");
  require(c.remote.parallel_requests >= 1,
          "scorer.parallel_requests must be >= 1");
  require(c.remote.max_attempts >= 1, "scorer.max_attempts must be >= 1");
  require(c.eigen.sim_threshold >= -1 && c.eigen.sim_threshold <= 1,
          "rank.sim_threshold must be in [-1, 1]");
  require(c.eigen.tolerance > 0, "rank.eigen_tolerance must be > 0");
  require(c.eigen.max_iterations >= 1,
          "rank.eigen_max_iterations must be >= 1");
  require(!c.eval_ks.empty(), "eval.k must list at least one k");
  for (size_t k : c.eval_ks) require(k >= 1, "eval.k entries must be >= 1");
  if (!problems.empty()) {
    std::string message = "invalid configuration:";
    for (const std::string &p : problems) message += "\n  " + p;
    throw ConfigError(message);
  }
}

PipelineConfig ParseConfig(std::istream &in,
                           const std::filesystem::path &base_dir) {
  PipelineConfig config;
  std::vector<std::string> problems;
  std::set<std::string, std::less<>> seen;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string_view text = Trim(line);
    if (text.empty() || text.front() == '#') continue;
    const std::string where = "line " + std::to_string(line_number) + ": ";
    const size_t eq = text.find('=');
    if (eq == std::string_view::npos) {
      problems.push_back(where + "expected \"key = value\"");
      continue;
    }
    const std::string_view key = Trim(text.substr(0, eq));
    const std::string_view value = Trim(text.substr(eq + 1));
    if (!FindField(key)) {
      problems.push_back(where + "unknown key \"" + std::string(key) + "\"");
      continue;
    }
    if (!seen.emplace(key).second) {
      problems.push_back(where + "duplicate key \"" + std::string(key) + "\"");
      continue;
    }
    try {
      SetConfigValue(config, key, value);
    } catch (const ConfigError &e) {
      problems.push_back(where + e.what());
    }
  }
  if (!problems.empty()) {
    std::string message = "invalid configuration:";
    for (const std::string &p : problems) message += "\n  " + p;
    throw ConfigError(message);
  }
  ResolvePath(config.corpus_path, base_dir);
  ResolvePath(config.targets_path, base_dir);
  ResolvePath(config.truth_path, base_dir);
  ResolvePath(config.stopwords_path, base_dir);
  ResolvePath(config.out_dir, base_dir);
  ValidateConfig(config);
  return config;
}

PipelineConfig LoadConfig(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  return ParseConfig(in, path.parent_path());
}

void WriteResolvedConfig(const PipelineConfig &config, std::ostream &out) {
  for (const Field &f : Fields()) {
    out << f.key << " = " << f.get(config) << '\n';
  }
}

}  // namespace euphrase
