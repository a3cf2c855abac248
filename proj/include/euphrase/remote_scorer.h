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

#ifndef EUPHRASE_REMOTE_SCORER_H_
#define EUPHRASE_REMOTE_SCORER_H_

#include <chrono>
#include <span>
#include <string>
#include <vector>

#include "euphrase/scoring.h"

namespace euphrase {

enum class ScorerErrorKind {
  kHealthCheck,
  kTransport,
  kMalformedResponse,
  kCountMismatch,
};

std::string_view ScorerErrorKindName(ScorerErrorKind kind);

class ScorerError : public Error {
 public:
  ScorerError(ScorerErrorKind kind, const std::string &message)
      : Error(std::string(ScorerErrorKindName(kind)) + ": " + message),
        kind_(kind) {}

  ScorerErrorKind kind() const { return kind_; }

 private:
  ScorerErrorKind kind_;
};

struct RemoteScorerConfig {
  // Base URL, e.g. "http://127.0.0.1:8080". A path prefix is allowed.
  std::string endpoint;
  std::chrono::milliseconds timeout{30000};
  // Sentences per request; every request carries the full candidate list.
  size_t batch_size = 32;
  // Requests whose body would exceed this are split further.
  size_t max_payload_bytes = 8u << 20;
  int parallel_requests = 4;
  int max_attempts = 3;
  // Context tokens sent on each side of the mask, nearest first.
  size_t context_cap = 15;
};

// Client for a masked-span scoring service:
//
//   POST /score  {"sentences": [{"left": [...], "right": [...]}, ...],
//                 "candidates": ["black tar", ...]}
//             -> {"scores": [[s11, s12, ...], ...]}
//   GET /health -> {"model": "..."}
//
// Raw scores are re-normalized per sentence over the candidate list.
class RemoteScorer : public Scorer {
 public:
  // Runs the health check; throws ScorerError(kHealthCheck) on failure.
  explicit RemoteScorer(RemoteScorerConfig config);

  const std::string &model() const { return model_; }

  std::vector<double> ScoreBatch(std::span<const std::string> candidates,
                                 const MaskedSentence &sentence) const override;
  ScoreMatrix ScoreAll(
      std::span<const std::string> candidates,
      std::span<const MaskedSentence> sentences) const override;

  // Request body for one batch. Candidate units are sent space-separated.
  static std::string BuildRequestBody(
      std::span<const std::string> candidates,
      std::span<const MaskedSentence> sentences, size_t context_cap);

  // Validates a response body; throws ScorerError.
  static std::vector<std::vector<double>> ParseResponseBody(
      const std::string &body, size_t sentence_count,
      size_t candidate_count);

 private:
  std::vector<std::vector<double>> PostWithRetries(
      const std::string &body, size_t sentence_count,
      size_t candidate_count) const;
  std::vector<std::vector<double>> PostOnce(const std::string &body,
                                            size_t sentence_count,
                                            size_t candidate_count) const;

  RemoteScorerConfig config_;
  std::string origin_;
  std::string base_path_;
  std::string model_;
};

}  // namespace euphrase

#endif  // EUPHRASE_REMOTE_SCORER_H_
