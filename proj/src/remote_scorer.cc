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

#include "euphrase/remote_scorer.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <optional>
#include <thread>

#include "euphrase/phrase_miner.h"
#include "httplib.h"
#include "json.hpp"

namespace euphrase {

namespace {

using nlohmann::json;

void ConfigureClient(httplib::Client &client,
                     std::chrono::milliseconds timeout) {
  const auto sec = timeout.count() / 1000;
  const auto usec = (timeout.count() % 1000) * 1000;
  client.set_connection_timeout(sec, usec);
  client.set_read_timeout(sec, usec);
  client.set_write_timeout(sec, usec);
}

}  // namespace

std::string_view ScorerErrorKindName(ScorerErrorKind kind) {
  switch (kind) {
    case ScorerErrorKind::kHealthCheck:
      return "health check failed";
    case ScorerErrorKind::kTransport:
      return "transport failure";
    case ScorerErrorKind::kMalformedResponse:
      return "malformed response";
    case ScorerErrorKind::kCountMismatch:
      return "count mismatch";
  }
  return "scorer error";
}

RemoteScorer::RemoteScorer(RemoteScorerConfig config)
    : config_(std::move(config)) {
  const std::string &url = config_.endpoint;
  const size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw ScorerError(ScorerErrorKind::kHealthCheck,
                      "endpoint must look like http://host:port, got \"" +
                          url + "\"");
  }
  const size_t path_start = url.find('/', scheme_end + 3);
  origin_ = url.substr(0, path_start);
  if (path_start != std::string::npos) base_path_ = url.substr(path_start);
  while (!base_path_.empty() && base_path_.back() == '/') base_path_.pop_back();

  httplib::Client client(origin_);
  ConfigureClient(client, config_.timeout);
  auto response = client.Get(base_path_ + "/health");
  if (!response) {
    throw ScorerError(ScorerErrorKind::kHealthCheck,
                      "cannot reach " + url + ": " +
                          httplib::to_string(response.error()));
  }
  if (response->status != 200) {
    throw ScorerError(ScorerErrorKind::kHealthCheck,
                      url + "/health returned HTTP " +
                          std::to_string(response->status));
  }
  auto body = json::parse(response->body, nullptr, false);
  if (body.is_discarded() || !body.is_object() || !body.contains("model") ||
      !body["model"].is_string()) {
    throw ScorerError(ScorerErrorKind::kHealthCheck,
                      "health response lacks a \"model\" string");
  }
  model_ = body["model"].get<std::string>();
}

std::string RemoteScorer::BuildRequestBody(
    std::span<const std::string> candidates,
    std::span<const MaskedSentence> sentences, size_t context_cap) {
  json request;
  json &rows = request["sentences"] = json::array();
  for (const MaskedSentence &m : sentences) {
    const size_t left = std::min(context_cap, m.left.size());
    const size_t right = std::min(context_cap, m.right.size());
    json row;
    row["left"] = std::vector<std::string>(m.left.end() - left, m.left.end());
    row["right"] =
        std::vector<std::string>(m.right.begin(), m.right.begin() + right);
    rows.push_back(std::move(row));
  }
  json &names = request["candidates"] = json::array();
  for (const std::string &c : candidates) names.push_back(UnitToSurface(c));
  return request.dump();
}

std::vector<std::vector<double>> RemoteScorer::ParseResponseBody(
    const std::string &body, size_t sentence_count, size_t candidate_count) {
  auto response = json::parse(body, nullptr, false);
  if (response.is_discarded() || !response.is_object()) {
    throw ScorerError(ScorerErrorKind::kMalformedResponse,
                      "body is not a JSON object");
  }
  auto scores = response.find("scores");
  if (scores == response.end() || !scores->is_array()) {
    throw ScorerError(ScorerErrorKind::kMalformedResponse,
                      "missing \"scores\" array");
  }
  if (scores->size() != sentence_count) {
    throw ScorerError(ScorerErrorKind::kCountMismatch,
                      "expected " + std::to_string(sentence_count) +
                          " score rows, received " +
                          std::to_string(scores->size()));
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(sentence_count);
  for (const json &row : *scores) {
    if (!row.is_array()) {
      throw ScorerError(ScorerErrorKind::kMalformedResponse,
                        "score row is not an array");
    }
    if (row.size() != candidate_count) {
      throw ScorerError(ScorerErrorKind::kCountMismatch,
                        "expected " + std::to_string(candidate_count) +
                            " candidate scores, received " +
                            std::to_string(row.size()));
    }
    std::vector<double> raw;
    raw.reserve(candidate_count);
    for (const json &x : row) {
      if (!x.is_number()) {
        throw ScorerError(ScorerErrorKind::kMalformedResponse,
                          "score is not a number");
      }
      const double v = x.get<double>();
      if (!std::isfinite(v) || v < 0) {
        throw ScorerError(ScorerErrorKind::kMalformedResponse,
                          "score is negative or non-finite");
      }
      raw.push_back(v);
    }
    rows.push_back(NormalizeScores(raw));
  }
  return rows;
}

std::vector<std::vector<double>> RemoteScorer::PostOnce(
    const std::string &body, size_t sentence_count,
    size_t candidate_count) const {
  httplib::Client client(origin_);
  ConfigureClient(client, config_.timeout);
  auto response =
      client.Post(base_path_ + "/score", body, "application/json");
  if (!response) {
    throw ScorerError(ScorerErrorKind::kTransport,
                      httplib::to_string(response.error()));
  }
  if (response->status != 200) {
    throw ScorerError(ScorerErrorKind::kTransport,
                      "HTTP " + std::to_string(response->status) + ": " +
                          response->body.substr(0, 200));
  }
  return ParseResponseBody(response->body, sentence_count, candidate_count);
}

std::vector<std::vector<double>> RemoteScorer::PostWithRetries(
    const std::string &body, size_t sentence_count,
    size_t candidate_count) const {
  const int attempts = std::max(1, config_.max_attempts);
  for (int attempt = 1;; ++attempt) {
    try {
      return PostOnce(body, sentence_count, candidate_count);
    } catch (const ScorerError &e) {
      if (attempt >= attempts) {
        throw ScorerError(e.kind(), std::string(e.what()) + " (after " +
                                        std::to_string(attempts) +
                                        " attempts)");
      }
    }
  }
}

std::vector<double> RemoteScorer::ScoreBatch(
    std::span<const std::string> candidates,
    const MaskedSentence &sentence) const {
  if (candidates.empty()) throw Error("score_batch needs candidates");
  const std::string body = BuildRequestBody(
      candidates, std::span(&sentence, 1), config_.context_cap);
  return PostWithRetries(body, 1, candidates.size()).front();
}

ScoreMatrix RemoteScorer::ScoreAll(
    std::span<const std::string> candidates,
    std::span<const MaskedSentence> sentences) const {
  if (candidates.empty()) throw Error("score_batch needs candidates");
  struct Batch {
    size_t begin;
    size_t count;
    std::string body;
  };
  std::vector<Batch> batches;
  const size_t batch_size = std::max<size_t>(1, config_.batch_size);
  for (size_t begin = 0; begin < sentences.size();) {
    size_t count = std::min(batch_size, sentences.size() - begin);
    std::string body = BuildRequestBody(
        candidates, sentences.subspan(begin, count), config_.context_cap);
    while (body.size() > config_.max_payload_bytes && count > 1) {
      count /= 2;
      body = BuildRequestBody(candidates, sentences.subspan(begin, count),
                              config_.context_cap);
    }
    batches.push_back({begin, count, std::move(body)});
    begin += count;
  }

  ScoreMatrix matrix(std::vector<std::string>(candidates.begin(),
                                              candidates.end()),
                     sentences.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::optional<std::pair<size_t, ScorerError>> first_error;
  auto worker = [&] {
    while (!failed.load()) {
      const size_t b = next.fetch_add(1);
      if (b >= batches.size()) return;
      const Batch &batch = batches[b];
      try {
        auto rows = PostWithRetries(batch.body, batch.count, candidates.size());
        for (size_t i = 0; i < batch.count; ++i) {
          std::copy(rows[i].begin(), rows[i].end(),
                    matrix.Row(batch.begin + i).begin());
        }
      } catch (const ScorerError &e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error || b < first_error->first) first_error.emplace(b, e);
        failed = true;
      }
    }
  };
  const size_t workers_wanted = std::min<size_t>(
      batches.size(), static_cast<size_t>(std::max(1, config_.parallel_requests)));
  std::vector<std::thread> workers;
  for (size_t i = 0; i < workers_wanted; ++i) workers.emplace_back(worker);
  for (std::thread &w : workers) w.join();
  if (first_error) throw first_error->second;
  return matrix;
}

}  // namespace euphrase
