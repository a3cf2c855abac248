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

#include "euphrase/eval.h"

#include <fstream>
#include <ostream>

#include "euphrase/corpus.h"
#include "euphrase/error.h"
#include "euphrase/phrase_miner.h"
#include "euphrase/tsv.h"
#include "json.hpp"

namespace euphrase {

namespace {

std::string SurfaceForm(std::string_view phrase) {
  std::string spaced = UnitToSurface(phrase);
  std::string surface;
  for (const std::string &token : Tokenize(spaced)) {
    if (!surface.empty()) surface += ' ';
    surface += token;
  }
  return surface;
}

}  // namespace

GroundTruth GroundTruth::Create(const std::vector<std::string> &phrases) {
  GroundTruth truth;
  std::string single_words;
  for (const std::string &phrase : phrases) {
    std::string surface = SurfaceForm(phrase);
    if (surface.empty()) continue;
    if (surface.find(' ') == std::string::npos) {
      single_words += single_words.empty() ? surface : ", " + surface;
      continue;
    }
    truth.phrases_.insert(std::move(surface));
  }
  if (!single_words.empty()) {
    throw Error("ground truth must contain only multi-word phrases; "
                "single words: " + single_words);
  }
  if (truth.phrases_.empty()) throw Error("ground truth is empty");
  return truth;
}

bool GroundTruth::Contains(std::string_view phrase) const {
  return phrases_.count(SurfaceForm(phrase)) > 0;
}

GroundTruth LoadGroundTruth(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open ground truth file: " + path.string());
  std::vector<std::string> phrases;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) phrases.push_back(line);
  }
  return GroundTruth::Create(phrases);
}

size_t HitsAtK(const RankedList &ranked, const GroundTruth &truth, size_t k) {
  const size_t top = std::min(k, ranked.entries.size());
  size_t hits = 0;
  for (size_t i = 0; i < top; ++i) {
    if (truth.Contains(ranked.entries[i].phrase)) ++hits;
  }
  return hits;
}

double PrecisionAtK(const RankedList &ranked, const GroundTruth &truth,
                    size_t k) {
  if (k == 0) throw Error("precision_at_k requires k >= 1");
  return static_cast<double>(HitsAtK(ranked, truth, k)) /
         static_cast<double>(k);
}

EvalReport Evaluate(const RankedList &ranked, const GroundTruth &truth,
                    std::span<const size_t> ks) {
  EvalReport report;
  report.method = ranked.method;
  for (size_t k : ks) {
    report.rows.push_back(
        {k, HitsAtK(ranked, truth, k), PrecisionAtK(ranked, truth, k)});
  }
  return report;
}

void WriteEvalTsv(const EvalReport &report, std::ostream &out) {
  out << "method\tk\thits\tprecision\n";
  for (const EvalRow &row : report.rows) {
    out << RankMethodName(report.method) << '\t' << row.k << '\t' << row.hits
        << '\t' << FormatFixed(row.precision, 6) << '\n';
  }
}

void WriteEvalJson(const EvalReport &report, std::ostream &out) {
  nlohmann::json doc;
  doc["method"] = RankMethodName(report.method);
  doc["results"] = nlohmann::json::array();
  for (const EvalRow &row : report.rows) {
    doc["results"].push_back(
        {{"k", row.k}, {"hits", row.hits}, {"precision", row.precision}});
  }
  out << doc.dump(2) << '\n';
}

}  // namespace euphrase
