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

#include "euphrase/synthetic.h"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <ostream>
#include <random>
#include <set>

#include "euphrase/error.h"
#include "euphrase/phrase_miner.h"
#include "euphrase/stopwords.h"

namespace euphrase {

namespace {

constexpr const char *kTargetNames[] = {
    "heroin", "marijuana", "cocaine", "methamphetamine",
    "ecstasy", "ketamine", "fentanyl", "oxycodone"};

constexpr size_t kContextWordsPerSide = 8;
constexpr size_t kSharedContextWords = 6;
constexpr size_t kRelatedPerTarget = 2;
constexpr size_t kDecoyPhrases = 40;
constexpr size_t kMinVocabulary = 50;

constexpr double kTemplateSentenceRate = 0.4;
constexpr double kStopwordRate = 0.3;
constexpr double kSharedContextRate = 0.5;
constexpr double kRelatedRate = 0.25;
constexpr double kDecoyRate = 0.35;

// The stopwords used as filler.
constexpr const char *kFillerStopwords[] = {
    "i", "the", "a", "to", "and", "of", "it", "my", "was", "with",
    "for", "this", "that", "some", "on", "in", "is", "me"};

class WordFactory {
 public:
  WordFactory(std::mt19937_64 &rng, std::set<std::string> reserved)
      : rng_(rng), used_(std::move(reserved)) {}

  std::string Next() {
    static constexpr char kConsonants[] = "bdfgklmnprstvz";
    static constexpr char kVowels[] = "aeiou";
    while (true) {
      const int syllables = 2 + static_cast<int>(rng_() % 2);
      std::string word;
      for (int s = 0; s < syllables; ++s) {
        word += kConsonants[rng_() % (sizeof(kConsonants) - 1)];
        word += kVowels[rng_() % (sizeof(kVowels) - 1)];
      }
      if (DefaultStopwords().Contains(word)) continue;
      if (used_.insert(word).second) return word;
    }
  }

  std::vector<std::string> Many(size_t n) {
    std::vector<std::string> words;
    for (size_t i = 0; i < n; ++i) words.push_back(Next());
    return words;
  }

 private:
  std::mt19937_64 &rng_;
  std::set<std::string> used_;
};

struct TargetProfile {
  std::string name;
  std::vector<std::string> left_context;
  std::vector<std::string> right_context;
  std::vector<std::vector<std::string>> related;
  // (tokens, cumulative rate) per planted phrase.
  std::vector<std::pair<std::vector<std::string>, double>> planted;
};

}  // namespace

SyntheticCorpus GenerateSyntheticCorpus(const SyntheticConfig &config) {
  constexpr size_t kTargetPool = std::size(kTargetNames);
  if (config.n_docs == 0) throw Error("synthetic corpus needs n_docs > 0");
  if (config.planted.empty()) {
    throw Error("synthetic corpus needs at least one planted phrase");
  }
  if (config.n_targets == 0 || config.n_targets > kTargetPool) {
    throw Error("synthetic corpus supports 1.." + std::to_string(kTargetPool) +
                " targets");
  }
  if (config.vocab_size < kMinVocabulary) {
    throw Error("synthetic vocabulary must have at least " +
                std::to_string(kMinVocabulary) + " words");
  }

  std::set<std::string> reserved(std::begin(kTargetNames),
                                 std::end(kTargetNames));
  std::vector<TargetProfile> profiles(config.n_targets);
  std::vector<std::string> target_names;
  for (size_t t = 0; t < config.n_targets; ++t) {
    profiles[t].name = kTargetNames[t];
    target_names.push_back(kTargetNames[t]);
  }
  std::vector<std::string> truth_phrases;
  std::vector<std::string> target_of;
  std::map<size_t, double> rate_sum;
  for (size_t i = 0; i < config.planted.size(); ++i) {
    const PlantedPhrase &p = config.planted[i];
    if (!(p.rate > 0 && p.rate <= 1)) {
      throw Error("planted rate must be in (0, 1]: " + p.phrase);
    }
    std::vector<std::string> tokens = Tokenize(p.phrase);
    if (tokens.size() < 2) {
      throw Error("planted phrase must be multi-word: " + p.phrase);
    }
    for (const std::string &token : tokens) {
      if (std::find(target_names.begin(), target_names.end(), token) !=
          target_names.end()) {
        throw Error("planted phrase reuses a target keyword: " + p.phrase);
      }
      reserved.insert(token);
    }
    const size_t t = i % config.n_targets;
    rate_sum[t] += p.rate;
    if (rate_sum[t] > 1.0 + 1e-12) {
      throw Error("planted rates for target " + profiles[t].name +
                  " sum above 1");
    }
    profiles[t].planted.emplace_back(tokens, rate_sum[t]);
    truth_phrases.push_back(p.phrase);
    target_of.push_back(profiles[t].name);
  }

  std::mt19937_64 rng(config.seed);
  WordFactory words(rng, reserved);
  const std::vector<std::string> background = words.Many(config.vocab_size);
  const std::vector<std::string> shared = words.Many(kSharedContextWords);
  std::vector<std::string> related_phrases;
  for (TargetProfile &profile : profiles) {
    profile.left_context = words.Many(kContextWordsPerSide);
    profile.right_context = words.Many(kContextWordsPerSide);
    for (size_t r = 0; r < kRelatedPerTarget; ++r) {
      profile.related.push_back(words.Many(2));
      related_phrases.push_back(JoinUnit(profile.related.back()));
    }
  }
  std::vector<std::vector<std::string>> decoys;
  std::vector<std::string> decoy_phrases;
  for (size_t d = 0; d < kDecoyPhrases; ++d) {
    decoys.push_back(words.Many(2));
    decoy_phrases.push_back(JoinUnit(decoys.back()));
  }

  auto chance = [&](double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
  };
  auto pick = [&](const auto &items) -> const auto & {
    return items[rng() % std::size(items)];
  };
  auto append = [](Sentence &s, const std::vector<std::string> &tokens) {
    s.insert(s.end(), tokens.begin(), tokens.end());
  };
  auto filler_word = [&]() -> std::string {
    if (chance(kStopwordRate)) return pick(kFillerStopwords);
    return pick(background);
  };

  std::vector<Document> documents;
  documents.reserve(config.n_docs);
  for (size_t d = 0; d < config.n_docs; ++d) {
    Document doc;
    doc.id = std::to_string(d + 1);
    const int n_sentences = 1 + static_cast<int>(rng() % 4);
    for (int s = 0; s < n_sentences; ++s) {
      Sentence sentence;
      if (chance(kTemplateSentenceRate)) {
        const TargetProfile &profile = pick(profiles);
        if (chance(kRelatedRate)) append(sentence, pick(profile.related));
        const int left_filler = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < left_filler; ++i) sentence.push_back(filler_word());
        if (chance(kSharedContextRate)) sentence.push_back(pick(shared));
        sentence.push_back(pick(profile.left_context));
        // One or two filler tokens always separate the slot from its
        // context words, so the slot's immediate neighbors vary.
        const int left_gap = 1 + static_cast<int>(rng() % 2);
        for (int i = 0; i < left_gap; ++i) sentence.push_back(filler_word());
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        bool substituted = false;
        for (const auto &[tokens, cumulative] : profile.planted) {
          if (u < cumulative) {
            append(sentence, tokens);
            substituted = true;
            break;
          }
        }
        if (!substituted) sentence.push_back(profile.name);
        const int right_gap = 1 + static_cast<int>(rng() % 2);
        for (int i = 0; i < right_gap; ++i) sentence.push_back(filler_word());
        sentence.push_back(pick(profile.right_context));
        const int right_filler = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < right_filler; ++i) sentence.push_back(filler_word());
        if (chance(kRelatedRate)) append(sentence, pick(profile.related));
      } else {
        const int length = 5 + static_cast<int>(rng() % 8);
        for (int i = 0; i < length; ++i) sentence.push_back(filler_word());
        if (chance(kDecoyRate)) {
          const auto &decoy = pick(decoys);
          const size_t at = rng() % (sentence.size() + 1);
          sentence.insert(sentence.begin() + at, decoy.begin(), decoy.end());
        }
      }
      doc.sentences.push_back(std::move(sentence));
    }
    documents.push_back(std::move(doc));
  }

  return SyntheticCorpus{Corpus(std::move(documents)),
                         TargetKeywordSet::Create(target_names),
                         GroundTruth::Create(truth_phrases),
                         std::move(target_of),
                         std::move(related_phrases),
                         std::move(decoy_phrases)};
}

void WritePlainLines(const Corpus &corpus, std::ostream &out) {
  for (const Document &doc : corpus.documents()) {
    bool first = true;
    for (const Sentence &sentence : doc.sentences) {
      for (size_t i = 0; i < sentence.size(); ++i) {
        if (!first) out << ' ';
        first = false;
        out << sentence[i];
        if (i + 1 == sentence.size()) out << '.';
      }
    }
    out << '\n';
  }
}

std::string SyntheticPipelineConfig() {
  return R"(# Synthetic benchmark written by `euphrase synth`.
corpus.path = corpus.txt
corpus.format = plain-lines
targets.path = targets.txt
truth.path = truth.txt
out_dir = out
seed = 1
threads = 1
mine.max_len = 4
mine.min_count = 5
embed.dim = 50
embed.window = 5
embed.epochs = 5
preselect.k = 20
scorer = offline
rank.method = epd
eval.k = 10,20,30,50
)";
}

namespace {

template <typename WriteFn>
void WriteFile(const std::filesystem::path &path, WriteFn write) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  write(out);
  out.close();
  if (!out) throw Error("error writing " + path.string());
}

}  // namespace

void WriteSyntheticBundle(const SyntheticCorpus &synthetic,
                          const std::filesystem::path &dir) {
  std::filesystem::create_directories(dir);
  WriteFile(dir / "corpus.txt",
            [&](std::ostream &out) { WritePlainLines(synthetic.corpus, out); });
  WriteFile(dir / "targets.txt", [&](std::ostream &out) {
    for (const std::string &t : synthetic.targets.units()) {
      out << UnitToSurface(t) << '\n';
    }
  });
  WriteFile(dir / "truth.txt", [&](std::ostream &out) {
    for (const std::string &p : synthetic.truth.phrases()) out << p << '\n';
  });
  WriteFile(dir / "pipeline.conf",
            [&](std::ostream &out) { out << SyntheticPipelineConfig(); });
}

}  // namespace euphrase
