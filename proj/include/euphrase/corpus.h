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

#ifndef EUPHRASE_CORPUS_H_
#define EUPHRASE_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace euphrase {

// An ordered list of lowercased tokens. After phrase segmentation the
// elements are units, and a unit may be several tokens joined by '_'.
using Sentence = std::vector<std::string>;

struct Document {
  std::string id;
  std::vector<Sentence> sentences;

  bool operator==(const Document &other) const = default;
};

// Unit -> number of occurrences. Ordered so that dumps are stable.
using Vocabulary = std::map<std::string, int64_t, std::less<>>;

// Immutable collection of tokenized documents with exact vocabulary counts.
class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::vector<Document> documents);

  const std::vector<Document> &documents() const { return documents_; }
  const Vocabulary &vocab() const { return vocab_; }

  // Number of occurrences of `unit`, or 0.
  int64_t Count(std::string_view unit) const;

  // Total number of tokens over all sentences.
  int64_t token_count() const { return token_count_; }
  size_t sentence_count() const { return sentence_count_; }
  bool empty() const { return documents_.empty(); }

  bool operator==(const Corpus &other) const {
    return documents_ == other.documents_;
  }

 private:
  std::vector<Document> documents_;
  Vocabulary vocab_;
  int64_t token_count_ = 0;
  size_t sentence_count_ = 0;
};

// Tokenization rules:
//  - text is split on Unicode whitespace;
//  - ASCII letters are lowercased, other bytes are kept as is;
//  - punctuation is stripped from both ends of every chunk, and chunks
//    that become empty are dropped;
//  - a chunk whose last character is '.', '!' or '?' ends a sentence.
std::vector<std::string> Tokenize(std::string_view text);
std::vector<Sentence> SplitSentences(std::string_view text);

bool IsValidUtf8(std::string_view text);

enum class CorpusFormat { kPlainLines, kJsonLines };

std::optional<CorpusFormat> ParseCorpusFormat(std::string_view name);
std::string_view CorpusFormatName(CorpusFormat format);

struct LoadOptions {
  CorpusFormat format = CorpusFormat::kPlainLines;
  // Name of the text field of json-lines records.
  std::string text_field = "text";
};

struct LoadDiagnostic {
  int64_t line = 0;
  std::string message;
};

struct LoadResult {
  Corpus corpus;
  // Malformed records that were skipped, with their 1-based line numbers.
  int64_t skipped = 0;
  std::vector<LoadDiagnostic> diagnostics;
};

// Reads one document per record. Blank lines are not records. Document ids
// are the 1-based line number, or the "id" field of json-lines records
// when present. Throws Error if the file cannot be opened.
LoadResult LoadCorpus(const std::filesystem::path &path,
                      const LoadOptions &options);
LoadResult ParseCorpus(std::istream &in, const LoadOptions &options);

// Tokenized corpus dump: one JSON object per document,
// {"id": ..., "sentences": [[unit, ...], ...]}.
void WriteCorpusJsonl(const Corpus &corpus, std::ostream &out);
Corpus ReadCorpusJsonl(std::istream &in);

}  // namespace euphrase

#endif  // EUPHRASE_CORPUS_H_
