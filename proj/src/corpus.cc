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

#include "euphrase/corpus.h"

#include <fstream>
#include <istream>
#include <ostream>

#include "euphrase/error.h"
#include "json.hpp"

namespace euphrase {

namespace {

// Decodes the code point starting at text[pos]. Invalid sequences decode
// as a single byte so that tokenization stays total.
char32_t DecodeAt(std::string_view text, size_t pos, size_t *length) {
  const auto b0 = static_cast<unsigned char>(text[pos]);
  size_t need = 0;
  char32_t cp = 0;
  if (b0 < 0x80) {
    *length = 1;
    return b0;
  } else if ((b0 & 0xE0) == 0xC0) {
    need = 1;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    need = 2;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    need = 3;
    cp = b0 & 0x07;
  } else {
    *length = 1;
    return 0xFFFD;
  }
  if (pos + need >= text.size()) {
    *length = 1;
    return 0xFFFD;
  }
  for (size_t i = 1; i <= need; ++i) {
    const auto b = static_cast<unsigned char>(text[pos + i]);
    if ((b & 0xC0) != 0x80) {
      *length = 1;
      return 0xFFFD;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  *length = need + 1;
  return cp;
}

bool IsSpace(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool IsPunctuation(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
  }
  switch (cp) {
    case 0xA1: case 0xA7: case 0xAB: case 0xB6: case 0xB7: case 0xBB:
    case 0xBF:
      return true;
    default:
      break;
  }
  // General punctuation and CJK symbols/punctuation blocks.
  return (cp >= 0x2010 && cp <= 0x2027) || (cp >= 0x2030 && cp <= 0x205E) ||
         (cp >= 0x3001 && cp <= 0x3003) || (cp >= 0x3008 && cp <= 0x3011);
}

bool EndsSentence(std::string_view chunk) {
  const char last = chunk.back();
  return last == '.' || last == '!' || last == '?';
}

// Strips edge punctuation and lowercases ASCII. May return "".
std::string NormalizeChunk(std::string_view chunk) {
  size_t begin = 0;
  size_t end = chunk.size();
  while (begin < end) {
    size_t len = 0;
    if (!IsPunctuation(DecodeAt(chunk, begin, &len))) break;
    begin += len;
  }
  while (end > begin) {
    // Walk back to the start of the last code point.
    size_t start = end - 1;
    while (start > begin &&
           (static_cast<unsigned char>(chunk[start]) & 0xC0) == 0x80 &&
           end - start < 4) {
      --start;
    }
    size_t len = 0;
    const char32_t cp = DecodeAt(chunk, start, &len);
    if (start + len != end) {
      // Malformed tail; treat the last byte as an ordinary character.
      break;
    }
    if (!IsPunctuation(cp)) break;
    end = start;
  }
  std::string token(chunk.substr(begin, end - begin));
  for (char &c : token) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return token;
}

// Calls visit(chunk) for every whitespace-delimited chunk of text.
template <typename Visitor>
void ForEachChunk(std::string_view text, Visitor &&visit) {
  size_t pos = 0;
  size_t chunk_start = std::string_view::npos;
  while (pos < text.size()) {
    size_t len = 0;
    const char32_t cp = DecodeAt(text, pos, &len);
    if (IsSpace(cp)) {
      if (chunk_start != std::string_view::npos) {
        visit(text.substr(chunk_start, pos - chunk_start));
        chunk_start = std::string_view::npos;
      }
    } else if (chunk_start == std::string_view::npos) {
      chunk_start = pos;
    }
    pos += len;
  }
  if (chunk_start != std::string_view::npos) visit(text.substr(chunk_start));
}

}  // namespace

Corpus::Corpus(std::vector<Document> documents)
    : documents_(std::move(documents)) {
  for (const Document &doc : documents_) {
    sentence_count_ += doc.sentences.size();
    for (const Sentence &sentence : doc.sentences) {
      token_count_ += static_cast<int64_t>(sentence.size());
      for (const std::string &token : sentence) ++vocab_[token];
    }
  }
}

int64_t Corpus::Count(std::string_view unit) const {
  auto it = vocab_.find(unit);
  return it == vocab_.end() ? 0 : it->second;
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  ForEachChunk(text, [&](std::string_view chunk) {
    std::string token = NormalizeChunk(chunk);
    if (!token.empty()) tokens.push_back(std::move(token));
  });
  return tokens;
}

std::vector<Sentence> SplitSentences(std::string_view text) {
  std::vector<Sentence> sentences;
  Sentence current;
  ForEachChunk(text, [&](std::string_view chunk) {
    std::string token = NormalizeChunk(chunk);
    if (!token.empty()) current.push_back(std::move(token));
    if (EndsSentence(chunk) && !current.empty()) {
      sentences.push_back(std::move(current));
      current.clear();
    }
  });
  if (!current.empty()) sentences.push_back(std::move(current));
  return sentences;
}

bool IsValidUtf8(std::string_view text) {
  size_t pos = 0;
  while (pos < text.size()) {
    const auto b0 = static_cast<unsigned char>(text[pos]);
    size_t need;
    char32_t cp;
    if (b0 < 0x80) {
      ++pos;
      continue;
    } else if ((b0 & 0xE0) == 0xC0) {
      need = 1;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      need = 2;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      need = 3;
      cp = b0 & 0x07;
    } else {
      return false;
    }
    if (text.size() - pos <= need) return false;
    for (size_t i = 1; i <= need; ++i) {
      const auto b = static_cast<unsigned char>(text[pos + i]);
      if ((b & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (b & 0x3F);
    }
    // Overlong encodings, surrogates and out-of-range code points.
    static constexpr char32_t kMinForLength[] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLength[need] || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    pos += need + 1;
  }
  return true;
}

std::optional<CorpusFormat> ParseCorpusFormat(std::string_view name) {
  if (name == "plain-lines") return CorpusFormat::kPlainLines;
  if (name == "json-lines") return CorpusFormat::kJsonLines;
  return std::nullopt;
}

std::string_view CorpusFormatName(CorpusFormat format) {
  return format == CorpusFormat::kPlainLines ? "plain-lines" : "json-lines";
}

LoadResult ParseCorpus(std::istream &in, const LoadOptions &options) {
  LoadResult result;
  std::vector<Document> documents;
  std::string line;
  int64_t line_number = 0;
  auto skip = [&](std::string message) {
    ++result.skipped;
    result.diagnostics.push_back({line_number, std::move(message)});
  };
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (!IsValidUtf8(line)) {
      skip("invalid UTF-8");
      continue;
    }
    Document doc;
    doc.id = std::to_string(line_number);
    if (options.format == CorpusFormat::kPlainLines) {
      doc.sentences = SplitSentences(line);
    } else {
      auto record = nlohmann::json::parse(line, nullptr, false);
      if (record.is_discarded() || !record.is_object()) {
        skip("not a JSON object");
        continue;
      }
      auto text = record.find(options.text_field);
      if (text == record.end() || !text->is_string()) {
        skip("missing string field \"" + options.text_field + "\"");
        continue;
      }
      auto id = record.find("id");
      if (id != record.end()) {
        if (id->is_string()) {
          doc.id = id->get<std::string>();
        } else if (id->is_number_integer()) {
          doc.id = std::to_string(id->get<int64_t>());
        }
      }
      doc.sentences = SplitSentences(text->get_ref<const std::string &>());
    }
    documents.push_back(std::move(doc));
  }
  result.corpus = Corpus(std::move(documents));
  return result;
}

LoadResult LoadCorpus(const std::filesystem::path &path,
                      const LoadOptions &options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open corpus file: " + path.string());
  return ParseCorpus(in, options);
}

void WriteCorpusJsonl(const Corpus &corpus, std::ostream &out) {
  for (const Document &doc : corpus.documents()) {
    nlohmann::json record;
    record["id"] = doc.id;
    record["sentences"] = doc.sentences;
    out << record.dump() << '\n';
  }
}

Corpus ReadCorpusJsonl(std::istream &in) {
  std::vector<Document> documents;
  std::string line;
  int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      auto record = nlohmann::json::parse(line);
      Document doc;
      doc.id = record.at("id").get<std::string>();
      doc.sentences = record.at("sentences").get<std::vector<Sentence>>();
      documents.push_back(std::move(doc));
    } catch (const nlohmann::json::exception &e) {
      throw Error("malformed corpus record at line " +
                  std::to_string(line_number) + ": " + e.what());
    }
  }
  return Corpus(std::move(documents));
}

}  // namespace euphrase
