// tevr/corpus.cpp

// Copyright 2026  TEVR Toolkit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "tevr/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>

#include "tevr/common.hpp"
#include "tevr/utf8.hpp"

namespace tevr {

NormalizationConfig NormalizationConfig::german() {
  NormalizationConfig cfg;
  cfg.allowed_extra_chars = {U'ä', U'ö', U'ü', U'ß', U'á', U'é', U'í',
                             U'ó', U'ú', U'š', U'č', U'ō', U'æ'};
  return cfg;
}

Alphabet::Alphabet(std::u32string chars) : chars_(std::move(chars)) {
  for (size_t i = 0; i < chars_.size(); ++i) {
    index_.emplace(chars_[i], static_cast<int>(i));
  }
  if (index_.size() != chars_.size()) {
    throw std::invalid_argument("alphabet characters must be distinct");
  }
}

Alphabet Alphabet::from_sentences(const std::vector<NormalizedSentence>& sentences) {
  std::set<char32_t> seen;
  for (const auto& s : sentences) seen.insert(s.begin(), s.end());
  return Alphabet(std::u32string(seen.begin(), seen.end()));
}

int Alphabet::index_of(char32_t cp) const {
  auto it = index_.find(cp);
  return it == index_.end() ? -1 : it->second;
}

std::optional<NormalizedSentence> normalize_codepoints(std::u32string_view raw,
                                                       const NormalizationConfig& config) {
  std::u32string kept;
  kept.reserve(raw.size());
  for (char32_t cp : raw) {
    if (config.lowercase) cp = fold_case(cp);
    if (is_space_char(cp)) {
      // With collapsing off, only the plain space survives as whitespace;
      // other whitespace classes count as out-of-set characters.
      if (config.collapse_whitespace || cp == U' ') kept.push_back(U' ');
      continue;
    }
    if (is_punct_char(cp)) {
      if (!config.strip_punctuation) kept.push_back(cp);
      continue;
    }
    bool ascii_word = (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z') ||
                      (cp >= U'0' && cp <= U'9');
    if (ascii_word || config.allowed_extra_chars.count(cp)) {
      kept.push_back(cp);
      continue;
    }
    // Outside the configured set: dropped, never transliterated.
  }
  // Trim and collapse runs so the sentence invariants hold unconditionally.
  std::u32string out;
  out.reserve(kept.size());
  for (char32_t cp : kept) {
    if (cp == U' ' && (out.empty() || out.back() == U' ')) continue;
    out.push_back(cp);
  }
  while (!out.empty() && out.back() == U' ') out.pop_back();
  if (out.empty()) return std::nullopt;
  return out;
}

std::optional<NormalizedSentence> normalize_text(std::string_view raw,
                                                 const NormalizationConfig& config) {
  auto decoded = utf8_decode(raw);
  if (!decoded) return std::nullopt;
  return normalize_codepoints(*decoded, config);
}

CorpusLoadResult load_corpus(std::istream& in, const NormalizationConfig& config) {
  CorpusLoadResult result;
  std::string line;
  while (std::getline(in, line)) {
    ++result.lines_read;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto decoded = utf8_decode(line);
    if (!decoded) {
      ++result.rejected_encoding;
      continue;
    }
    auto sentence = normalize_codepoints(*decoded, config);
    if (!sentence) {
      ++result.rejected_empty;
      continue;
    }
    result.sentences.push_back(std::move(*sentence));
  }
  if (in.bad()) throw IoError("stream failure while reading corpus");
  result.alphabet = Alphabet::from_sentences(result.sentences);
  return result;
}

CorpusLoadResult load_corpus_file(const std::string& path,
                                  const NormalizationConfig& config) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file: " + path);
  return load_corpus(in, config);
}

std::vector<std::u32string> split_words(const NormalizedSentence& sentence) {
  std::vector<std::u32string> words;
  size_t start = 0;
  for (size_t i = 0; i <= sentence.size(); ++i) {
    if (i == sentence.size() || sentence[i] == U' ') {
      if (i > start) words.push_back(sentence.substr(start, i - start));
      start = i + 1;
    }
  }
  return words;
}

}  // namespace tevr
