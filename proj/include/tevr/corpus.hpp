// tevr/corpus.hpp

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

#ifndef TEVR_CORPUS_HPP_
#define TEVR_CORPUS_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace tevr {

// A cleaned line of corpus text: non-empty, no leading/trailing whitespace,
// no two consecutive whitespace characters, codepoints only from the corpus
// alphabet. Produced by normalize_text; treated as immutable downstream.
using NormalizedSentence = std::u32string;

struct NormalizationConfig {
  bool lowercase = true;
  bool strip_punctuation = true;
  bool collapse_whitespace = true;
  // Codepoints kept in addition to ASCII letters, digits and space.
  // Everything else that is not punctuation is dropped, not transliterated.
  std::set<char32_t> allowed_extra_chars;

  // German defaults: umlauts, eszett and the accented letters that occur in
  // borrowed proper nouns.
  static NormalizationConfig german();
};

// Ordered set of distinct characters with a stable contiguous index,
// ordered by codepoint.
class Alphabet {
 public:
  Alphabet() = default;
  // chars must be sorted and duplicate-free.
  explicit Alphabet(std::u32string chars);

  static Alphabet from_sentences(const std::vector<NormalizedSentence>& sentences);

  int index_of(char32_t cp) const;  // -1 when absent
  bool contains(char32_t cp) const { return index_of(cp) >= 0; }
  size_t size() const { return chars_.size(); }
  char32_t at(size_t i) const { return chars_.at(i); }
  const std::u32string& chars() const { return chars_; }

 private:
  std::u32string chars_;
  std::unordered_map<char32_t, int> index_;
};

// Returns nullopt when the normalized result would be empty (skip the line).
// Idempotent: normalizing the encoded result again gives the same sentence.
std::optional<NormalizedSentence> normalize_text(std::string_view raw,
                                                 const NormalizationConfig& config);
std::optional<NormalizedSentence> normalize_codepoints(std::u32string_view raw,
                                                       const NormalizationConfig& config);

struct CorpusLoadResult {
  std::vector<NormalizedSentence> sentences;
  Alphabet alphabet;  // exactly the characters of the emitted sentences
  size_t lines_read = 0;
  size_t rejected_empty = 0;
  size_t rejected_encoding = 0;
};

CorpusLoadResult load_corpus(std::istream& in, const NormalizationConfig& config);
CorpusLoadResult load_corpus_file(const std::string& path,
                                  const NormalizationConfig& config);

std::vector<std::u32string> split_words(const NormalizedSentence& sentence);

}  // namespace tevr

#endif  // TEVR_CORPUS_HPP_
