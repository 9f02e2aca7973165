// tevr/tokenizer.hpp

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

#ifndef TEVR_TOKENIZER_HPP_
#define TEVR_TOKENIZER_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tevr/corpus.hpp"
#include "tevr/ngram_lm.hpp"

namespace tevr {

// Recognition token set: ordered text tokens (index = id) plus one reserved
// blank token whose id follows the text tokens. Tokens are unique and
// non-empty; multi-character tokens never contain whitespace.
class TevrVocabulary {
 public:
  TevrVocabulary() = default;
  explicit TevrVocabulary(std::vector<std::u32string> tokens,
                          std::u32string blank_label = U"<pad>");

  const std::vector<std::u32string>& tokens() const { return tokens_; }
  size_t num_text_tokens() const { return tokens_.size(); }
  // Total symbol count including the blank; the V of a logits matrix.
  size_t size_with_blank() const { return tokens_.size() + 1; }
  int32_t blank_id() const { return static_cast<int32_t>(tokens_.size()); }
  const std::u32string& blank_label() const { return blank_label_; }

  int32_t id_of(std::u32string_view text) const;  // -1 when absent
  const std::u32string& token_text(int32_t id) const;
  size_t max_token_length() const { return max_token_length_; }

  bool covers(const NormalizedSentence& sentence) const;

  // Canonical byte string (blank label + token list) hashed for artifact
  // compatibility checks.
  std::string canonical_bytes() const;

 private:
  std::vector<std::u32string> tokens_;
  std::u32string blank_label_ = U"<pad>";
  std::unordered_map<std::u32string, int32_t> index_;
  size_t max_token_length_ = 0;
};

// A tokenization of one sentence: ids plus [start, end) character spans.
// Concatenating the token texts reproduces the source text exactly; blank
// never appears.
struct TokenSequence {
  const TevrVocabulary* vocab = nullptr;
  std::vector<int32_t> ids;
  std::vector<std::pair<uint32_t, uint32_t>> spans;
};

// Greedy left-to-right longest-match segmentation. Throws
// IncompatibleArtifactError when a character has no single-character token.
TokenSequence tokenize(const TevrVocabulary& vocab, const NormalizedSentence& sentence);

NormalizedSentence detokenize(const TevrVocabulary& vocab,
                              std::span<const int32_t> ids);

// Per-token sums of the annotation's per-character entropies over each
// token's span. The total over tokens equals the total over characters.
std::vector<double> token_entropy_sums(const EntropyAnnotation& annotation,
                                       const TokenSequence& tokens);

}  // namespace tevr

#endif  // TEVR_TOKENIZER_HPP_
