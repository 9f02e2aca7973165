// tevr/tokenizer.cpp

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

#include "tevr/tokenizer.hpp"

#include <algorithm>
#include <stdexcept>

#include "tevr/common.hpp"
#include "tevr/utf8.hpp"

namespace tevr {

TevrVocabulary::TevrVocabulary(std::vector<std::u32string> tokens,
                               std::u32string blank_label)
    : tokens_(std::move(tokens)), blank_label_(std::move(blank_label)) {
  for (size_t i = 0; i < tokens_.size(); ++i) {
    if (tokens_[i].empty()) {
      throw std::invalid_argument("vocabulary token must not be empty");
    }
    auto [it, inserted] = index_.emplace(tokens_[i], static_cast<int32_t>(i));
    (void)it;
    if (!inserted) {
      throw std::invalid_argument("duplicate vocabulary token: " +
                                  utf8_encode(tokens_[i]));
    }
    max_token_length_ = std::max(max_token_length_, tokens_[i].size());
  }
}

int32_t TevrVocabulary::id_of(std::u32string_view text) const {
  auto it = index_.find(std::u32string(text));
  return it == index_.end() ? -1 : it->second;
}

const std::u32string& TevrVocabulary::token_text(int32_t id) const {
  if (id < 0 || static_cast<size_t>(id) >= tokens_.size()) {
    throw std::out_of_range("token id out of range (or blank)");
  }
  return tokens_[static_cast<size_t>(id)];
}

bool TevrVocabulary::covers(const NormalizedSentence& sentence) const {
  for (char32_t cp : sentence) {
    if (id_of(std::u32string_view(&cp, 1)) < 0) return false;
  }
  return true;
}

std::string TevrVocabulary::canonical_bytes() const {
  std::string out = utf8_encode(blank_label_);
  out.push_back('\n');
  for (const auto& tok : tokens_) {
    out += utf8_encode(tok);
    out.push_back('\n');
  }
  return out;
}

TokenSequence tokenize(const TevrVocabulary& vocab, const NormalizedSentence& sentence) {
  TokenSequence seq;
  seq.vocab = &vocab;
  size_t pos = 0;
  while (pos < sentence.size()) {
    size_t longest = std::min(vocab.max_token_length(), sentence.size() - pos);
    int32_t match = -1;
    size_t match_len = 0;
    for (size_t len = longest; len >= 1; --len) {
      int32_t id = vocab.id_of(std::u32string_view(sentence).substr(pos, len));
      if (id >= 0) {
        match = id;
        match_len = len;
        break;
      }
    }
    if (match < 0) {
      throw IncompatibleArtifactError(
          "character not covered by vocabulary: '" + utf8_encode(sentence[pos]) +
          "' (corpus/vocabulary mismatch)");
    }
    seq.ids.push_back(match);
    seq.spans.emplace_back(static_cast<uint32_t>(pos),
                           static_cast<uint32_t>(pos + match_len));
    pos += match_len;
  }
  return seq;
}

NormalizedSentence detokenize(const TevrVocabulary& vocab,
                              std::span<const int32_t> ids) {
  NormalizedSentence out;
  for (int32_t id : ids) {
    if (id == vocab.blank_id()) {
      throw std::invalid_argument("blank id in token sequence");
    }
    out += vocab.token_text(id);
  }
  return out;
}

std::vector<double> token_entropy_sums(const EntropyAnnotation& annotation,
                                       const TokenSequence& tokens) {
  std::vector<double> sums;
  sums.reserve(tokens.ids.size());
  for (const auto& [start, end] : tokens.spans) {
    if (end > annotation.entropies.size() || start >= end) {
      throw std::invalid_argument("token span does not fit the annotation");
    }
    double s = 0.0;
    for (uint32_t i = start; i < end; ++i) s += annotation.entropies[i];
    sums.push_back(s);
  }
  return sums;
}

}  // namespace tevr
