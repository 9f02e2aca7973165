// tevr/ctc.hpp

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

#ifndef TEVR_CTC_HPP_
#define TEVR_CTC_HPP_

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "tevr/ngram_lm.hpp"
#include "tevr/tokenizer.hpp"

namespace tevr {

// T frames by V tokens of per-frame log-probabilities (V includes the blank
// as the last column). Every row's log-sum-exp is 0 within 1e-6.
class LogitsMatrix {
 public:
  LogitsMatrix() = default;
  LogitsMatrix(size_t frames, size_t vocab_size)
      : frames_(frames), vocab_(vocab_size), data_(frames * vocab_size, 0.0f) {}

  size_t frames() const { return frames_; }
  size_t vocab_size() const { return vocab_; }

  float at(size_t t, size_t v) const { return data_[t * vocab_ + v]; }
  float& at(size_t t, size_t v) { return data_[t * vocab_ + v]; }
  std::span<const float> row(size_t t) const {
    return {data_.data() + t * vocab_, vocab_};
  }

  const std::vector<float>& data() const { return data_; }
  std::vector<float>& data() { return data_; }

  // Re-centers row t so its log-sum-exp is 0 (evaluated in double on the
  // stored floats, so the invariant holds for the bytes that get written).
  void normalize_row(size_t t);
  // Largest |log-sum-exp| over all rows.
  double max_row_lse_error() const;

 private:
  size_t frames_ = 0;
  size_t vocab_ = 0;
  std::vector<float> data_;
};

struct DecodeParams {
  double alpha = 0.7;  // word-LM weight, >= 0
  double beta = 0.75;  // per completed word bonus
  size_t beam_width = 16;
  // Per-frame candidate pruning: drop tokens whose frame log-probability is
  // below frame_max + pruning_log_threshold. -inf disables.
  double pruning_log_threshold = -std::numeric_limits<double>::infinity();
  // Expand only the top_k most probable tokens per frame; <= 0 expands all.
  int top_k = 25;

  void validate() const;
};

// -log of the total probability of all frame alignments that collapse
// (merge repeats, then remove blanks) to `target`. Returns +inf when the
// target cannot be represented in the available frames. Throws
// std::invalid_argument for an empty target or out-of-range ids.
double ctc_loss(const LogitsMatrix& logits, std::span<const int32_t> target,
                int32_t blank_id);

// Per-frame argmax, collapse repeats, drop blanks, detokenize.
NormalizedSentence greedy_decode(const LogitsMatrix& logits,
                                 const TevrVocabulary& vocab);

struct BeamDecodeResult {
  NormalizedSentence text;
  double fused_score = 0.0;
};

// Prefix beam search over token emissions with word-LM shallow fusion:
//   fused = log P_ctc(text) + alpha * log P_lm(completed words)
//         + beta * (number of completed words).
// The LM scores each word exactly once, on the space that completes it; the
// final partial word is scored as completed at end of sequence. Hypotheses
// with equal emitted text are merged before the final argmax, so with
// pruning disabled and a wide enough beam the result equals exhaustive
// search over collapsed emissions. lm may be null (alpha term vanishes).
BeamDecodeResult beam_search_decode(const LogitsMatrix& logits,
                                    const TevrVocabulary& vocab,
                                    const WordNgramModel* lm,
                                    const DecodeParams& params);

// Deterministic synthetic logits for a known transcript: frames_per_token
// frames per emitted token followed by one blank frame, sharpened one-hot
// rows perturbed by gaussian noise of the given level, then re-normalized.
// At noise 0 greedy decoding recovers the text exactly.
LogitsMatrix synth_logits(const TevrVocabulary& vocab, const NormalizedSentence& text,
                          double noise_level, int frames_per_token, uint64_t seed);

}  // namespace tevr

#endif  // TEVR_CTC_HPP_
