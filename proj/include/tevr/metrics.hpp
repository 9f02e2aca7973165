// tevr/metrics.hpp

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

#ifndef TEVR_METRICS_HPP_
#define TEVR_METRICS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "tevr/corpus.hpp"

namespace tevr {

struct EditCounts {
  size_t distance = 0;
  size_t substitutions = 0;
  size_t insertions = 0;  // hypothesis tokens with no reference counterpart
  size_t deletions = 0;   // reference tokens missing from the hypothesis
};

// Unit-cost Levenshtein alignment. Backtrace ties prefer substitution, then
// deletion, then insertion. S + I + D == distance.
EditCounts edit_distance(const std::vector<std::u32string>& ref,
                         const std::vector<std::u32string>& hyp);
EditCounts edit_distance(const std::u32string& ref, const std::u32string& hyp);

struct EvalReport {
  EditCounts counts;
  size_t reference_length = 0;
  // (S + I + D) / N; may exceed 1 when the hypothesis is much longer.
  double rate() const;
};

// Word error rate over whitespace-split words. Throws std::invalid_argument
// when the reference has no words.
EvalReport wer(const NormalizedSentence& ref, const NormalizedSentence& hyp);

// Character error rate over codepoints, spaces included. Throws
// std::invalid_argument on an empty reference.
EvalReport cer(const NormalizedSentence& ref, const NormalizedSentence& hyp);

struct UtteranceScore {
  EvalReport word;
  EvalReport chr;
};

// Micro-averaged corpus scores: total edits over total reference length,
// not the mean of per-utterance rates.
struct CorpusScore {
  EvalReport word;
  EvalReport chr;
  std::vector<UtteranceScore> utterances;
};

CorpusScore score_corpus(const std::vector<NormalizedSentence>& refs,
                         const std::vector<NormalizedSentence>& hyps);

}  // namespace tevr

#endif  // TEVR_METRICS_HPP_
