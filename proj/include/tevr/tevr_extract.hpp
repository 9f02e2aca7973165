// tevr/tevr_extract.hpp

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

#ifndef TEVR_TEVR_EXTRACT_HPP_
#define TEVR_TEVR_EXTRACT_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tevr/ngram_lm.hpp"
#include "tevr/tokenizer.hpp"

namespace tevr {

// A candidate multi-character token: an in-word substring of a sentence with
// its summed per-character lm-entropy.
struct Snippet {
  std::u32string text;
  double score = 0.0;     // sum of per-character entropies, nats
  uint32_t position = 0;  // start offset in the source sentence
};

struct LengthQuota {
  int length = 0;  // >= 2
  int quota = 0;   // >= 1
};

// Graded vocabulary shape, e.g. (4:40, 3:80, 2:96) plus all single
// characters. Lengths must be strictly decreasing.
struct LengthSpec {
  std::vector<LengthQuota> lengths;
  bool include_all_single_chars = true;

  void validate() const;
  // Parses "4:40,3:80,2:96"; a bare "4,3,2" gets quota 1 per length
  // (sufficient for the exhaustive extractor, which ignores quotas).
  static LengthSpec parse(const std::string& text);
};

// All substrings of exactly `length` characters that lie inside a single
// word (never crossing whitespace), scored by summed entropy. Order of
// appearance; empty when the sentence has no window of that length.
std::vector<Snippet> enumerate_snippets(const EntropyAnnotation& annotation,
                                        int length);

// The ceil(retain_fraction * n) snippets with the lowest scores. Ties break
// by (score, text, position) so selection is a total order.
std::vector<Snippet> select_sentence_snippets(std::vector<Snippet> snippets,
                                              double retain_fraction);

struct ExtractionResult {
  TevrVocabulary vocabulary;
  // Tokens actually emitted per multi-character length.
  std::map<int, size_t> tokens_per_length;
  // Lengths whose quota could not be filled from the corpus.
  std::vector<int> unfilled_lengths;
};

// The entropy-aware extractor: per sentence and length keep the lowest-score
// fraction of snippets, then rank retained occurrences corpus-wide and take
// the `quota` most frequent texts per length (ties: higher count, then
// lexicographic). Singles are appended from the corpus alphabet.
ExtractionResult extract_vocabulary(const std::vector<EntropyAnnotation>& annotations,
                                    const LengthSpec& spec, double retain_fraction);

// The entropy-agnostic extractor: every in-word substring of each configured
// length occurring at least min_count times, plus singles. Quotas in the
// spec are ignored.
ExtractionResult extract_exhaustive_vocabulary(
    const std::vector<NormalizedSentence>& sentences, const LengthSpec& spec,
    int min_count);

// Entropy-variance statistics of a tokenization over annotated sentences.
// sigma2 (primary) follows the per-character effective entropies: each
// token's summed entropy spread uniformly over its characters, population
// variance per sentence. token_sigma2 is the population variance of the
// per-token sums themselves.
struct VarianceReport {
  std::string label;
  size_t vocabulary_size = 0;
  std::vector<double> per_sentence_sigma2;
  std::vector<double> per_sentence_token_sigma2;
  double mean_sigma2 = 0.0;
  double mean_token_sigma2 = 0.0;
};

VarianceReport variance_report(const std::vector<EntropyAnnotation>& annotations,
                               const TevrVocabulary& vocabulary,
                               std::string label = "");

}  // namespace tevr

#endif  // TEVR_TEVR_EXTRACT_HPP_
