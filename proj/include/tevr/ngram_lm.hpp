// tevr/ngram_lm.hpp

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

#ifndef TEVR_NGRAM_LM_HPP_
#define TEVR_NGRAM_LM_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "tevr/corpus.hpp"

namespace tevr {

struct Smoothing {
  enum class Method { kAddK, kKneserNey };
  Method method = Method::kKneserNey;
  double add_k = 1.0;      // kAddK: pseudo-count, > 0
  double discount = 0.75;  // kKneserNey: absolute discount, in (0, 1)

  static Smoothing add_k_of(double k) {
    return Smoothing{Method::kAddK, k, 0.75};
  }
  static Smoothing kneser_ney(double discount = 0.75) {
    return Smoothing{Method::kKneserNey, 1.0, discount};
  }
  void validate() const;
};

// Smoothed n-gram probability table over dense symbol ids. Shared by the
// character- and word-level models. One reserved symbol (id num_symbols-1)
// doubles as the sentence-boundary padding for contexts and as the
// placeholder which unknown query symbols map to; it is part of the
// prediction support, so every context's distribution sums to 1 over all
// num_symbols ids.
class NgramCore {
 public:
  struct ContextEntry {
    // Explicitly stored probability mass for seen symbols, sorted by id.
    // Kneser-Ney: the discounted top term; interpolate with backoff * lower.
    // Add-k: the full probability; unseen symbols get `backoff` directly.
    std::vector<std::pair<int32_t, double>> probs;
    double backoff = 0.0;
  };
  // levels[len] maps contexts of exactly `len` symbols (encoded one symbol
  // per char32_t) to their entry; levels[0] holds the empty context.
  using Level = std::map<std::u32string, ContextEntry>;

  NgramCore() = default;

  // sentences are id sequences; ids in [0, num_symbols-2], the reserved id
  // is supplied by the core itself. Throws EmptyCorpusError when there is
  // not a single symbol to train on.
  static NgramCore train(const std::vector<std::vector<int32_t>>& sentences,
                         int num_symbols, int order, const Smoothing& smoothing);

  // The maximum-entropy table: every symbol 1/num_symbols in any context.
  static NgramCore uniform(int num_symbols, int order);

  // P(symbol | context). The context is the most recent symbols, oldest
  // first; it is left-padded with the reserved id (or truncated) to
  // order-1 internally. Always > 0.
  double prob(int32_t symbol, std::span<const int32_t> context) const;

  // Full distribution over all num_symbols ids; sums to 1 within 1e-9.
  std::vector<double> distribution(std::span<const int32_t> context) const;

  int order() const { return order_; }
  int num_symbols() const { return num_symbols_; }
  int32_t reserved_id() const { return num_symbols_ - 1; }
  const Smoothing& smoothing() const { return smoothing_; }
  const std::vector<Level>& levels() const { return levels_; }

  // Used by deserialization.
  static NgramCore from_parts(int num_symbols, int order, const Smoothing& s,
                              std::vector<Level> levels);

 private:
  std::u32string padded_context(std::span<const int32_t> context) const;

  int order_ = 1;
  int num_symbols_ = 0;
  Smoothing smoothing_;
  std::vector<Level> levels_;
};

// One probability per symbol of the model's support (alphabet plus the
// reserved boundary/placeholder symbol); non-negative, sums to 1.
struct CharDistribution {
  std::vector<double> p;
  double sum() const;
};

// A sentence paired with the per-character lm-entropies (nats) of the
// character model's next-character predictions.
struct EntropyAnnotation {
  NormalizedSentence text;
  std::vector<double> entropies;
};

// Character-level causal model: the entropy oracle. Contexts are padded
// with the reserved boundary symbol; no end-of-sentence event is trained
// or annotated.
class CharNgramModel {
 public:
  CharNgramModel() = default;
  CharNgramModel(Alphabet alphabet, NgramCore core);

  static CharNgramModel train(const std::vector<NormalizedSentence>& sentences,
                              int order, const Smoothing& smoothing);
  static CharNgramModel uniform(const Alphabet& alphabet, int order);

  // Distribution over alphabet + reserved for the position following
  // `prefix`; unknown prefix characters map to the reserved placeholder.
  CharDistribution next_char_distribution(std::u32string_view prefix) const;

  // ln P(next | prefix); the scalar path used by lm_entropy.
  double char_logprob(char32_t next, std::u32string_view prefix) const;

  int32_t symbol_id(char32_t cp) const;  // unknown -> reserved id
  const Alphabet& alphabet() const { return alphabet_; }
  const NgramCore& core() const { return core_; }
  int order() const { return core_.order(); }

 private:
  Alphabet alphabet_;
  NgramCore core_;
};

// lm-entropy of position i: the negative natural log-probability the model
// assigns to the correct character sentence[i] given sentence[0..i).
double lm_entropy(const CharNgramModel& model, const NormalizedSentence& sentence,
                  size_t i);

EntropyAnnotation annotate_sentence(const CharNgramModel& model,
                                    const NormalizedSentence& sentence);

// Word-level model for decode-time shallow fusion. Words are the
// space-separated tokens of normalized sentences; support is the training
// vocabulary plus one unknown-word symbol (which also pads contexts).
class WordNgramModel {
 public:
  WordNgramModel() = default;
  WordNgramModel(std::vector<std::u32string> vocabulary, NgramCore core);

  static WordNgramModel train(const std::vector<NormalizedSentence>& sentences,
                              int order,
                              const Smoothing& smoothing = Smoothing::kneser_ney());

  // Sum of per-word conditional log-probabilities with sentence-boundary
  // padding; <= 0, finite for any sequence.
  double sequence_logprob(const std::vector<std::u32string>& words) const;

  // ln P(word | context words), for incremental scoring during decoding.
  double word_logprob(const std::u32string& word,
                      std::span<const int32_t> context_ids) const;

  std::vector<double> next_word_distribution(std::span<const int32_t> context_ids) const;

  int32_t word_id(const std::u32string& word) const;  // unknown -> reserved id
  const std::vector<std::u32string>& vocabulary() const { return vocabulary_; }
  const NgramCore& core() const { return core_; }
  int order() const { return core_.order(); }

 private:
  std::vector<std::u32string> vocabulary_;
  std::unordered_map<std::u32string, int32_t> index_;
  NgramCore core_;
};

}  // namespace tevr

#endif  // TEVR_NGRAM_LM_HPP_
