// tevr/ngram_lm.cpp

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

#include "tevr/ngram_lm.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

#include "tevr/common.hpp"

namespace tevr {

namespace {

// Sorted-vector lookup inside a context entry; negative when unseen.
double explicit_prob(const NgramCore::ContextEntry& entry, int32_t symbol) {
  auto it = std::lower_bound(entry.probs.begin(), entry.probs.end(), symbol,
                             [](const auto& p, int32_t s) { return p.first < s; });
  if (it != entry.probs.end() && it->first == symbol) return it->second;
  return -1.0;
}

using CountMap = std::unordered_map<std::u32string, int64_t>;

// Groups n-gram counts by context (all but the last symbol) and emits one
// smoothed ContextEntry per context.
NgramCore::Level build_level_addk(const CountMap& grams, double k, int num_symbols) {
  std::map<std::u32string, int64_t> totals;
  std::map<std::u32string, std::map<char32_t, int64_t>> by_context;
  for (const auto& [gram, count] : grams) {
    std::u32string ctx = gram.substr(0, gram.size() - 1);
    by_context[ctx][gram.back()] += count;
    totals[ctx] += count;
  }
  NgramCore::Level level;
  for (const auto& [ctx, syms] : by_context) {
    double denom = static_cast<double>(totals[ctx]) + k * num_symbols;
    NgramCore::ContextEntry entry;
    entry.probs.reserve(syms.size());
    for (const auto& [sym, count] : syms) {
      entry.probs.emplace_back(static_cast<int32_t>(sym),
                               (static_cast<double>(count) + k) / denom);
    }
    entry.backoff = k / denom;  // probability of any unseen symbol
    level.emplace(ctx, std::move(entry));
  }
  return level;
}

NgramCore::Level build_level_kneser_ney(const CountMap& grams, double discount) {
  std::map<std::u32string, int64_t> totals;
  std::map<std::u32string, std::map<char32_t, int64_t>> by_context;
  for (const auto& [gram, count] : grams) {
    std::u32string ctx = gram.substr(0, gram.size() - 1);
    by_context[ctx][gram.back()] += count;
    totals[ctx] += count;
  }
  NgramCore::Level level;
  for (const auto& [ctx, syms] : by_context) {
    double total = static_cast<double>(totals[ctx]);
    NgramCore::ContextEntry entry;
    entry.probs.reserve(syms.size());
    for (const auto& [sym, count] : syms) {
      entry.probs.emplace_back(
          static_cast<int32_t>(sym),
          std::max(static_cast<double>(count) - discount, 0.0) / total);
    }
    entry.backoff = discount * static_cast<double>(syms.size()) / total;
    level.emplace(ctx, std::move(entry));
  }
  return level;
}

// Continuation counts: for every (n+1)-gram type, one count for its n-gram
// suffix. This turns raw counts of order n+1 into the Kneser-Ney counts of
// order n.
CountMap continuation_counts(const CountMap& higher_grams) {
  CountMap cont;
  for (const auto& [gram, count] : higher_grams) {
    (void)count;
    cont[gram.substr(1)] += 1;
  }
  return cont;
}

}  // namespace

void Smoothing::validate() const {
  if (method == Method::kAddK) {
    if (!(add_k > 0.0)) throw std::invalid_argument("add-k smoothing needs k > 0");
  } else {
    if (!(discount > 0.0 && discount < 1.0)) {
      throw std::invalid_argument("Kneser-Ney discount must be in (0, 1)");
    }
  }
}

NgramCore NgramCore::train(const std::vector<std::vector<int32_t>>& sentences,
                           int num_symbols, int order, const Smoothing& smoothing) {
  if (order < 1) throw std::invalid_argument("n-gram order must be >= 1");
  if (num_symbols < 2) throw std::invalid_argument("need at least one real symbol");
  smoothing.validate();

  const char32_t reserved = static_cast<char32_t>(num_symbols - 1);
  // raw[n] counts n-grams ending at every real symbol of every sentence,
  // with contexts left-padded by the reserved boundary symbol. No
  // end-of-sentence event is counted.
  std::vector<CountMap> raw(order + 1);
  size_t total_events = 0;
  for (const auto& ids : sentences) {
    std::u32string padded(order - 1, reserved);
    for (int32_t id : ids) {
      if (id < 0 || id >= num_symbols) {
        throw std::invalid_argument("symbol id out of range");
      }
      padded.push_back(static_cast<char32_t>(id));
    }
    for (size_t i = 0; i < ids.size(); ++i) {
      size_t pos = i + order - 1;  // index of the predicted symbol
      for (int n = 1; n <= order; ++n) {
        raw[n][padded.substr(pos - n + 1, n)] += 1;
      }
      ++total_events;
    }
  }
  if (total_events == 0) throw EmptyCorpusError("no symbols to train on");

  NgramCore core;
  core.order_ = order;
  core.num_symbols_ = num_symbols;
  core.smoothing_ = smoothing;
  core.levels_.resize(order);

  if (smoothing.method == Smoothing::Method::kAddK) {
    for (int len = 0; len < order; ++len) {
      core.levels_[len] = build_level_addk(raw[len + 1], smoothing.add_k, num_symbols);
    }
    return core;
  }

  // Interpolated Kneser-Ney: raw counts at the top level, continuation
  // counts below, and the unigram level interpolated with the uniform
  // distribution so every symbol keeps support.
  for (int len = order - 1; len >= 0; --len) {
    CountMap counts;
    if (len == order - 1) {
      counts = raw[order];
    } else {
      counts = continuation_counts(raw[len + 2]);
    }
    core.levels_[len] = build_level_kneser_ney(counts, smoothing.discount);
  }
  return core;
}

NgramCore NgramCore::uniform(int num_symbols, int order) {
  if (num_symbols < 1) throw std::invalid_argument("need at least one symbol");
  NgramCore core;
  core.order_ = order;
  core.num_symbols_ = num_symbols;
  core.smoothing_ = Smoothing::add_k_of(1.0);
  core.levels_.resize(order);
  ContextEntry entry;
  entry.backoff = 1.0 / num_symbols;  // add-k with zero counts
  core.levels_[0].emplace(std::u32string(), entry);
  return core;
}

NgramCore NgramCore::from_parts(int num_symbols, int order, const Smoothing& s,
                                std::vector<Level> levels) {
  NgramCore core;
  core.order_ = order;
  core.num_symbols_ = num_symbols;
  core.smoothing_ = s;
  core.levels_ = std::move(levels);
  return core;
}

std::u32string NgramCore::padded_context(std::span<const int32_t> context) const {
  const size_t want = static_cast<size_t>(order_ - 1);
  std::u32string out;
  out.reserve(want);
  if (context.size() >= want) {
    for (size_t i = context.size() - want; i < context.size(); ++i) {
      out.push_back(static_cast<char32_t>(context[i]));
    }
  } else {
    out.assign(want - context.size(), static_cast<char32_t>(reserved_id()));
    for (int32_t id : context) out.push_back(static_cast<char32_t>(id));
  }
  return out;
}

double NgramCore::prob(int32_t symbol, std::span<const int32_t> context) const {
  const std::u32string padded = padded_context(context);

  if (smoothing_.method == Smoothing::Method::kAddK) {
    // Longest context present wins outright.
    for (int len = order_ - 1; len >= 0; --len) {
      auto it = levels_[len].find(padded.substr(padded.size() - len));
      if (it == levels_[len].end()) continue;
      double e = explicit_prob(it->second, symbol);
      return e >= 0.0 ? e : it->second.backoff;
    }
    return 1.0 / num_symbols_;  // untrained core (uniform)
  }

  // Kneser-Ney: interpolate upward from the uniform base.
  double p = 1.0 / num_symbols_;
  for (int len = 0; len <= order_ - 1; ++len) {
    auto it = levels_[len].find(padded.substr(padded.size() - len));
    if (it == levels_[len].end()) continue;
    double e = explicit_prob(it->second, symbol);
    p = (e >= 0.0 ? e : 0.0) + it->second.backoff * p;
  }
  return p;
}

std::vector<double> NgramCore::distribution(std::span<const int32_t> context) const {
  const std::u32string padded = padded_context(context);
  std::vector<double> dist(num_symbols_, 1.0 / num_symbols_);

  if (smoothing_.method == Smoothing::Method::kAddK) {
    for (int len = order_ - 1; len >= 0; --len) {
      auto it = levels_[len].find(padded.substr(padded.size() - len));
      if (it == levels_[len].end()) continue;
      std::fill(dist.begin(), dist.end(), it->second.backoff);
      for (const auto& [sym, p] : it->second.probs) dist[sym] = p;
      return dist;
    }
    return dist;
  }

  for (int len = 0; len <= order_ - 1; ++len) {
    auto it = levels_[len].find(padded.substr(padded.size() - len));
    if (it == levels_[len].end()) continue;
    for (double& p : dist) p *= it->second.backoff;
    for (const auto& [sym, e] : it->second.probs) dist[sym] += e;
  }
  return dist;
}

double CharDistribution::sum() const {
  double s = 0.0;
  for (double v : p) s += v;
  return s;
}

CharNgramModel::CharNgramModel(Alphabet alphabet, NgramCore core)
    : alphabet_(std::move(alphabet)), core_(std::move(core)) {}

CharNgramModel CharNgramModel::train(const std::vector<NormalizedSentence>& sentences,
                                     int order, const Smoothing& smoothing) {
  if (sentences.empty()) throw EmptyCorpusError("character model: empty corpus");
  Alphabet alphabet = Alphabet::from_sentences(sentences);
  std::vector<std::vector<int32_t>> ids(sentences.size());
  for (size_t i = 0; i < sentences.size(); ++i) {
    ids[i].reserve(sentences[i].size());
    for (char32_t cp : sentences[i]) {
      ids[i].push_back(alphabet.index_of(cp));
    }
  }
  int num_symbols = static_cast<int>(alphabet.size()) + 1;
  NgramCore core = NgramCore::train(ids, num_symbols, order, smoothing);
  return CharNgramModel(std::move(alphabet), std::move(core));
}

CharNgramModel CharNgramModel::uniform(const Alphabet& alphabet, int order) {
  return CharNgramModel(alphabet,
                        NgramCore::uniform(static_cast<int>(alphabet.size()) + 1, order));
}

int32_t CharNgramModel::symbol_id(char32_t cp) const {
  int idx = alphabet_.index_of(cp);
  return idx >= 0 ? idx : core_.reserved_id();
}

CharDistribution CharNgramModel::next_char_distribution(std::u32string_view prefix) const {
  std::vector<int32_t> ctx;
  ctx.reserve(prefix.size());
  for (char32_t cp : prefix) ctx.push_back(symbol_id(cp));
  return CharDistribution{core_.distribution(ctx)};
}

double CharNgramModel::char_logprob(char32_t next, std::u32string_view prefix) const {
  std::vector<int32_t> ctx;
  ctx.reserve(prefix.size());
  for (char32_t cp : prefix) ctx.push_back(symbol_id(cp));
  return std::log(core_.prob(symbol_id(next), ctx));
}

double lm_entropy(const CharNgramModel& model, const NormalizedSentence& sentence,
                  size_t i) {
  if (i >= sentence.size()) throw std::out_of_range("lm_entropy position");
  return -model.char_logprob(sentence[i],
                             std::u32string_view(sentence).substr(0, i));
}

EntropyAnnotation annotate_sentence(const CharNgramModel& model,
                                    const NormalizedSentence& sentence) {
  EntropyAnnotation ann;
  ann.text = sentence;
  ann.entropies.reserve(sentence.size());
  for (size_t i = 0; i < sentence.size(); ++i) {
    ann.entropies.push_back(lm_entropy(model, sentence, i));
  }
  return ann;
}

WordNgramModel::WordNgramModel(std::vector<std::u32string> vocabulary, NgramCore core)
    : vocabulary_(std::move(vocabulary)), core_(std::move(core)) {
  for (size_t i = 0; i < vocabulary_.size(); ++i) {
    index_.emplace(vocabulary_[i], static_cast<int32_t>(i));
  }
}

WordNgramModel WordNgramModel::train(const std::vector<NormalizedSentence>& sentences,
                                     int order, const Smoothing& smoothing) {
  if (order < 2 || order > 5) {
    throw std::invalid_argument("word model order must be in 2..5");
  }
  std::set<std::u32string> vocab_set;
  std::vector<std::vector<std::u32string>> tokenized;
  tokenized.reserve(sentences.size());
  for (const auto& s : sentences) {
    auto words = split_words(s);
    vocab_set.insert(words.begin(), words.end());
    tokenized.push_back(std::move(words));
  }
  std::vector<std::u32string> vocab(vocab_set.begin(), vocab_set.end());
  if (vocab.empty()) throw EmptyCorpusError("word model: empty corpus");

  std::unordered_map<std::u32string, int32_t> index;
  for (size_t i = 0; i < vocab.size(); ++i) index.emplace(vocab[i], i);

  std::vector<std::vector<int32_t>> ids(tokenized.size());
  for (size_t i = 0; i < tokenized.size(); ++i) {
    ids[i].reserve(tokenized[i].size());
    for (const auto& w : tokenized[i]) ids[i].push_back(index.at(w));
  }
  int num_symbols = static_cast<int>(vocab.size()) + 1;
  NgramCore core = NgramCore::train(ids, num_symbols, order, smoothing);
  return WordNgramModel(std::move(vocab), std::move(core));
}

int32_t WordNgramModel::word_id(const std::u32string& word) const {
  auto it = index_.find(word);
  return it == index_.end() ? core_.reserved_id() : it->second;
}

double WordNgramModel::word_logprob(const std::u32string& word,
                                    std::span<const int32_t> context_ids) const {
  return std::log(core_.prob(word_id(word), context_ids));
}

double WordNgramModel::sequence_logprob(const std::vector<std::u32string>& words) const {
  double total = 0.0;
  std::vector<int32_t> ctx;
  ctx.reserve(words.size());
  for (const auto& w : words) {
    total += word_logprob(w, ctx);
    ctx.push_back(word_id(w));
  }
  return total;
}

std::vector<double> WordNgramModel::next_word_distribution(
    std::span<const int32_t> context_ids) const {
  return core_.distribution(context_ids);
}

}  // namespace tevr
