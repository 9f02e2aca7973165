// tevr/ctc.cpp

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

#include "tevr/ctc.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "tevr/common.hpp"

namespace tevr {

void LogitsMatrix::normalize_row(size_t t) {
  // Two passes: normalize in double, store as float, then remove the float
  // rounding residue so the on-disk rows satisfy the log-sum-exp invariant.
  for (int pass = 0; pass < 2; ++pass) {
    double maxv = -std::numeric_limits<double>::infinity();
    for (size_t v = 0; v < vocab_; ++v) maxv = std::max<double>(maxv, at(t, v));
    double sum = 0.0;
    for (size_t v = 0; v < vocab_; ++v) sum += std::exp(static_cast<double>(at(t, v)) - maxv);
    double lse = maxv + std::log(sum);
    for (size_t v = 0; v < vocab_; ++v) {
      at(t, v) = static_cast<float>(static_cast<double>(at(t, v)) - lse);
    }
  }
}

double LogitsMatrix::max_row_lse_error() const {
  double worst = 0.0;
  for (size_t t = 0; t < frames_; ++t) {
    double maxv = -std::numeric_limits<double>::infinity();
    for (size_t v = 0; v < vocab_; ++v) maxv = std::max<double>(maxv, at(t, v));
    double sum = 0.0;
    for (size_t v = 0; v < vocab_; ++v) sum += std::exp(static_cast<double>(at(t, v)) - maxv);
    worst = std::max(worst, std::abs(maxv + std::log(sum)));
  }
  return worst;
}

void DecodeParams::validate() const {
  if (beam_width < 1) throw std::invalid_argument("beam width must be >= 1");
  if (alpha < 0.0) throw std::invalid_argument("alpha must be >= 0");
}

double ctc_loss(const LogitsMatrix& logits, std::span<const int32_t> target,
                int32_t blank_id) {
  const size_t num_frames = logits.frames();
  const int32_t vocab_size = static_cast<int32_t>(logits.vocab_size());
  if (target.empty()) throw std::invalid_argument("ctc_loss: empty target");
  if (blank_id < 0 || blank_id >= vocab_size) {
    throw std::invalid_argument("ctc_loss: blank id out of range");
  }
  for (int32_t id : target) {
    if (id < 0 || id >= vocab_size || id == blank_id) {
      throw std::invalid_argument("ctc_loss: bad target id");
    }
  }

  // Minimum frames: one per target token plus a separating blank between
  // equal neighbours.
  size_t min_frames = target.size();
  for (size_t i = 1; i < target.size(); ++i) {
    if (target[i] == target[i - 1]) ++min_frames;
  }
  if (num_frames < min_frames) return std::numeric_limits<double>::infinity();

  // Forward algorithm over the blank-interleaved extended sequence.
  const size_t ext = 2 * target.size() + 1;
  auto label = [&](size_t s) -> int32_t {
    return (s % 2 == 0) ? blank_id : target[s / 2];
  };

  std::vector<double> alpha(ext, kLogZero), next(ext, kLogZero);
  alpha[0] = logits.at(0, static_cast<size_t>(blank_id));
  alpha[1] = logits.at(0, static_cast<size_t>(label(1)));

  for (size_t t = 1; t < num_frames; ++t) {
    std::fill(next.begin(), next.end(), kLogZero);
    for (size_t s = 0; s < ext; ++s) {
      double acc = alpha[s];
      if (s >= 1) acc = log_add(acc, alpha[s - 1]);
      // Skip transition: allowed into a non-blank that differs from the
      // non-blank two positions back.
      if (s >= 2 && label(s) != blank_id && label(s) != label(s - 2)) {
        acc = log_add(acc, alpha[s - 2]);
      }
      if (acc == kLogZero) continue;
      next[s] = acc + logits.at(t, static_cast<size_t>(label(s)));
    }
    std::swap(alpha, next);
  }

  double total = log_add(alpha[ext - 1], ext >= 2 ? alpha[ext - 2] : kLogZero);
  return -total;
}

NormalizedSentence greedy_decode(const LogitsMatrix& logits,
                                 const TevrVocabulary& vocab) {
  if (logits.vocab_size() != vocab.size_with_blank()) {
    throw IncompatibleArtifactError("logits width does not match vocabulary");
  }
  const int32_t blank = vocab.blank_id();
  std::vector<int32_t> collapsed;
  int32_t prev = blank;
  for (size_t t = 0; t < logits.frames(); ++t) {
    auto row = logits.row(t);
    int32_t best = 0;
    for (size_t v = 1; v < row.size(); ++v) {
      if (row[v] > row[best]) best = static_cast<int32_t>(v);
    }
    if (best != blank && best != prev) collapsed.push_back(best);
    prev = best;
  }
  return detokenize(vocab, collapsed);
}

namespace {

// Prefix-beam bookkeeping for one emitted token sequence.
struct BeamHypothesis {
  std::u32string text;                // detokenized emission
  int32_t last_token = -1;            // last non-blank token id
  double lp_blank = kLogZero;         // paths ending in blank
  double lp_nonblank = kLogZero;      // paths ending in the last token
  double lm_logprob = 0.0;            // sum of completed-word log-probs
  int completed_words = 0;
  std::vector<int32_t> lm_context;    // word ids, most recent last
  std::u32string partial_word;

  double ctc_total() const { return log_add(lp_blank, lp_nonblank); }
};

// Running fused score used for mid-stream pruning; the final partial word
// is only added at end of sequence.
double running_fused(const BeamHypothesis& hyp, const DecodeParams& params) {
  return hyp.ctc_total() + params.alpha * hyp.lm_logprob +
         params.beta * hyp.completed_words;
}

// Applies a token's text to the word-level state: every space completes the
// current partial word and scores it against the LM exactly once.
void absorb_token_text(BeamHypothesis& hyp, const std::u32string& text,
                       const WordNgramModel* lm) {
  for (char32_t cp : text) {
    if (cp == U' ') {
      if (!hyp.partial_word.empty()) {
        if (lm != nullptr) {
          hyp.lm_logprob += lm->word_logprob(hyp.partial_word, hyp.lm_context);
          hyp.lm_context.push_back(lm->word_id(hyp.partial_word));
          size_t keep = static_cast<size_t>(lm->order()) - 1;
          if (hyp.lm_context.size() > keep) {
            hyp.lm_context.erase(hyp.lm_context.begin(),
                                 hyp.lm_context.end() - keep);
          }
        }
        hyp.completed_words += 1;
        hyp.partial_word.clear();
      }
    } else {
      hyp.partial_word.push_back(cp);
    }
  }
}

}  // namespace

BeamDecodeResult beam_search_decode(const LogitsMatrix& logits,
                                    const TevrVocabulary& vocab,
                                    const WordNgramModel* lm,
                                    const DecodeParams& params) {
  params.validate();
  if (logits.vocab_size() != vocab.size_with_blank()) {
    throw IncompatibleArtifactError("logits width does not match vocabulary");
  }
  const int32_t blank = vocab.blank_id();
  const size_t vocab_size = logits.vocab_size();

  // Keyed by emitted token id sequence.
  std::map<std::u32string, BeamHypothesis> beams;
  BeamHypothesis init;
  init.lp_blank = 0.0;
  beams.emplace(std::u32string(), init);

  std::vector<int32_t> candidate_ids(vocab_size);
  std::iota(candidate_ids.begin(), candidate_ids.end(), 0);

  for (size_t t = 0; t < logits.frames(); ++t) {
    auto row = logits.row(t);

    // Per-frame candidate selection: top-K by probability plus an optional
    // threshold relative to the frame maximum. Ties break on token id so
    // decoding stays deterministic.
    std::vector<int32_t> cands = candidate_ids;
    std::sort(cands.begin(), cands.end(), [&](int32_t a, int32_t b) {
      if (row[a] != row[b]) return row[a] > row[b];
      return a < b;
    });
    if (params.top_k > 0 && cands.size() > static_cast<size_t>(params.top_k)) {
      cands.resize(static_cast<size_t>(params.top_k));
    }
    if (params.pruning_log_threshold != -std::numeric_limits<double>::infinity()) {
      double cutoff = static_cast<double>(row[cands.front()]) + params.pruning_log_threshold;
      while (cands.size() > 1 && static_cast<double>(row[cands.back()]) < cutoff) {
        cands.pop_back();
      }
      if (static_cast<double>(row[cands.front()]) < cutoff) cands.clear();
    }

    if (cands.empty()) {
      // Threshold pruned every candidate: fall back to carrying the best
      // pre-prune hypothesis through this frame unchanged.
      auto best = std::max_element(
          beams.begin(), beams.end(), [&](const auto& a, const auto& b) {
            return running_fused(a.second, params) < running_fused(b.second, params);
          });
      std::map<std::u32string, BeamHypothesis> keep;
      keep.emplace(best->first, best->second);
      beams = std::move(keep);
      continue;
    }

    std::map<std::u32string, BeamHypothesis> next;
    for (const auto& [key, hyp] : beams) {
      for (int32_t tok : cands) {
        double lp = row[static_cast<size_t>(tok)];
        if (tok == blank) {
          auto [it, fresh] = next.try_emplace(key);
          BeamHypothesis& dst = it->second;
          if (fresh) {
            dst = hyp;
            dst.lp_blank = kLogZero;
            dst.lp_nonblank = kLogZero;
          }
          dst.lp_blank = log_add(dst.lp_blank, hyp.ctc_total() + lp);
          continue;
        }
        if (tok == hyp.last_token) {
          // Repeated token without a separating blank extends the same
          // emission.
          auto [it, fresh] = next.try_emplace(key);
          BeamHypothesis& dst = it->second;
          if (fresh) {
            dst = hyp;
            dst.lp_blank = kLogZero;
            dst.lp_nonblank = kLogZero;
          }
          dst.lp_nonblank = log_add(dst.lp_nonblank, hyp.lp_nonblank + lp);
          // With a blank in between it starts a new copy of the token.
          std::u32string new_key = key + static_cast<char32_t>(tok);
          auto [jt, fresh2] = next.try_emplace(new_key);
          BeamHypothesis& ext = jt->second;
          if (fresh2) {
            ext = hyp;
            ext.lp_blank = kLogZero;
            ext.lp_nonblank = kLogZero;
            ext.last_token = tok;
            const auto& text = vocab.token_text(tok);
            ext.text += text;
            absorb_token_text(ext, text, lm);
          }
          ext.lp_nonblank = log_add(ext.lp_nonblank, hyp.lp_blank + lp);
        } else {
          std::u32string new_key = key + static_cast<char32_t>(tok);
          auto [jt, fresh2] = next.try_emplace(new_key);
          BeamHypothesis& ext = jt->second;
          if (fresh2) {
            ext = hyp;
            ext.lp_blank = kLogZero;
            ext.lp_nonblank = kLogZero;
            ext.last_token = tok;
            const auto& text = vocab.token_text(tok);
            ext.text += text;
            absorb_token_text(ext, text, lm);
          }
          ext.lp_nonblank = log_add(ext.lp_nonblank, hyp.ctc_total() + lp);
        }
      }
    }

    // Keep the beam_width best by running fused score.
    if (next.size() > params.beam_width) {
      std::vector<const std::u32string*> keys;
      keys.reserve(next.size());
      for (const auto& [key, hyp] : next) keys.push_back(&key);
      std::sort(keys.begin(), keys.end(), [&](const auto* a, const auto* b) {
        double fa = running_fused(next.at(*a), params);
        double fb = running_fused(next.at(*b), params);
        if (fa != fb) return fa > fb;
        return *a < *b;
      });
      std::map<std::u32string, BeamHypothesis> pruned;
      for (size_t i = 0; i < params.beam_width; ++i) {
        pruned.emplace(*keys[i], std::move(next.at(*keys[i])));
      }
      next = std::move(pruned);
    }
    beams = std::move(next);
  }

  // Final scoring: the last partial word counts as completed. Hypotheses
  // with the same emitted text are merged (their CTC masses add) before the
  // argmax, matching exhaustive search over collapsed emissions.
  struct Final {
    double ctc = kLogZero;
    double lm_terms = 0.0;
  };
  std::map<std::u32string, Final> by_text;
  for (const auto& [key, hyp] : beams) {
    double lm_logprob = hyp.lm_logprob;
    int words = hyp.completed_words;
    if (!hyp.partial_word.empty()) {
      if (lm != nullptr) {
        lm_logprob += lm->word_logprob(hyp.partial_word, hyp.lm_context);
      }
      words += 1;
    }
    Final& f = by_text[hyp.text];
    f.ctc = log_add(f.ctc, hyp.ctc_total());
    f.lm_terms = params.alpha * lm_logprob + params.beta * words;
  }

  BeamDecodeResult result;
  bool found = false;
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& [text, f] : by_text) {
    double fused = f.ctc + f.lm_terms;
    if (!found || fused > best || (fused == best && text < result.text)) {
      found = true;
      best = fused;
      result.text = text;
      result.fused_score = fused;
    }
  }
  return result;
}

LogitsMatrix synth_logits(const TevrVocabulary& vocab, const NormalizedSentence& text,
                          double noise_level, int frames_per_token, uint64_t seed) {
  if (frames_per_token < 1) {
    throw std::invalid_argument("frames_per_token must be >= 1");
  }
  if (noise_level < 0.0) throw std::invalid_argument("noise level must be >= 0");
  TokenSequence tokens = tokenize(vocab, text);

  const size_t vocab_size = vocab.size_with_blank();
  std::vector<int32_t> frame_targets;
  frame_targets.reserve(tokens.ids.size() * (frames_per_token + 1));
  for (int32_t id : tokens.ids) {
    for (int k = 0; k < frames_per_token; ++k) frame_targets.push_back(id);
    frame_targets.push_back(vocab.blank_id());
  }
  if (frame_targets.empty()) frame_targets.push_back(vocab.blank_id());

  // Sharpness scales with V so the target stays dominant after softmax.
  const double peak = std::log(20.0 * static_cast<double>(vocab_size));
  LogitsMatrix logits(frame_targets.size(), vocab_size);
  Rng rng(seed);
  for (size_t t = 0; t < frame_targets.size(); ++t) {
    for (size_t v = 0; v < vocab_size; ++v) {
      double base = (static_cast<int32_t>(v) == frame_targets[t]) ? peak : 0.0;
      logits.at(t, v) = static_cast<float>(base + noise_level * rng.gauss());
    }
    logits.normalize_row(t);
  }
  return logits;
}

}  // namespace tevr
