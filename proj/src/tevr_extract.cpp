// tevr/tevr_extract.cpp

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

#include "tevr/tevr_extract.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "tevr/common.hpp"

namespace tevr {

namespace {

// Hash support for u32string keys in unordered_map.
struct U32Hash {
  size_t operator()(const std::u32string& s) const {
    size_t h = 1469598103934665603ull;
    for (char32_t c : s) {
      h ^= static_cast<size_t>(c);
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::u32string sorted_unique_chars(const std::vector<NormalizedSentence>& sentences) {
  std::set<char32_t> seen;
  for (const auto& s : sentences) seen.insert(s.begin(), s.end());
  return std::u32string(seen.begin(), seen.end());
}

// Ranks (count desc, text asc) and takes up to `quota` texts.
std::vector<std::u32string> top_by_count(
    const std::unordered_map<std::u32string, int64_t, U32Hash>& counts, int quota) {
  std::vector<std::pair<std::u32string, int64_t>> ranked(counts.begin(), counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<std::u32string> out;
  out.reserve(std::min<size_t>(quota, ranked.size()));
  for (const auto& [text, count] : ranked) {
    if (static_cast<int>(out.size()) == quota) break;
    (void)count;
    out.push_back(text);
  }
  return out;
}

double population_variance(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  return var / static_cast<double>(xs.size());
}

}  // namespace

void LengthSpec::validate() const {
  int prev = 0;
  for (size_t i = 0; i < lengths.size(); ++i) {
    const auto& lq = lengths[i];
    if (lq.length < 2) throw std::invalid_argument("snippet length must be >= 2");
    if (lq.quota < 1) throw std::invalid_argument("length quota must be >= 1");
    if (i > 0 && lq.length >= prev) {
      throw std::invalid_argument("lengths must be strictly decreasing");
    }
    prev = lq.length;
  }
}

LengthSpec LengthSpec::parse(const std::string& text) {
  LengthSpec spec;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    LengthQuota lq;
    auto colon = item.find(':');
    if (colon == std::string::npos) {
      lq.length = std::stoi(item);
      lq.quota = 1;
    } else {
      lq.length = std::stoi(item.substr(0, colon));
      lq.quota = std::stoi(item.substr(colon + 1));
    }
    spec.lengths.push_back(lq);
  }
  spec.validate();
  return spec;
}

std::vector<Snippet> enumerate_snippets(const EntropyAnnotation& annotation,
                                        int length) {
  if (length < 2) throw std::invalid_argument("snippet length must be >= 2");
  std::vector<Snippet> out;
  const auto& text = annotation.text;
  const size_t n = text.size();
  if (annotation.entropies.size() != n) {
    throw std::invalid_argument("annotation length mismatch");
  }
  const size_t len = static_cast<size_t>(length);
  if (n < len) return out;
  for (size_t start = 0; start + len <= n; ++start) {
    bool crosses_space = false;
    for (size_t k = start; k < start + len; ++k) {
      if (text[k] == U' ') {
        crosses_space = true;
        break;
      }
    }
    if (crosses_space) continue;
    double score = 0.0;
    for (size_t k = start; k < start + len; ++k) score += annotation.entropies[k];
    out.push_back(Snippet{text.substr(start, len), score,
                          static_cast<uint32_t>(start)});
  }
  return out;
}

std::vector<Snippet> select_sentence_snippets(std::vector<Snippet> snippets,
                                              double retain_fraction) {
  if (!(retain_fraction > 0.0 && retain_fraction <= 1.0)) {
    throw std::invalid_argument("retain fraction must be in (0, 1]");
  }
  if (snippets.empty()) return snippets;
  std::sort(snippets.begin(), snippets.end(), [](const Snippet& a, const Snippet& b) {
    if (a.score != b.score) return a.score < b.score;
    if (a.text != b.text) return a.text < b.text;
    return a.position < b.position;
  });
  size_t keep = static_cast<size_t>(
      std::ceil(retain_fraction * static_cast<double>(snippets.size())));
  keep = std::min(keep, snippets.size());
  snippets.resize(keep);
  return snippets;
}

ExtractionResult extract_vocabulary(const std::vector<EntropyAnnotation>& annotations,
                                    const LengthSpec& spec, double retain_fraction) {
  spec.validate();
  if (annotations.empty()) throw EmptyCorpusError("extraction: no annotations");

  ExtractionResult result;
  std::vector<std::u32string> tokens;

  for (const auto& lq : spec.lengths) {
    // Retained-occurrence counts across all sentences, with multiplicity.
    std::unordered_map<std::u32string, int64_t, U32Hash> counts;
    for (const auto& ann : annotations) {
      auto retained =
          select_sentence_snippets(enumerate_snippets(ann, lq.length), retain_fraction);
      for (const auto& snip : retained) counts[snip.text] += 1;
    }
    auto chosen = top_by_count(counts, lq.quota);
    result.tokens_per_length[lq.length] = chosen.size();
    if (static_cast<int>(chosen.size()) < lq.quota) {
      result.unfilled_lengths.push_back(lq.length);
    }
    for (auto& t : chosen) tokens.push_back(std::move(t));
  }

  if (spec.include_all_single_chars) {
    std::vector<NormalizedSentence> texts;
    texts.reserve(annotations.size());
    for (const auto& ann : annotations) texts.push_back(ann.text);
    for (char32_t cp : sorted_unique_chars(texts)) {
      tokens.push_back(std::u32string(1, cp));
    }
  }

  result.vocabulary = TevrVocabulary(std::move(tokens));
  return result;
}

ExtractionResult extract_exhaustive_vocabulary(
    const std::vector<NormalizedSentence>& sentences, const LengthSpec& spec,
    int min_count) {
  spec.validate();
  if (min_count < 1) throw std::invalid_argument("min_count must be >= 1");

  ExtractionResult result;
  std::vector<std::u32string> tokens;

  for (const auto& lq : spec.lengths) {
    const size_t len = static_cast<size_t>(lq.length);
    std::unordered_map<std::u32string, int64_t, U32Hash> counts;
    for (const auto& text : sentences) {
      if (text.size() < len) continue;
      for (size_t start = 0; start + len <= text.size(); ++start) {
        bool crosses_space = false;
        for (size_t k = start; k < start + len; ++k) {
          if (text[k] == U' ') {
            crosses_space = true;
            break;
          }
        }
        if (!crosses_space) counts[text.substr(start, len)] += 1;
      }
    }
    std::set<std::u32string> chosen;
    for (const auto& [text, count] : counts) {
      if (count >= min_count) chosen.insert(text);
    }
    result.tokens_per_length[lq.length] = chosen.size();
    for (const auto& t : chosen) tokens.push_back(t);
  }

  if (spec.include_all_single_chars) {
    for (char32_t cp : sorted_unique_chars(sentences)) {
      tokens.push_back(std::u32string(1, cp));
    }
  }

  result.vocabulary = TevrVocabulary(std::move(tokens));
  return result;
}

VarianceReport variance_report(const std::vector<EntropyAnnotation>& annotations,
                               const TevrVocabulary& vocabulary, std::string label) {
  VarianceReport report;
  report.label = label.empty()
                     ? "vocab-" + std::to_string(vocabulary.num_text_tokens())
                     : std::move(label);
  report.vocabulary_size = vocabulary.num_text_tokens();
  report.per_sentence_sigma2.reserve(annotations.size());
  report.per_sentence_token_sigma2.reserve(annotations.size());

  for (const auto& ann : annotations) {
    TokenSequence tokens = tokenize(vocabulary, ann.text);
    std::vector<double> sums = token_entropy_sums(ann, tokens);

    // Effective per-character entropies: each token's sum spread uniformly
    // over its characters.
    std::vector<double> effective;
    effective.reserve(ann.text.size());
    std::vector<double> per_token;
    per_token.reserve(sums.size());
    for (size_t k = 0; k < sums.size(); ++k) {
      const auto& [start, end] = tokens.spans[k];
      double len = static_cast<double>(end - start);
      double spread = sums[k] / len;
      for (uint32_t i = start; i < end; ++i) effective.push_back(spread);
      per_token.push_back(sums[k]);
    }
    report.per_sentence_sigma2.push_back(population_variance(effective));
    report.per_sentence_token_sigma2.push_back(population_variance(per_token));
  }

  auto mean = [](const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
  };
  report.mean_sigma2 = mean(report.per_sentence_sigma2);
  report.mean_token_sigma2 = mean(report.per_sentence_token_sigma2);
  return report;
}

}  // namespace tevr
