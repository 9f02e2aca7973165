// tevr/io.hpp

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

#ifndef TEVR_IO_HPP_
#define TEVR_IO_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tevr/ctc.hpp"
#include "tevr/ngram_lm.hpp"
#include "tevr/tevr_extract.hpp"
#include "tevr/tokenizer.hpp"

namespace tevr {

std::array<unsigned char, 32> sha256_bytes(std::string_view data);
std::string sha256_hex(std::string_view data);
std::string sha256_file_hex(const std::string& path);

std::array<unsigned char, 32> vocabulary_hash(const TevrVocabulary& vocab);
std::string vocabulary_hash_hex(const TevrVocabulary& vocab);

// --- n-gram models -------------------------------------------------------
// Binary container, magic "TEVRLM1\0": kind byte (0 char / 1 word), the
// smoothing descriptor, order (u32 LE), the symbol table (length-prefixed
// UTF-8 entries, reserved symbol implicit), a context table, and sorted
// (context-id, symbol-id, probability f64 LE, backoff f64 LE) records.
// Saving a loaded model reproduces the file byte for byte.

void save_char_model(const CharNgramModel& model, const std::string& path);
CharNgramModel load_char_model(const std::string& path);

void save_word_model(const WordNgramModel& model, const std::string& path);
WordNgramModel load_word_model(const std::string& path);

// --- vocabulary ----------------------------------------------------------
// JSON: {"version":1, "blank":"<pad>", "tokens":[...], "lengths":{"4":40,...},
//        "corpus_hash":"..."}

struct VocabularyMetadata {
  std::map<int, size_t> tokens_per_length;
  std::string corpus_hash;
};

void save_vocabulary(const TevrVocabulary& vocab, const VocabularyMetadata& meta,
                     const std::string& path);
struct LoadedVocabulary {
  TevrVocabulary vocab;
  VocabularyMetadata meta;
};
LoadedVocabulary load_vocabulary(const std::string& path);

// --- annotations ---------------------------------------------------------
// JSON lines: {"text": "...", "entropies": [...]}

void save_annotations(const std::vector<EntropyAnnotation>& annotations,
                      const std::string& path);
std::vector<EntropyAnnotation> load_annotations(const std::string& path);

// --- logits --------------------------------------------------------------
// Binary, magic "TEVRLG1\0": T (u32 LE), V (u32 LE), 32-byte vocabulary
// hash, then T*V float32 LE row-major log-probabilities.

void save_logits(const LogitsMatrix& logits,
                 const std::array<unsigned char, 32>& vocab_hash,
                 const std::string& path);
struct LoadedLogits {
  LogitsMatrix logits;
  std::array<unsigned char, 32> vocab_hash{};
};
LoadedLogits load_logits(const std::string& path);

// Loads and checks the hash against the vocabulary; throws
// IncompatibleArtifactError on mismatch.
LogitsMatrix load_logits_checked(const std::string& path, const TevrVocabulary& vocab);

// --- plain text ----------------------------------------------------------

std::vector<NormalizedSentence> load_sentences(const std::string& path);
void save_sentences(const std::vector<NormalizedSentence>& sentences,
                    const std::string& path);

std::string read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, std::string_view bytes);

}  // namespace tevr

#endif  // TEVR_IO_HPP_
