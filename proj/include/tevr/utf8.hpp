// tevr/utf8.hpp

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

#ifndef TEVR_UTF8_HPP_
#define TEVR_UTF8_HPP_

#include <optional>
#include <string>
#include <string_view>

namespace tevr {

// Strict UTF-8 decoding; nullopt on malformed input (overlong forms,
// surrogates, truncated sequences).
std::optional<std::u32string> utf8_decode(std::string_view bytes);

std::string utf8_encode(std::u32string_view text);
std::string utf8_encode(char32_t cp);

// Lowercase folding for ASCII plus the Latin accented letters used by the
// toolkit's corpora. Unknown codepoints pass through unchanged.
char32_t fold_case(char32_t cp);

bool is_space_char(char32_t cp);
bool is_punct_char(char32_t cp);

}  // namespace tevr

#endif  // TEVR_UTF8_HPP_
