// tevr/utf8.cpp

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

#include "tevr/utf8.hpp"

#include <cstdint>

namespace tevr {

std::optional<std::u32string> utf8_decode(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  size_t i = 0;
  while (i < bytes.size()) {
    unsigned char b0 = static_cast<unsigned char>(bytes[i]);
    uint32_t cp = 0;
    size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      return std::nullopt;
    }
    if (i + len > bytes.size()) return std::nullopt;
    for (size_t k = 1; k < len; ++k) {
      unsigned char b = static_cast<unsigned char>(bytes[i + k]);
      if ((b & 0xC0) != 0x80) return std::nullopt;
      cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong encodings, surrogates and out-of-range codepoints.
    static const uint32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (len > 1 && cp < kMin[len]) return std::nullopt;
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return std::nullopt;
    out.push_back(static_cast<char32_t>(cp));
    i += len;
  }
  return out;
}

std::string utf8_encode(char32_t cp) {
  std::string out;
  uint32_t c = cp;
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
  return out;
}

std::string utf8_encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) out += utf8_encode(cp);
  return out;
}

char32_t fold_case(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  // Latin-1 supplement: À..Þ map to à..þ except the multiplication sign.
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
  switch (cp) {
    case 0x0100: return 0x0101;  // Ā
    case 0x010C: return 0x010D;  // Č
    case 0x0112: return 0x0113;  // Ē
    case 0x011A: return 0x011B;  // Ě
    case 0x012A: return 0x012B;  // Ī
    case 0x014C: return 0x014D;  // Ō
    case 0x0152: return 0x0153;  // Œ
    case 0x015A: return 0x015B;  // Ś
    case 0x0160: return 0x0161;  // Š
    case 0x016A: return 0x016B;  // Ū
    case 0x017D: return 0x017E;  // Ž
    case 0x1E9E: return 0x00DF;  // capital eszett
    default: return cp;
  }
}

bool is_space_char(char32_t cp) {
  switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\f':
    case U'\v':
    case 0x00A0:  // no-break space
    case 0x2028:
    case 0x2029:
      return true;
    default:
      return false;
  }
}

bool is_punct_char(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= U'!' && cp <= U'/') || (cp >= U':' && cp <= U'@') ||
           (cp >= U'[' && cp <= U'`') || (cp >= U'{' && cp <= U'~');
  }
  switch (cp) {
    case 0x00A1:  // inverted exclamation
    case 0x00BF:  // inverted question
    case 0x00AB:  // «
    case 0x00BB:  // »
    case 0x2013:  // en dash
    case 0x2014:  // em dash
    case 0x2018:
    case 0x2019:
    case 0x201A:
    case 0x201C:
    case 0x201D:
    case 0x201E:
    case 0x2026:  // ellipsis
    case 0x00B7:  // middle dot
      return true;
    default:
      return false;
  }
}

}  // namespace tevr
