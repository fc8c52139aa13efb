// Copyright 2026 The igbotext Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Thin wrappers over ICU character properties and canonical normalization,
// operating on scalar-value strings.

#ifndef IGBOTEXT_UNICODE_HPP_
#define IGBOTEXT_UNICODE_HPP_

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "igbotext/text_io.hpp"

namespace igbotext::unicode {

inline constexpr char32_t kApostrophe = U'\'';
inline constexpr char32_t kRightSingleQuote = U'’';

inline bool is_space(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)); }

inline bool is_apostrophe(char32_t c) {
  return c == kApostrophe || c == kRightSingleQuote;
}

/// Simple (1:1) lowercase mapping.
inline char32_t to_lower(char32_t c) {
  return static_cast<char32_t>(u_tolower(static_cast<UChar32>(c)));
}

inline bool is_upper(char32_t c) {
  return to_lower(c) != c;
}

namespace detail {

inline icu::UnicodeString to_icu(std::u32string_view s) {
  icu::UnicodeString out;
  for (char32_t c : s) out.append(static_cast<UChar32>(c));
  return out;
}

inline std::u32string from_icu(const icu::UnicodeString& s) {
  std::u32string out;
  out.reserve(static_cast<std::size_t>(s.length()));
  for (int32_t i = 0; i < s.length();) {
    const UChar32 c = s.char32At(i);
    out.push_back(static_cast<char32_t>(c));
    i += U16_LENGTH(c);
  }
  return out;
}

inline std::u32string apply(const icu::Normalizer2* (*instance)(UErrorCode&),
                            std::u32string_view s) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* norm = instance(status);
  if (U_FAILURE(status)) {
    throw std::runtime_error(std::string("ICU normalizer unavailable: ") +
                             u_errorName(status));
  }
  icu::UnicodeString result = norm->normalize(to_icu(s), status);
  if (U_FAILURE(status)) {
    throw std::runtime_error(std::string("ICU normalization failed: ") +
                             u_errorName(status));
  }
  return from_icu(result);
}

}  // namespace detail

inline std::u32string nfd(std::u32string_view s) {
  return detail::apply(&icu::Normalizer2::getNFDInstance, s);
}

inline std::u32string nfc(std::u32string_view s) {
  return detail::apply(&icu::Normalizer2::getNFCInstance, s);
}

inline std::string nfc_utf8(std::string_view s) {
  return utf8::encode(nfc(utf8::decode(s)));
}

inline std::u32string to_lower(std::u32string_view s) {
  std::u32string out(s);
  for (char32_t& c : out) c = to_lower(c);
  return out;
}

/// Maps U+0027 to U+2019 so both apostrophe spellings compare equal.
inline std::u32string canonical_apostrophes(std::u32string_view s) {
  std::u32string out(s);
  for (char32_t& c : out) {
    if (c == kApostrophe) c = kRightSingleQuote;
  }
  return out;
}

/// Splits on runs of Unicode whitespace; never yields empty pieces.
inline std::vector<std::u32string> split_whitespace(std::u32string_view s) {
  std::vector<std::u32string> words;
  std::u32string cur;
  for (char32_t c : s) {
    if (is_space(c)) {
      if (!cur.empty()) words.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

inline std::u32string join_words(const std::vector<std::u32string>& words) {
  std::u32string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out.push_back(U' ');
    out += words[i];
  }
  return out;
}

}  // namespace igbotext::unicode

#endif  // IGBOTEXT_UNICODE_HPP_
