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

// Igbo text normalization: lowercase, tone-mark removal, noise removal and
// clitic-boundary splitting, applied in that order.

#ifndef IGBOTEXT_NORMALIZER_HPP_
#define IGBOTEXT_NORMALIZER_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "igbotext/mode.hpp"
#include "igbotext/text_io.hpp"
#include "igbotext/unicode.hpp"

namespace igbotext {

/// Settings derived from a Mode; the split flags cannot be set independently.
class NormalizerConfig {
 public:
  explicit NormalizerConfig(Mode mode = Mode::kPaperGolden)
      : mode_(mode), split_hyphens_(mode == Mode::kStrict) {}

  Mode mode() const noexcept { return mode_; }
  bool split_hyphens() const noexcept { return split_hyphens_; }
  bool split_apostrophes() const noexcept { return true; }

 private:
  Mode mode_;
  bool split_hyphens_;
};

/// Kinds of non-Igbo data removed during normalization. Dates and times are
/// always digit-bearing, so kDateTime is never reported separately.
enum class NoiseClass { kDigitBearing, kCurrency, kDateTime, kSymbol };

inline constexpr char32_t kCombiningGrave = 0x0300;
inline constexpr char32_t kCombiningAcute = 0x0301;
inline constexpr char32_t kCombiningMacron = 0x0304;
inline constexpr char32_t kCombiningDotBelow = 0x0323;

inline bool is_ascii_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

inline bool is_tone_mark(char32_t c) {
  return c == kCombiningGrave || c == kCombiningAcute || c == kCombiningMacron;
}

/// Noise class of a single character, or nullopt for characters that are
/// kept. Hyphen and apostrophes are not noise; they are clitic boundaries.
inline std::optional<NoiseClass> noise_class(char32_t c) {
  if (is_ascii_digit(c)) return NoiseClass::kDigitBearing;
  switch (c) {
    case U'£':
    case U'€':
    case U'₦':
    case U'$':
      return NoiseClass::kCurrency;
    case U':': case U';': case U'?': case U'!': case U'"':
    case U'{': case U'}': case U'+': case U'&': case U'[':
    case U']': case U'<': case U'>': case U'/': case U'@':
    case U'*': case U'=': case U'^': case U'%': case U',':
    case U'.': case U'(': case U')':
    case U'“': case U'”': case U'‘':
      return NoiseClass::kSymbol;
    default:
      return std::nullopt;
  }
}

inline std::u32string to_lowercase(std::u32string_view text) {
  return unicode::to_lower(text);
}

/// Removes grave, acute and macron tone marks. The dot below of ị, ọ, ụ is
/// orthographic and survives.
inline std::u32string strip_tone_marks(std::u32string_view text) {
  std::u32string decomposed = unicode::nfd(text);
  std::erase_if(decomposed, is_tone_mark);
  return unicode::nfc(decomposed);
}

/// Drops digit-bearing words, deletes currency and symbol characters from
/// the remaining words, and rejoins them with single spaces.
inline std::u32string remove_noise(std::u32string_view text) {
  std::vector<std::u32string> kept;
  for (std::u32string& word : unicode::split_whitespace(text)) {
    if (std::ranges::any_of(word, is_ascii_digit)) continue;
    std::erase_if(word, [](char32_t c) { return noise_class(c).has_value(); });
    if (!word.empty()) kept.push_back(std::move(word));
  }
  return unicode::join_words(kept);
}

/// Replaces hyphens and/or apostrophes with word breaks, per `cfg`.
inline std::u32string split_clitic_boundaries(std::u32string_view text,
                                              const NormalizerConfig& cfg) {
  std::u32string out(text);
  for (char32_t& c : out) {
    if ((cfg.split_hyphens() && c == U'-') ||
        (cfg.split_apostrophes() && unicode::is_apostrophe(c))) {
      c = U' ';
    }
  }
  return unicode::join_words(unicode::split_whitespace(out));
}

inline std::u32string normalize_text(std::u32string_view text,
                                     const NormalizerConfig& cfg) {
  std::u32string t = to_lowercase(text);
  t = strip_tone_marks(t);
  t = remove_noise(t);
  return split_clitic_boundaries(t, cfg);
}

inline Document normalize(const Document& doc, const NormalizerConfig& cfg) {
  return Document{doc.id, normalize_text(doc.text, cfg)};
}

}  // namespace igbotext

#endif  // IGBOTEXT_NORMALIZER_HPP_
