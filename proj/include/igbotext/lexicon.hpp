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

// Igbo compound-word lexicon and key-feature matching.
//
// Six compound categories are recognised. Nominal, Agentive, Duplicated and
// Coordinate compounds are written as separate words; Proper and Derived
// compounds are written as one word. Only Duplicated (every word repeated)
// and Coordinate (joined by the conjunction "na") can be told apart by
// surface form; the others are lexical knowledge carried by the lexicon file.

#ifndef IGBOTEXT_LEXICON_HPP_
#define IGBOTEXT_LEXICON_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "igbotext/errors.hpp"
#include "igbotext/ngram.hpp"
#include "igbotext/text_io.hpp"
#include "igbotext/unicode.hpp"

namespace igbotext {

enum class CompoundCategory {
  kNominal,
  kAgentive,
  kDuplicated,
  kCoordinate,
  kProper,
  kDerived,
};

inline constexpr std::array<std::pair<CompoundCategory, std::string_view>, 6>
    kCategoryNames = {{
        {CompoundCategory::kNominal, "Nominal"},
        {CompoundCategory::kAgentive, "Agentive"},
        {CompoundCategory::kDuplicated, "Duplicated"},
        {CompoundCategory::kCoordinate, "Coordinate"},
        {CompoundCategory::kProper, "Proper"},
        {CompoundCategory::kDerived, "Derived"},
    }};

inline std::string_view to_string(CompoundCategory c) {
  for (const auto& [cat, name] : kCategoryNames) {
    if (cat == c) return name;
  }
  return "?";
}

inline std::optional<CompoundCategory> parse_category(std::string_view s) {
  for (const auto& [cat, name] : kCategoryNames) {
    if (name == s) return cat;
  }
  return std::nullopt;
}

inline constexpr std::size_t kMaxPhraseWords = 4;
inline constexpr std::string_view kConjunction = "na";

struct LexiconEntry {
  std::vector<std::string> phrase;
  std::string gloss;
  CompoundCategory category = CompoundCategory::kNominal;

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

struct KeyFeature {
  NGram gram;
  std::string gloss;
  CompoundCategory category = CompoundCategory::kNominal;
  Count count = 0;

  friend bool operator==(const KeyFeature&, const KeyFeature&) = default;
};

namespace detail {

inline bool all_identical(std::span<const std::string> p) {
  return p.size() >= 2 &&
         std::ranges::all_of(p, [&](const std::string& w) { return w == p[0]; });
}

inline bool has_interior_conjunction(std::span<const std::string> p) {
  return p.size() >= 3 &&
         std::find(p.begin() + 1, p.end() - 1, kConjunction) != p.end() - 1;
}

}  // namespace detail

/// Surface-rule category: Duplicated when every word repeats (2+ words),
/// Coordinate when an interior word is "na", otherwise nullopt.
inline std::optional<CompoundCategory> detect_category(
    std::span<const std::string> phrase) {
  if (detail::all_identical(phrase)) return CompoundCategory::kDuplicated;
  if (detail::has_interior_conjunction(phrase)) return CompoundCategory::kCoordinate;
  return std::nullopt;
}

/// Throws InvariantError when `e` breaks a category rule.
inline void validate_entry(const LexiconEntry& e) {
  const auto& p = e.phrase;
  const std::string name = "\"" + NGram{p}.joined() + "\"";
  auto fail = [&](const std::string& rule) {
    throw InvariantError("lexicon entry " + name + " (" +
                         std::string(to_string(e.category)) + "): " + rule);
  };
  if (p.empty() || p.size() > kMaxPhraseWords) fail("phrase must have 1..4 words");
  switch (e.category) {
    case CompoundCategory::kProper:
    case CompoundCategory::kDerived:
      if (p.size() != 1) fail("written-together compounds must be one word");
      return;
    case CompoundCategory::kDuplicated:
      if (!detail::all_identical(p)) fail("all words must be identical");
      return;
    case CompoundCategory::kCoordinate:
      if (!detail::has_interior_conjunction(p)) fail("needs an interior \"na\"");
      return;
    case CompoundCategory::kNominal:
    case CompoundCategory::kAgentive:
      if (p.size() < 2) fail("needs at least two words");
      if (detail::all_identical(p)) fail("repeated words demand Duplicated");
      return;
  }
}

/// Parses the TAB-separated lexicon format: phrase, gloss, category.
/// Blank lines and lines starting with '#' are skipped. Phrases are
/// lowercased and NFC-composed.
inline std::vector<LexiconEntry> load_lexicon(const RawBytes& raw) {
  const std::string text = utf8::encode(utf8::decode(raw.bytes, raw.source_id));
  std::vector<LexiconEntry> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string_view line(text.data() + pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (line.empty() || line.starts_with('#')) continue;
    if (std::ranges::all_of(line, [](char c) { return c == ' ' || c == '\t'; })) continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t tab; (tab = line.find('\t', start)) != std::string_view::npos;
         start = tab + 1) {
      fields.push_back(line.substr(start, tab - start));
    }
    fields.push_back(line.substr(start));
    if (fields.size() != 3) {
      throw FormatError(line_no, "expected 3 TAB-separated fields, got " +
                                     std::to_string(fields.size()));
    }
    auto category = parse_category(fields[2]);
    if (!category) {
      throw FormatError(line_no, "unknown category \"" + std::string(fields[2]) + "\"");
    }
    LexiconEntry entry;
    for (auto& w : unicode::split_whitespace(
             unicode::nfc(unicode::to_lower(utf8::decode(fields[0]))))) {
      entry.phrase.push_back(utf8::encode(w));
    }
    if (entry.phrase.empty()) throw FormatError(line_no, "empty phrase");
    entry.gloss = std::string(fields[1]);
    entry.category = *category;
    validate_entry(entry);
    out.push_back(std::move(entry));
  }
  return out;
}

inline std::vector<LexiconEntry> load_lexicon_file(const std::filesystem::path& path) {
  RawBytes raw = read_file(path);
  strip_bom(raw);
  return load_lexicon(raw);
}

inline std::string serialize_lexicon(std::span<const LexiconEntry> entries) {
  std::string out;
  for (const auto& e : entries) {
    out += NGram{e.phrase}.joined();
    out += '\t';
    out += e.gloss;
    out += '\t';
    out += to_string(e.category);
    out += '\n';
  }
  return out;
}

/// Every lexicon phrase present in the model's table of the same order,
/// with that table's count. Sorted by descending count, then gram.
inline std::vector<KeyFeature> match_key_features(
    const LanguageModel& m, std::span<const LexiconEntry> lexicon) {
  std::vector<KeyFeature> out;
  for (const auto& e : lexicon) {
    const int n = static_cast<int>(e.phrase.size());
    if (n < kMinOrder || n > kMaxOrder) continue;
    NGram g{e.phrase};
    const Count c = m.table(n).count(g);
    if (c == 0) continue;
    if (std::ranges::any_of(out, [&](const KeyFeature& k) { return k.gram == g; })) {
      continue;  // first gloss wins for duplicate phrases
    }
    out.push_back(KeyFeature{std::move(g), e.gloss, e.category, c});
  }
  std::ranges::sort(out, [](const KeyFeature& a, const KeyFeature& b) {
    if (a.count != b.count) return a.count > b.count;
    return unicode::nfc_utf8(a.gram.joined()) < unicode::nfc_utf8(b.gram.joined());
  });
  return out;
}

}  // namespace igbotext

#endif  // IGBOTEXT_LEXICON_HPP_
