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

#ifndef IGBOTEXT_STOPWORDS_HPP_
#define IGBOTEXT_STOPWORDS_HPP_

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "igbotext/mode.hpp"
#include "igbotext/text_io.hpp"
#include "igbotext/tokenizer.hpp"
#include "igbotext/unicode.hpp"

namespace igbotext {

/// Lowercase, NFC, apostrophe-canonical stop words.
struct StopList {
  std::set<std::string> words;
  std::string source = "builtin";

  bool contains(std::string_view surface) const {
    return words.contains(canonical(surface));
  }
  std::size_t size() const noexcept { return words.size(); }
  bool empty() const noexcept { return words.empty(); }

  /// The comparison form of a word: lowercase, NFC, U+2019 apostrophes.
  static std::string canonical(std::string_view word) {
    auto text = unicode::to_lower(utf8::decode(word));
    return utf8::encode(unicode::canonical_apostrophes(unicode::nfc(text)));
  }
};

/// Non-fatal conditions reported while loading data files.
enum class LoadWarning { kEmptyStopList };

/// Entries are separated by commas and/or line breaks; surrounding
/// whitespace is trimmed and empty entries dropped. Appends
/// kEmptyStopList to `warnings` when nothing loads.
inline StopList load_stoplist(const RawBytes& raw,
                              std::vector<LoadWarning>* warnings = nullptr) {
  const std::u32string text = utf8::decode(raw.bytes, raw.source_id);
  StopList list;
  if (!raw.source_id.empty()) list.source = raw.source_id;
  std::u32string entry;
  auto flush = [&] {
    std::size_t b = 0, e = entry.size();
    while (b < e && unicode::is_space(entry[b])) ++b;
    while (e > b && unicode::is_space(entry[e - 1])) --e;
    if (e > b) {
      list.words.insert(StopList::canonical(
          utf8::encode(std::u32string_view(entry).substr(b, e - b))));
    }
    entry.clear();
  };
  for (char32_t c : text) {
    if (c == U',' || c == U'\n' || c == U'\r') {
      flush();
    } else {
      entry.push_back(c);
    }
  }
  flush();
  if (list.empty() && warnings) warnings->push_back(LoadWarning::kEmptyStopList);
  return list;
}

inline StopList load_stoplist_file(const std::filesystem::path& path,
                                   std::vector<LoadWarning>* warnings = nullptr) {
  RawBytes raw = read_file(path);
  strip_bom(raw);
  return load_stoplist(raw, warnings);
}

class StopFilterConfig {
 public:
  explicit StopFilterConfig(Mode mode = Mode::kPaperGolden)
      : mode_(mode), min_token_length_(mode == Mode::kStrict ? 3 : 0) {}

  Mode mode() const noexcept { return mode_; }
  /// Minimum surface length in scalar values ("ahụ" is 3).
  std::size_t min_token_length() const noexcept { return min_token_length_; }

 private:
  Mode mode_;
  std::size_t min_token_length_;
};

/// Drops stop words and short tokens; survivors keep their order and are
/// re-indexed from 0.
inline TokenStream remove_stopwords(const TokenStream& ts, const StopList& sl,
                                    const StopFilterConfig& cfg) {
  std::vector<std::string> kept;
  for (const Token& t : ts.tokens) {
    if (utf8::scalar_length(t.surface) < cfg.min_token_length()) continue;
    if (sl.contains(t.surface)) continue;
    kept.push_back(t.surface);
  }
  return TokenStream::from_surfaces(ts.doc_id, std::move(kept));
}

}  // namespace igbotext

#endif  // IGBOTEXT_STOPWORDS_HPP_
