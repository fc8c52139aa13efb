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

#ifndef IGBOTEXT_TOKENIZER_HPP_
#define IGBOTEXT_TOKENIZER_HPP_

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "igbotext/mode.hpp"
#include "igbotext/text_io.hpp"
#include "igbotext/unicode.hpp"

namespace igbotext {

struct Token {
  std::string surface;  // UTF-8, non-empty, no whitespace
  std::size_t index = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

struct TokenStream {
  std::string doc_id;
  std::vector<Token> tokens;

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }

  std::vector<std::string> surfaces() const {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const Token& t : tokens) out.push_back(t.surface);
    return out;
  }

  /// Builds a stream from surfaces, assigning indices 0..n-1.
  static TokenStream from_surfaces(std::string doc_id,
                                   std::vector<std::string> surfaces) {
    TokenStream ts{std::move(doc_id), {}};
    ts.tokens.reserve(surfaces.size());
    for (auto& s : surfaces) {
      ts.tokens.push_back(Token{std::move(s), ts.tokens.size()});
    }
    return ts;
  }

  friend bool operator==(const TokenStream&, const TokenStream&) = default;
};

inline std::vector<std::string> default_clitic_prefixes() {
  return {"ga-", "aga-", "n’", "na-", "ana-", "oga-", "iga-", "ona-", "ina-"};
}

class TokenizerConfig {
 public:
  explicit TokenizerConfig(Mode mode = Mode::kPaperGolden,
                           std::vector<std::string> clitic_prefixes =
                               default_clitic_prefixes())
      : mode_(mode), clitic_prefixes_(std::move(clitic_prefixes)) {}

  Mode mode() const noexcept { return mode_; }
  const std::vector<std::string>& clitic_prefixes() const noexcept {
    return clitic_prefixes_;
  }

 private:
  Mode mode_;
  std::vector<std::string> clitic_prefixes_;
};

namespace detail {

/// Prefixes decoded, apostrophe-canonicalized and sorted longest first
/// (stable, so the configured order breaks ties).
inline std::vector<std::u32string> match_order(
    const std::vector<std::string>& prefixes) {
  std::vector<std::u32string> out;
  for (const auto& p : prefixes) {
    out.push_back(unicode::canonical_apostrophes(utf8::decode(p)));
  }
  std::ranges::stable_sort(out, [](const auto& a, const auto& b) {
    return a.size() > b.size();
  });
  return out;
}

/// Length of the clitic prefix that `word` starts with, or 0. A prefix only
/// counts when something follows it.
inline std::size_t clitic_length(std::u32string_view word,
                                 const std::vector<std::u32string>& ordered) {
  const std::u32string canon = unicode::canonical_apostrophes(word);
  for (const auto& p : ordered) {
    if (!p.empty() && canon.size() > p.size() && canon.starts_with(p)) {
      return p.size();
    }
  }
  return 0;
}

}  // namespace detail

/// Splits normalized text on whitespace. In strict mode a leading clitic
/// prefix ("na-ese" -> "na-", "ese") is peeled off; repeated prefixes are
/// peeled one after another.
inline TokenStream tokenize(const Document& doc, const TokenizerConfig& cfg) {
  std::vector<std::string> surfaces;
  const bool split = cfg.mode() == Mode::kStrict;
  const auto ordered =
      split ? detail::match_order(cfg.clitic_prefixes())
            : std::vector<std::u32string>{};
  for (const std::u32string& word : unicode::split_whitespace(doc.text)) {
    std::u32string_view rest = word;
    if (split) {
      while (std::size_t len = detail::clitic_length(rest, ordered)) {
        surfaces.push_back(utf8::encode(rest.substr(0, len)));
        rest.remove_prefix(len);
      }
    }
    surfaces.push_back(utf8::encode(rest));
  }
  return TokenStream::from_surfaces(doc.id, std::move(surfaces));
}

inline std::size_t token_count(const TokenStream& ts) { return ts.size(); }

}  // namespace igbotext

#endif  // IGBOTEXT_TOKENIZER_HPP_
