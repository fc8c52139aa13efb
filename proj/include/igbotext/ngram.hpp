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

// Word n-gram frequency tables (n = 1..3) and unsmoothed maximum-likelihood
// probabilities over them.
//
// Windows are taken over the stop-word-filtered token stream, so they span
// removed words and sentence ends; no boundary or padding symbols are used.
// Counts are exact integers and probabilities are computed on demand.

#ifndef IGBOTEXT_NGRAM_HPP_
#define IGBOTEXT_NGRAM_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ranges>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "igbotext/errors.hpp"
#include "igbotext/tokenizer.hpp"
#include "igbotext/unicode.hpp"

namespace igbotext {

inline constexpr int kMinOrder = 1;
inline constexpr int kMaxOrder = 3;

/// An ordered tuple of words.
struct NGram {
  std::vector<std::string> words;

  NGram() = default;
  explicit NGram(std::vector<std::string> w) : words(std::move(w)) {}
  NGram(std::initializer_list<std::string> w) : words(w) {}

  std::size_t order() const noexcept { return words.size(); }

  std::string joined(char sep = ' ') const {
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (i) out.push_back(sep);
      out += words[i];
    }
    return out;
  }

  friend auto operator<=>(const NGram&, const NGram&) = default;
  friend bool operator==(const NGram&, const NGram&) = default;
};

using Count = std::uint64_t;

/// Calls `fn(std::span<const T>)` for each contiguous window of `n` items.
/// Order-generic; the 1..3 cap is enforced by extract_ngrams.
template <typename T, typename Fn>
void for_each_window(std::span<const T> items, std::size_t n, Fn&& fn) {
  if (n == 0 || items.size() < n) return;
  for (std::size_t i = 0; i + n <= items.size(); ++i) {
    fn(items.subspan(i, n));
  }
}

class NGramTable {
 public:
  using Map = std::map<NGram, Count>;

  explicit NGramTable(std::size_t n = 1, std::string doc_id = "merged")
      : n_(n), doc_id_(std::move(doc_id)) {}

  std::size_t order() const noexcept { return n_; }
  const std::string& doc_id() const noexcept { return doc_id_; }
  Count total_windows() const noexcept { return total_; }
  std::size_t distinct() const noexcept { return counts_.size(); }
  bool empty() const noexcept { return counts_.empty(); }
  const Map& counts() const noexcept { return counts_; }

  Count count(const NGram& g) const {
    auto it = counts_.find(g);
    return it == counts_.end() ? 0 : it->second;
  }

  /// Adds `c` occurrences of `g`. `g` must have this table's order.
  void add(const NGram& g, Count c = 1) {
    if (g.order() != n_) throw OrderMismatch(n_, g.order());
    if (c == 0) return;
    counts_[g] += c;
    total_ += c;
  }

  /// Sum of counts over entries whose first words equal `prefix`; the
  /// number of windows in which `prefix` is followed by another word.
  Count prefix_total(std::span<const std::string> prefix) const {
    Count sum = 0;
    NGram lo{std::vector<std::string>(prefix.begin(), prefix.end())};
    for (auto it = counts_.lower_bound(lo); it != counts_.end(); ++it) {
      const auto& w = it->first.words;
      if (!std::equal(prefix.begin(), prefix.end(), w.begin())) break;
      sum += it->second;
    }
    return sum;
  }

  friend bool operator==(const NGramTable&, const NGramTable&) = default;

 private:
  std::size_t n_;
  std::string doc_id_;
  Map counts_;
  Count total_ = 0;
};

inline void check_order(int n) {
  if (n < kMinOrder || n > kMaxOrder) throw InvalidOrder(n);
}

/// Counts every contiguous window of `n` words.
inline NGramTable extract_ngrams(std::span<const std::string> words, int n,
                                 std::string doc_id = "merged") {
  check_order(n);
  NGramTable table(static_cast<std::size_t>(n), std::move(doc_id));
  for_each_window(words, static_cast<std::size_t>(n),
                  [&](std::span<const std::string> w) {
                    table.add(NGram{std::vector<std::string>(w.begin(), w.end())});
                  });
  return table;
}

inline NGramTable extract_ngrams(const TokenStream& ts, int n) {
  return extract_ngrams(ts.surfaces(), n, ts.doc_id);
}

/// Pointwise sum of two same-order tables.
inline NGramTable merge_tables(const NGramTable& a, const NGramTable& b) {
  if (a.order() != b.order()) throw OrderMismatch(a.order(), b.order());
  NGramTable out(a.order(), "merged");
  for (const auto& [g, c] : a.counts()) out.add(g, c);
  for (const auto& [g, c] : b.counts()) out.add(g, c);
  return out;
}

/// Entries by descending count; ties in ascending byte order of the NFC,
/// space-joined gram. Returns at most `k` entries.
inline std::vector<std::pair<NGram, Count>> rank_features(const NGramTable& t,
                                                          std::size_t k) {
  struct Keyed {
    std::string key;
    const NGram* gram;
    Count count;
  };
  std::vector<Keyed> items;
  items.reserve(t.distinct());
  for (const auto& [g, c] : t.counts()) {
    items.push_back({unicode::nfc_utf8(g.joined()), &g, c});
  }
  std::ranges::sort(items, [](const Keyed& a, const Keyed& b) {
    if (a.count != b.count) return a.count > b.count;
    if (a.key != b.key) return a.key < b.key;
    return *a.gram < *b.gram;
  });
  std::vector<std::pair<NGram, Count>> out;
  const std::size_t m = std::min(k, items.size());
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) out.emplace_back(*items[i].gram, items[i].count);
  return out;
}

/// Unigram, bigram and trigram tables built from the same stream(s).
struct LanguageModel {
  NGramTable unigrams{1};
  NGramTable bigrams{2};
  NGramTable trigrams{3};

  static LanguageModel build(const TokenStream& ts) {
    const auto words = ts.surfaces();
    return LanguageModel{extract_ngrams(words, 1, ts.doc_id),
                         extract_ngrams(words, 2, ts.doc_id),
                         extract_ngrams(words, 3, ts.doc_id)};
  }

  const NGramTable& table(int n) const {
    check_order(n);
    return n == 1 ? unigrams : n == 2 ? bigrams : trigrams;
  }
};

inline LanguageModel merge_models(const LanguageModel& a,
                                  const LanguageModel& b) {
  return LanguageModel{merge_tables(a.unigrams, b.unigrams),
                       merge_tables(a.bigrams, b.bigrams),
                       merge_tables(a.trigrams, b.trigrams)};
}

/// count(w) / total unigram windows; 0 for unseen words.
inline double unigram_probability(const LanguageModel& m, const std::string& w) {
  if (m.unigrams.total_windows() == 0) throw EmptyModel();
  return static_cast<double>(m.unigrams.count(NGram{w})) /
         static_cast<double>(m.unigrams.total_windows());
}

/// Product of unigram probabilities; 1 for the empty sequence.
inline double sequence_probability_unigram(const LanguageModel& m,
                                           std::span<const std::string> ws) {
  if (m.unigrams.total_windows() == 0) throw EmptyModel();
  double p = 1.0;
  for (const auto& w : ws) p *= unigram_probability(m, w);
  return p;
}

/// P(w2 | w1) = count(w1, w2) / (bigram windows starting with w1).
///
/// The denominator counts only occurrences of w1 that have a successor, so
/// the conditionals for a context always sum to one; it equals count(w1)
/// except when w1 is the final token of a stream.
inline double bigram_conditional(const LanguageModel& m, const std::string& w1,
                                 const std::string& w2) {
  const std::string ctx[] = {w1};
  const Count denom = m.bigrams.prefix_total(ctx);
  if (denom == 0) throw UnknownContext(w1);
  return static_cast<double>(m.bigrams.count(NGram{w1, w2})) /
         static_cast<double>(denom);
}

/// P(w3 | w1, w2) = count(w1, w2, w3) / (trigram windows starting w1 w2).
inline double trigram_conditional(const LanguageModel& m, const std::string& w1,
                                  const std::string& w2,
                                  const std::string& w3) {
  const std::string ctx[] = {w1, w2};
  const Count denom = m.trigrams.prefix_total(ctx);
  if (denom == 0) throw UnknownContext(w1 + " " + w2);
  return static_cast<double>(m.trigrams.count(NGram{w1, w2, w3})) /
         static_cast<double>(denom);
}

/// Forward chain rule with bigram conditionals:
///   P(w1) * P(w2 | w1) * ... * P(wn | wn-1).
/// An unseen word or context contributes a zero factor. The empty sequence
/// has probability 1.
inline double sequence_probability_bigram(const LanguageModel& m,
                                          std::span<const std::string> ws) {
  if (m.unigrams.total_windows() == 0) throw EmptyModel();
  if (ws.empty()) return 1.0;
  double p = unigram_probability(m, ws[0]);
  for (std::size_t i = 1; i < ws.size() && p != 0.0; ++i) {
    const std::string ctx[] = {ws[i - 1]};
    if (m.bigrams.prefix_total(ctx) == 0) return 0.0;
    p *= bigram_conditional(m, ws[i - 1], ws[i]);
  }
  return p;
}

}  // namespace igbotext

#endif  // IGBOTEXT_NGRAM_HPP_
