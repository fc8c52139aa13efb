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

// End-to-end representation: normalize -> tokenize -> remove stop words ->
// extract n-grams, plus document-term matrix assembly.

#ifndef IGBOTEXT_PIPELINE_HPP_
#define IGBOTEXT_PIPELINE_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "igbotext/errors.hpp"
#include "igbotext/lexicon.hpp"
#include "igbotext/mode.hpp"
#include "igbotext/ngram.hpp"
#include "igbotext/normalizer.hpp"
#include "igbotext/stopwords.hpp"
#include "igbotext/text_io.hpp"
#include "igbotext/tokenizer.hpp"

namespace igbotext {

enum class OutputFormat { kTsv, kJson };

struct PipelineConfig {
  Mode mode = Mode::kPaperGolden;
  std::filesystem::path stoplist_path;
  std::optional<std::filesystem::path> lexicon_path;
  std::set<int> orders = {1, 2, 3};
  OutputFormat output_format = OutputFormat::kTsv;
};

struct RepresentationBundle {
  std::string doc_id;
  std::map<int, NGramTable> tables;
  std::optional<std::vector<KeyFeature>> features;

  friend bool operator==(const RepresentationBundle&,
                         const RepresentationBundle&) = default;
};

/// Documents x features count matrix for one n-gram order.
struct DocTermMatrix {
  int n = 1;
  std::vector<std::string> docs;
  std::vector<NGram> features;
  std::vector<std::vector<Count>> cells;  // cells[doc][feature]

  friend bool operator==(const DocTermMatrix&, const DocTermMatrix&) = default;
};

/// A configured pipeline. Stop list and lexicon are loaded once at
/// construction and shared read-only by every run().
class Pipeline {
 public:
  explicit Pipeline(PipelineConfig cfg)
      : cfg_(std::move(cfg)),
        normalizer_(cfg_.mode),
        tokenizer_(cfg_.mode),
        filter_(cfg_.mode) {
    if (cfg_.orders.empty()) {
      throw Error(ErrorKind::kUsage, "at least one n-gram order is required");
    }
    for (int n : cfg_.orders) check_order(n);
    try {
      stoplist_ = load_stoplist_file(cfg_.stoplist_path, &warnings_);
    } catch (const Error& e) {
      throw StageError("stop-word list", e);
    }
    if (cfg_.lexicon_path) {
      try {
        lexicon_ = load_lexicon_file(*cfg_.lexicon_path);
      } catch (const Error& e) {
        throw StageError("lexicon", e);
      }
    }
  }

  /// Built from already-loaded data; used by tests and embedders.
  Pipeline(Mode mode, StopList stoplist, std::set<int> orders = {1, 2, 3},
           std::optional<std::vector<LexiconEntry>> lexicon = std::nullopt)
      : normalizer_(mode),
        tokenizer_(mode),
        filter_(mode),
        stoplist_(std::move(stoplist)),
        lexicon_(std::move(lexicon)) {
    cfg_.mode = mode;
    cfg_.orders = std::move(orders);
    if (cfg_.orders.empty()) {
      throw Error(ErrorKind::kUsage, "at least one n-gram order is required");
    }
    for (int n : cfg_.orders) check_order(n);
  }

  const PipelineConfig& config() const noexcept { return cfg_; }
  const StopList& stoplist() const noexcept { return stoplist_; }
  const std::vector<LoadWarning>& warnings() const noexcept { return warnings_; }

  Document normalized(const Document& doc) const {
    return normalize(doc, normalizer_);
  }

  TokenStream tokens(const Document& doc) const {
    return tokenize(normalized(doc), tokenizer_);
  }

  TokenStream filtered_tokens(const Document& doc) const {
    return remove_stopwords(tokens(doc), stoplist_, filter_);
  }

  RepresentationBundle run(const Document& doc) const {
    const TokenStream filtered = filtered_tokens(doc);
    const auto words = filtered.surfaces();
    RepresentationBundle bundle{doc.id, {}, std::nullopt};
    for (int n : cfg_.orders) {
      bundle.tables.emplace(n, extract_ngrams(words, n, doc.id));
    }
    if (lexicon_) {
      bundle.features = match_key_features(LanguageModel::build(filtered), *lexicon_);
    }
    return bundle;
  }

 private:
  PipelineConfig cfg_;
  NormalizerConfig normalizer_;
  TokenizerConfig tokenizer_;
  StopFilterConfig filter_;
  StopList stoplist_;
  std::optional<std::vector<LexiconEntry>> lexicon_;
  std::vector<LoadWarning> warnings_;
};

inline RepresentationBundle run_pipeline(const Document& doc,
                                         const PipelineConfig& cfg) {
  return Pipeline(cfg).run(doc);
}

/// Feature axis is the rank order of the merged table; absent cells are 0.
inline DocTermMatrix build_doc_term_matrix(
    std::span<const RepresentationBundle> bundles, int n) {
  check_order(n);
  DocTermMatrix m;
  m.n = n;
  if (bundles.empty()) return m;
  NGramTable merged(static_cast<std::size_t>(n));
  for (const auto& b : bundles) {
    auto it = b.tables.find(n);
    if (it == b.tables.end()) {
      throw OrderMismatch(static_cast<std::size_t>(n),
                          b.tables.empty() ? 0 : b.tables.begin()->first);
    }
    merged = merge_tables(merged, it->second);
  }
  for (auto& [gram, count] : rank_features(merged, merged.distinct())) {
    m.features.push_back(std::move(gram));
  }
  for (const auto& b : bundles) {
    const NGramTable& t = b.tables.at(n);
    m.docs.push_back(b.doc_id);
    std::vector<Count> row;
    row.reserve(m.features.size());
    for (const auto& f : m.features) row.push_back(t.count(f));
    m.cells.push_back(std::move(row));
  }
  return m;
}

}  // namespace igbotext

#endif  // IGBOTEXT_PIPELINE_HPP_
