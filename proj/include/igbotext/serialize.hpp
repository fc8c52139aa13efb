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

// TSV and JSON output for tables, bundles, key features and matrices.
//
// TSV tables are header-free: one "gram<TAB>count" line per entry in
// rank_features order. A JSON table is
//   {"doc_id": ..., "n": ..., "total": ..., "entries": [{"gram": [...],
//    "count": ...}, ...]}
// with entries in the same order. A bundle with several orders is written
// as the concatenation (TSV) or array (JSON) of its tables, lowest n first.

#ifndef IGBOTEXT_SERIALIZE_HPP_
#define IGBOTEXT_SERIALIZE_HPP_

#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "igbotext/errors.hpp"
#include "igbotext/lexicon.hpp"
#include "igbotext/ngram.hpp"
#include "igbotext/pipeline.hpp"
#include "igbotext/tokenizer.hpp"

namespace igbotext {

using json = nlohmann::ordered_json;

inline std::string table_to_tsv(const NGramTable& t) {
  std::string out;
  for (const auto& [gram, count] : rank_features(t, t.distinct())) {
    out += gram.joined();
    out += '\t';
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

inline json table_to_json(const NGramTable& t) {
  json entries = json::array();
  for (const auto& [gram, count] : rank_features(t, t.distinct())) {
    entries.push_back({{"gram", gram.words}, {"count", count}});
  }
  return {{"doc_id", t.doc_id()},
          {"n", t.order()},
          {"total", t.total_windows()},
          {"entries", std::move(entries)}};
}

/// Inverse of table_to_json. Throws Error(kData) on malformed input or a
/// total that disagrees with the entries.
inline NGramTable table_from_json(const json& j) {
  try {
    NGramTable t(j.at("n").get<std::size_t>(), j.at("doc_id").get<std::string>());
    for (const auto& e : j.at("entries")) {
      t.add(NGram{e.at("gram").get<std::vector<std::string>>()},
            e.at("count").get<Count>());
    }
    if (t.total_windows() != j.at("total").get<Count>()) {
      throw Error(ErrorKind::kData, "table total does not match entry counts");
    }
    return t;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kData, std::string("malformed table JSON: ") + e.what());
  }
}

inline std::string bundle_to_tsv(const RepresentationBundle& b) {
  std::string out;
  for (const auto& [n, t] : b.tables) out += table_to_tsv(t);
  return out;
}

/// A single table object for one order, an array of table objects
/// otherwise.
inline json bundle_to_json(const RepresentationBundle& b) {
  if (b.tables.size() == 1) return table_to_json(b.tables.begin()->second);
  json arr = json::array();
  for (const auto& [n, t] : b.tables) arr.push_back(table_to_json(t));
  return arr;
}

inline RepresentationBundle bundle_from_json(const json& j) {
  RepresentationBundle b;
  auto take = [&](const json& tj) {
    NGramTable t = table_from_json(tj);
    b.doc_id = t.doc_id();
    const int n = static_cast<int>(t.order());
    b.tables.emplace(n, std::move(t));
  };
  if (j.is_array()) {
    for (const auto& tj : j) take(tj);
  } else {
    take(j);
  }
  return b;
}

inline std::string features_to_tsv(std::span<const KeyFeature> fs) {
  std::string out;
  for (const auto& f : fs) {
    out += f.gram.joined() + '\t' + f.gloss + '\t' +
           std::string(to_string(f.category)) + '\t' + std::to_string(f.count) +
           '\n';
  }
  return out;
}

inline json features_to_json(const std::string& doc_id,
                             std::span<const KeyFeature> fs) {
  json entries = json::array();
  for (const auto& f : fs) {
    entries.push_back({{"gram", f.gram.words},
                       {"gloss", f.gloss},
                       {"category", to_string(f.category)},
                       {"count", f.count}});
  }
  return {{"doc_id", doc_id}, {"features", std::move(entries)}};
}

/// Header row "doc" followed by the feature grams, then one row per
/// document.
inline std::string matrix_to_tsv(const DocTermMatrix& m) {
  std::string out = "doc";
  for (const auto& f : m.features) out += '\t' + f.joined();
  out += '\n';
  for (std::size_t i = 0; i < m.docs.size(); ++i) {
    out += m.docs[i];
    for (Count c : m.cells[i]) out += '\t' + std::to_string(c);
    out += '\n';
  }
  return out;
}

inline json matrix_to_json(const DocTermMatrix& m) {
  json features = json::array();
  for (const auto& f : m.features) features.push_back(f.words);
  return {{"n", m.n},
          {"docs", m.docs},
          {"features", std::move(features)},
          {"cells", m.cells}};
}

inline std::string tokens_to_tsv(const TokenStream& ts) {
  std::string out;
  for (const auto& t : ts.tokens) out += t.surface + '\n';
  return out;
}

inline json tokens_to_json(const TokenStream& ts) {
  return {{"doc_id", ts.doc_id}, {"tokens", ts.surfaces()}};
}

inline std::string dump(const json& j) { return j.dump(2) + '\n'; }

/// Writes `content` to `path`, replacing it. Throws IoError.
inline void write_file(const std::filesystem::path& path,
                       const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
}

}  // namespace igbotext

#endif  // IGBOTEXT_SERIALIZE_HPP_
