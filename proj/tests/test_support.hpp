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

// Shared fixtures and frozen expected values for the Doc1 sample text.
//
// The filtered token sequences below were produced by hand: the sample text
// was lowercased, punctuation and quotes dropped, and the shipped stop words
// struck out (plus words under three letters in strict mode, where hyphens
// are also word breaks). They are the oracle for every table test.

#ifndef IGBOTEXT_TESTS_TEST_SUPPORT_HPP_
#define IGBOTEXT_TESTS_TEST_SUPPORT_HPP_

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "igbotext.hpp"

namespace igbotext::testing {

inline const std::filesystem::path kFixtureDir = IGBOTEXT_FIXTURE_DIR;
inline const std::filesystem::path kDataDir = IGBOTEXT_DATA_DIR;
inline const std::filesystem::path kDoc1Path = kFixtureDir / "doc1.txt";
inline const std::filesystem::path kStopwordsPath = kDataDir / "stopwords.txt";
inline const std::filesystem::path kLexiconPath = kDataDir / "lexicon.tsv";

inline Document doc1() { return load_document(kDoc1Path); }

inline StopList shipped_stoplist() { return load_stoplist_file(kStopwordsPath); }

inline Pipeline doc1_pipeline(Mode mode) {
  return Pipeline(mode, shipped_stoplist());
}

inline const std::vector<std::string> kDoc1FilteredPaper = {
    "kpaacharu", "anya",      "projekto", "nkuziie",    "achoghi", "okwu",
    "ntughe",    "ichoghi",   "hu",       "ihe-ngosi",  "gi",      "oburu",
    "ichoro",    "iji",       "projekto", "nkuziie",    "were",    "ruo",
    "oru",       "pikinye",   "jikoo",    "na-akwunye", "projekto", "nkuziie",
    "komputa",   "nkunaka",   "iji",      "mee",        "ihe",     "onyonyo",
    "komputa",   "nkunaka",   "banyere",  "projekto",   "nkuziie", "ocha"};

inline const std::vector<std::string> kDoc1FilteredStrict = {
    "kpaacharu", "anya",     "projekto", "nkuziie", "achoghi", "okwu",
    "ntughe",    "ichoghi",  "ihe",      "ngosi",   "oburu",   "ichoro",
    "iji",       "projekto", "nkuziie",  "were",    "ruo",     "oru",
    "pikinye",   "jikoo",    "akwunye",  "projekto", "nkuziie", "komputa",
    "nkunaka",   "iji",      "mee",      "ihe",     "onyonyo", "komputa",
    "nkunaka",   "banyere",  "projekto", "nkuziie", "ocha"};

/// Reference unigram table (27 rows).
inline const std::map<std::string, int> kReferenceUnigrams = {
    {"achoghi", 1}, {"anya", 1},       {"banyere", 1},   {"gi", 1},
    {"hu", 1},      {"ihe", 1},        {"ihe-ngosi", 1}, {"iji", 2},
    {"jikoo", 1},   {"komputa", 2},    {"mee", 1},       {"na-akwunye", 1},
    {"nkunaka", 2}, {"kpaacharu", 1},  {"nkuziie", 4},   {"ntughe", 1},
    {"okwu", 1},    {"onyonyo", 1},    {"projekto", 4},  {"pikinye", 1},
    {"ruo", 1},     {"were", 1},       {"ichoghi", 1},   {"ichoro", 1},
    {"oburu", 1},   {"ocha", 1},       {"oru", 1}};

/// Reference bigram table (30 rows; "ichoro iji" is not among them).
inline const std::vector<std::pair<std::string, int>> kReferenceBigrams = {
    {"projekto nkuziie", 4},   {"kpaacharu anya", 1},  {"komputa nkunaka", 2},
    {"anya projekto", 1},      {"achoghi okwu", 1},    {"oru pikinye", 1},
    {"na-akwunye projekto", 1}, {"nkunaka iji", 1},    {"oburu ichoro", 1},
    {"ichoghi hu", 1},         {"iji mee", 1},         {"ruo oru", 1},
    {"were ruo", 1},           {"nkuziie komputa", 1}, {"ihe onyonyo", 1},
    {"onyonyo komputa", 1},    {"nkunaka banyere", 1}, {"jikoo na-akwunye", 1},
    {"okwu ntughe", 1},        {"mee ihe", 1},         {"nkuziie were", 1},
    {"hu ihe-ngosi", 1},       {"pikinye jikoo", 1},   {"nkuziie achoghi", 1},
    {"banyere projekto", 1},   {"ntughe ichoghi", 1},  {"nkuziie ocha", 1},
    {"gi oburu", 1},           {"iji projekto", 1},    {"ihe-ngosi gi", 1}};

/// Reference trigram table (34 rows), including its spelling drift
/// ("achoghị", "ihengosi").
inline const std::vector<std::string> kReferenceTrigrams = {
    "ntughe ichoghi hu",        "nkunaka banyere projekto",
    "projekto nkuziie were",    "oru pikinye jikoo",
    "projekto nkuziie komputa", "ichoro iji projekto",
    "gi oburu ichoro",          "komputa nkunaka banyere",
    "ihe onyonyo komputa",      "nkunaka iji mee",
    "projekto nkuziie ocha",    "pikinye jikoo na-akwunye",
    "okwu ntughe ichoghị",      "ruo oru pikinye",
    "nkuziie komputa nkunaka",  "onyonyo komputa nkunaka",
    "komputa nkunaka iji",      "hu ihe-ngosi gi",
    "jikoo na-akwunye projekto", "iji mee ihe",
    "achoghị okwu ntughe",      "nkuziie were ruo",
    "ihe-ngosi gi oburu",       "banyere projekto nkuziie",
    "were ruo oru",             "nkuziie achoghị okwu",
    "ichoghị hu ihengosi",      "kpaacharu anya projekto",
    "anya projekto nkuziie",    "projekto nkuziie achoghị",
    "oburu ichoro iji",         "na-akwunye projekto nkuziie",
    "mee ihe onyonyo",          "iji projekto nkuziie"};

/// Comparison key tolerant of the reference tables' spelling drift: drops the
/// dot below and hyphens.
inline std::string drift_tolerant_key(const std::string& gram) {
  std::u32string out;
  for (char32_t c : unicode::nfd(utf8::decode(gram))) {
    if (c == 0x0323 || c == U'-') continue;
    out.push_back(c);
  }
  return utf8::encode(unicode::nfc(out));
}

inline std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  for (const auto& w : unicode::split_whitespace(utf8::decode(s))) {
    out.push_back(utf8::encode(w));
  }
  return out;
}

}  // namespace igbotext::testing

#endif  // IGBOTEXT_TESTS_TEST_SUPPORT_HPP_
