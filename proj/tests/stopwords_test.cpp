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

#include "igbotext/stopwords.hpp"

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "test_support.hpp"

namespace igbotext {
namespace {

using Surfaces = std::vector<std::string>;

RawBytes Raw(std::string s) { return RawBytes{std::move(s), "mem"}; }

TokenStream Stream(Surfaces s) { return TokenStream::from_surfaces("d", std::move(s)); }

TEST(LoadStoplistTest, CommaAndNewlineDelimiters) {
  StopList sl = load_stoplist(Raw("ndi, nke,\na"));
  EXPECT_EQ(sl.words, (std::set<std::string>{"ndi", "nke", "a"}));
  EXPECT_EQ(sl.source, "mem");
}

TEST(LoadStoplistTest, TrimsLowercasesDeduplicates) {
  StopList sl = load_stoplist(Raw("  NDI ,ndi\r\n\n, ,Ahụ  "));
  EXPECT_EQ(sl.words, (std::set<std::string>{"ndi", "ahụ"}));
}

TEST(LoadStoplistTest, EmptyInputWarns) {
  std::vector<LoadWarning> warnings;
  StopList sl = load_stoplist(Raw(""), &warnings);
  EXPECT_TRUE(sl.empty());
  EXPECT_EQ(warnings, (std::vector<LoadWarning>{LoadWarning::kEmptyStopList}));
}

TEST(LoadStoplistTest, NonEmptyInputDoesNotWarn) {
  std::vector<LoadWarning> warnings;
  load_stoplist(Raw("na"), &warnings);
  EXPECT_TRUE(warnings.empty());
}

TEST(LoadStoplistTest, DecodeErrorPropagates) {
  EXPECT_THROW(load_stoplist(Raw("na,\xFF")), DecodeError);
}

TEST(LoadStoplistTest, ApostropheFormsUnified) {
  StopList sl = load_stoplist(Raw("n', g’"));
  EXPECT_TRUE(sl.contains("n'"));
  EXPECT_TRUE(sl.contains("n’"));
  EXPECT_TRUE(sl.contains("g'"));
  EXPECT_TRUE(sl.contains("g’"));
}

TEST(LoadStoplistTest, ShippedList) {
  StopList sl = testing::shipped_stoplist();
  for (const char* w : {"makana", "ahụ", "na", "ka", "ha", "n’", "maka", "tupu",
                        "ndi", "a", "ga", "puku"}) {
    EXPECT_TRUE(sl.contains(w)) << w;
  }
  // Kept out so that "gi" survives filtering, as in the reference tables.
  EXPECT_FALSE(sl.contains("gi"));
  EXPECT_FALSE(sl.contains("oburu"));
}

TEST(StopFilterConfigTest, ModeFixesMinLength) {
  EXPECT_EQ(StopFilterConfig(Mode::kPaperGolden).min_token_length(), 0u);
  EXPECT_EQ(StopFilterConfig(Mode::kStrict).min_token_length(), 3u);
}

TEST(RemoveStopwordsTest, DropsListedWords) {
  const TokenStream out = remove_stopwords(Stream({"anya", "makana", "projekto"}),
                                           testing::shipped_stoplist(),
                                           StopFilterConfig(Mode::kPaperGolden));
  EXPECT_EQ(out.surfaces(), (Surfaces{"anya", "projekto"}));
  EXPECT_EQ(out.tokens[1].index, 1u);
}

TEST(RemoveStopwordsTest, StrictDropsShortWords) {
  const TokenStream out = remove_stopwords(Stream({"hu", "gi", "anya"}), StopList{},
                                           StopFilterConfig(Mode::kStrict));
  EXPECT_EQ(out.surfaces(), (Surfaces{"anya"}));
}

TEST(RemoveStopwordsTest, LengthCountsScalars) {
  const TokenStream out = remove_stopwords(Stream({"ụlọ", "ọ"}), StopList{},
                                           StopFilterConfig(Mode::kStrict));
  EXPECT_EQ(out.surfaces(), (Surfaces{"ụlọ"}));
}

TEST(RemoveStopwordsTest, Doc1Paper) {
  const TokenStream out = testing::doc1_pipeline(Mode::kPaperGolden)
                              .filtered_tokens(testing::doc1());
  EXPECT_EQ(token_count(out), 36u);
  EXPECT_EQ(out.surfaces(), testing::kDoc1FilteredPaper);
  const auto s = out.surfaces();
  for (const char* w : {"a", "na", "ka", "ha", "ga", "ndi", "makana", "ahụ"}) {
    EXPECT_EQ(std::find(s.begin(), s.end(), w), s.end()) << w;
  }
}

TEST(RemoveStopwordsTest, EmptyListZeroLengthIsIdentity) {
  const TokenStream in = Stream({"a", "na", "ihe"});
  EXPECT_EQ(remove_stopwords(in, StopList{}, StopFilterConfig(Mode::kPaperGolden)), in);
}

}  // namespace
}  // namespace igbotext
