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

#ifndef IGBOTEXT_MODE_HPP_
#define IGBOTEXT_MODE_HPP_

#include <optional>
#include <string_view>

namespace igbotext {

/// kPaperGolden keeps hyphenated words, skips clitic splitting and the
/// minimum-length filter, reproducing the reference Doc1 tables.
/// kStrict applies every normalization, tokenization and filtering step
/// literally.
enum class Mode { kPaperGolden, kStrict };

inline std::optional<Mode> parse_mode(std::string_view s) {
  if (s == "paper" || s == "paper_golden") return Mode::kPaperGolden;
  if (s == "strict") return Mode::kStrict;
  return std::nullopt;
}

inline std::string_view to_string(Mode m) {
  return m == Mode::kStrict ? "strict" : "paper";
}

}  // namespace igbotext

#endif  // IGBOTEXT_MODE_HPP_
