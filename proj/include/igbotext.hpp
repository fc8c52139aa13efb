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

#ifndef IGBOTEXT_IGBOTEXT_HPP_
#define IGBOTEXT_IGBOTEXT_HPP_

#include "igbotext/errors.hpp"
#include "igbotext/lexicon.hpp"
#include "igbotext/mode.hpp"
#include "igbotext/ngram.hpp"
#include "igbotext/normalizer.hpp"
#include "igbotext/pipeline.hpp"
#include "igbotext/serialize.hpp"
#include "igbotext/stopwords.hpp"
#include "igbotext/text_io.hpp"
#include "igbotext/tokenizer.hpp"
#include "igbotext/unicode.hpp"

#endif  // IGBOTEXT_IGBOTEXT_HPP_
