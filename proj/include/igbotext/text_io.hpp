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

// Strict UTF-8 decoding/encoding and corpus ingestion.

#ifndef IGBOTEXT_TEXT_IO_HPP_
#define IGBOTEXT_TEXT_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "igbotext/errors.hpp"

namespace igbotext {

/// Undecoded file content. `bytes` is an opaque byte buffer; std::string is
/// used only as a container.
struct RawBytes {
  std::string bytes;
  std::string source_id;
};

/// A decoded text. `text` holds Unicode scalar values only (no surrogates).
struct Document {
  std::string id;
  std::u32string text;

  friend bool operator==(const Document&, const Document&) = default;
};

namespace utf8 {

inline bool is_scalar_value(char32_t c) {
  return c <= 0x10FFFF && !(c >= 0xD800 && c <= 0xDFFF);
}

/// Decodes well-formed UTF-8 (Unicode Table 3-7). Rejects overlong forms,
/// surrogates, code points above U+10FFFF and truncated sequences.
inline std::u32string decode(std::string_view bytes,
                             const std::string& source = {}) {
  std::u32string out;
  out.reserve(bytes.size());
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::size_t size = bytes.size();
  std::size_t i = 0;
  while (i < size) {
    const unsigned char b0 = p[i];
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    }
    std::size_t len = 0;
    char32_t cp = 0;
    unsigned char lo = 0x80, hi = 0xBF;  // bounds for the second byte
    if (b0 >= 0xC2 && b0 <= 0xDF) {
      len = 2;
      cp = b0 & 0x1F;
    } else if (b0 >= 0xE0 && b0 <= 0xEF) {
      len = 3;
      cp = b0 & 0x0F;
      if (b0 == 0xE0) lo = 0xA0;
      if (b0 == 0xED) hi = 0x9F;
    } else if (b0 >= 0xF0 && b0 <= 0xF4) {
      len = 4;
      cp = b0 & 0x07;
      if (b0 == 0xF0) lo = 0x90;
      if (b0 == 0xF4) hi = 0x8F;
    } else {
      throw DecodeError(i, source);
    }
    if (i + len > size) throw DecodeError(i, source);
    for (std::size_t k = 1; k < len; ++k) {
      const unsigned char b = p[i + k];
      const unsigned char min = (k == 1) ? lo : 0x80;
      const unsigned char max = (k == 1) ? hi : 0xBF;
      if (b < min || b > max) throw DecodeError(i, source);
      cp = (cp << 6) | (b & 0x3F);
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

inline void append_scalar(std::string& out, char32_t c) {
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

inline std::string encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) append_scalar(out, c);
  return out;
}

/// Number of scalar values in well-formed UTF-8 (continuation bytes are not
/// counted).
inline std::size_t scalar_length(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char b : s) {
    if ((b & 0xC0) != 0x80) ++n;
  }
  return n;
}

}  // namespace utf8

inline Document decode_utf8(const RawBytes& raw) {
  return Document{raw.source_id, utf8::decode(raw.bytes, raw.source_id)};
}

inline RawBytes encode_utf8(const Document& doc) {
  return RawBytes{utf8::encode(doc.text), doc.id};
}

/// Reads a whole file. Throws IoError naming the path.
inline RawBytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open for reading");
  std::string bytes{std::istreambuf_iterator<char>(in),
                    std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError(path.string(), "read failed");
  return RawBytes{std::move(bytes), path.string()};
}

/// Strips a leading UTF-8 byte-order mark, if present.
inline void strip_bom(RawBytes& raw) {
  constexpr std::string_view kBom = "\xEF\xBB\xBF";
  if (raw.bytes.starts_with(kBom)) raw.bytes.erase(0, kBom.size());
}

inline Document load_document(const std::filesystem::path& path) {
  RawBytes raw = read_file(path);
  strip_bom(raw);
  return decode_utf8(raw);
}

/// One Document per path, in input order; id is the path as given. A path
/// listed twice is rejected since document ids must be unique.
inline std::vector<Document> load_corpus(
    std::span<const std::filesystem::path> paths) {
  std::vector<Document> docs;
  docs.reserve(paths.size());
  for (const auto& path : paths) {
    for (const auto& seen : docs) {
      if (seen.id == path.string()) {
        throw Error(ErrorKind::kUsage, "duplicate document path " + seen.id);
      }
    }
    docs.push_back(load_document(path));
  }
  return docs;
}

}  // namespace igbotext

#endif  // IGBOTEXT_TEXT_IO_HPP_
