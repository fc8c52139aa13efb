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

#ifndef IGBOTEXT_ERRORS_HPP_
#define IGBOTEXT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace igbotext {

/// Broad error families. The CLI maps each family to an exit code.
enum class ErrorKind {
  kUsage,      // bad arguments, invalid n-gram order
  kDecode,     // malformed UTF-8
  kIo,         // unreadable / unwritable file
  kData,       // malformed or invariant-violating data file
  kModel,      // probability query the model cannot answer
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed UTF-8. `offset` is the index of the first byte of the first
/// invalid sequence.
class DecodeError : public Error {
 public:
  DecodeError(std::size_t offset, std::string source = {})
      : Error(ErrorKind::kDecode, describe(offset, source)),
        offset_(offset),
        source_(std::move(source)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& source() const noexcept { return source_; }

 private:
  static std::string describe(std::size_t offset, const std::string& source) {
    std::string msg = "invalid UTF-8 at byte offset " + std::to_string(offset);
    if (!source.empty()) msg += " in " + source;
    return msg;
  }

  std::size_t offset_;
  std::string source_;
};

class IoError : public Error {
 public:
  IoError(std::string path, const std::string& detail)
      : Error(ErrorKind::kIo, path + ": " + detail), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// A data-file line that cannot be parsed. `line` is 1-based.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& detail)
      : Error(ErrorKind::kData,
              "line " + std::to_string(line) + ": " + detail),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A parsed entry that breaks a domain rule (e.g. a Coordinate compound
/// without an interior "na").
class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string& what)
      : Error(ErrorKind::kData, what) {}
};

class InvalidOrder : public Error {
 public:
  explicit InvalidOrder(int n)
      : Error(ErrorKind::kUsage,
              "n-gram order must be in 1..3, got " + std::to_string(n)) {}
};

class OrderMismatch : public Error {
 public:
  OrderMismatch(std::size_t a, std::size_t b)
      : Error(ErrorKind::kUsage, "n-gram order mismatch: " +
                                     std::to_string(a) + " vs " +
                                     std::to_string(b)) {}
};

class EmptyModel : public Error {
 public:
  EmptyModel() : Error(ErrorKind::kModel, "language model has no unigrams") {}
};

class UnknownContext : public Error {
 public:
  explicit UnknownContext(const std::string& context)
      : Error(ErrorKind::kModel, "unseen context: \"" + context + "\"") {}
};

/// Wraps an error raised inside a pipeline stage and names the stage.
class StageError : public Error {
 public:
  StageError(std::string stage, const Error& cause)
      : Error(cause.kind(), stage + ": " + cause.what()),
        stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace igbotext

#endif  // IGBOTEXT_ERRORS_HPP_
