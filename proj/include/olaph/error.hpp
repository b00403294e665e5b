// Copyright 2026 The olaph Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace olaph {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. line() is 1-based, 0 when the error is not tied to a
// particular line.
class FormatError : public Error {
 public:
  FormatError(const std::string& source, std::size_t line,
              const std::string& what)
      : Error(source + (line ? ":" + std::to_string(line) : std::string()) +
              ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Invalid UTF-8. offset() is the byte offset of the first bad byte.
class EncodingError : public Error {
 public:
  explicit EncodingError(std::size_t offset)
      : Error("invalid UTF-8 at byte offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A required resource (lexicon, stats, profile) is absent.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace olaph
