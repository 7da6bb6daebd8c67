// Copyright 2026 The ProFL Authors
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

#ifndef PROFL_ERROR_H_
#define PROFL_ERROR_H_

#include <stdexcept>
#include <string>

namespace profl {

// Base of every error raised by the library. `code()` is a short stable tag
// used by the command-line front end in `ERROR <code>: <detail>` records.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(detail), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& detail) : Error("parse", detail) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& detail)
      : Error("validation", detail) {}
};

class ConsistencyError : public Error {
 public:
  explicit ConsistencyError(const std::string& detail)
      : Error("consistency", detail) {}
};

// Lookup of an identifier that the dataset does not contain.
class UnknownIdError : public Error {
 public:
  UnknownIdError(const std::string& kind, const std::string& id)
      : Error("unknown-" + kind, kind + " '" + id + "' not found") {}
};

class NotFullMatrixError : public Error {
 public:
  explicit NotFullMatrixError(const std::string& detail)
      : Error("not-full-matrix", detail) {}
};

class MissingElementError : public Error {
 public:
  explicit MissingElementError(const std::string& element)
      : Error("missing-element",
              "buggy element '" + element + "' is absent from the ranking") {}
};

class EmptyInputError : public Error {
 public:
  explicit EmptyInputError(const std::string& detail)
      : Error("empty-input", detail) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& detail) : Error("config", detail) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& detail) : Error("io", detail) {}
};

}  // namespace profl

#endif  // PROFL_ERROR_H_
