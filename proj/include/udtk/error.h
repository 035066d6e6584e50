// Copyright 2026 The UDTK Authors. All Rights Reserved.
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

#ifndef UDTK_ERROR_H_
#define UDTK_ERROR_H_

#include <stdexcept>
#include <string>

namespace udtk {

// Base class of every error raised by the toolkit. The category is a short
// stable tag ("parse", "config", ...) that the command line prints in front
// of the message.
class Error : public std::runtime_error {
 public:
  Error(std::string category, const std::string &message)
      : std::runtime_error(message), category_(std::move(category)) {}

  const std::string &category() const { return category_; }

 private:
  std::string category_;
};

#define UDTK_DEFINE_ERROR(Name, tag)                                  \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string &message) : Error(tag, message) {} \
  }

// Malformed input text (CoNLL-U, bracketed trees, ...).
UDTK_DEFINE_ERROR(ParseError, "parse");
// Malformed resource file (embeddings, dictionaries, Gram artifacts).
UDTK_DEFINE_ERROR(FormatError, "format");
// Invalid argument to an operation.
UDTK_DEFINE_ERROR(ArgumentError, "argument");
// Unknown token id, sentence id or similar key.
UDTK_DEFINE_ERROR(LookupError, "lookup");
// Structural violation of a tree invariant.
UDTK_DEFINE_ERROR(ValidationError, "validation");
// Missing or inconsistent configuration.
UDTK_DEFINE_ERROR(ConfigError, "config");
// Non-finite value in a kernel or solver computation.
UDTK_DEFINE_ERROR(NumericError, "numeric");
// Training cannot proceed on the given data.
UDTK_DEFINE_ERROR(TrainingError, "training");
// Model file cannot be loaded.
UDTK_DEFINE_ERROR(LoadError, "load");
// Model and evaluation resources do not match.
UDTK_DEFINE_ERROR(IncompatibleError, "incompatible");
// Bad command line usage.
UDTK_DEFINE_ERROR(UsageError, "usage");
// File system failure.
UDTK_DEFINE_ERROR(IoError, "io");

#undef UDTK_DEFINE_ERROR

// Throws an error of the same category as `e` with `context` prepended to
// its message.
[[noreturn]] void RethrowWithContext(const Error &e, const std::string &context);

}  // namespace udtk

#endif  // UDTK_ERROR_H_
