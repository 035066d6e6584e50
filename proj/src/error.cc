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

#include "udtk/error.h"

namespace udtk {

void RethrowWithContext(const Error &e, const std::string &context) {
  const std::string msg = context + e.what();
  const std::string &c = e.category();
  if (c == "parse") throw ParseError(msg);
  if (c == "format") throw FormatError(msg);
  if (c == "argument") throw ArgumentError(msg);
  if (c == "lookup") throw LookupError(msg);
  if (c == "validation") throw ValidationError(msg);
  if (c == "config") throw ConfigError(msg);
  if (c == "numeric") throw NumericError(msg);
  if (c == "training") throw TrainingError(msg);
  if (c == "load") throw LoadError(msg);
  if (c == "incompatible") throw IncompatibleError(msg);
  if (c == "usage") throw UsageError(msg);
  if (c == "io") throw IoError(msg);
  throw Error(c, msg);
}

}  // namespace udtk
