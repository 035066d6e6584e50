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

// JSON conversions shared by the config, model and manifest readers.
// Internal to the library.

#ifndef UDTK_SRC_JSON_UTIL_H_
#define UDTK_SRC_JSON_UTIL_H_

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "udtk/combine.h"
#include "udtk/features.h"
#include "udtk/kernels.h"

namespace udtk {

using Json = nlohmann::json;

Json ToJson(const TreeKernelParams &p);
Json ToJson(const FeatureConfig &cfg);
// Canonical form: only the fields that matter for spec.type.
Json ToJson(const KernelSpec &spec);
Json ToJson(const EntityVocabulary &vocab);

// `where` prefixes error messages, e.g. "kernel.tree".
TreeKernelParams TreeKernelParamsFromJson(const Json &j,
                                          const std::string &where);
FeatureConfig FeatureConfigFromJson(const Json &j, const std::string &where);
KernelSpec KernelSpecFromJson(const Json &j, const std::string &where);
EntityVocabulary EntityVocabularyFromJson(const Json &j,
                                          const std::string &where);

// Member `key` of an object, or null.
const Json *Field(const Json &j, const char *key);
// "where.key", or "key" at top level.
std::string Path(const std::string &where, const char *key);
// Throws ConfigError unless `j` is an array of strings.
std::vector<std::string> StringList(const Json &j, const std::string &where);

// Throws ConfigError naming the first key of `j` not in `allowed`.
void CheckKeys(const Json &j, const std::string &where,
               std::initializer_list<std::string_view> allowed);

// Typed field access; throw ConfigError naming `where.key` on type errors.
bool GetBool(const Json &j, const std::string &where, const char *key,
             bool fallback);
double GetDouble(const Json &j, const std::string &where, const char *key,
                 double fallback);
int GetInt(const Json &j, const std::string &where, const char *key,
           int fallback);
std::string GetString(const Json &j, const std::string &where, const char *key,
                      const std::string &fallback);

// Parses JSON text, rethrowing parse failures as `Err`.
template <typename Err>
Json ParseJson(std::string_view text, const std::string &source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw Err(source + ": invalid JSON: " + e.what());
  }
}

}  // namespace udtk

#endif  // UDTK_SRC_JSON_UTIL_H_
