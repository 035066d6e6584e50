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

#include <string>

#include "doctest.h"
#include "support.h"
#include "udtk/config.h"
#include "udtk/error.h"
#include "udtk/util.h"

namespace udtk {
namespace {

constexpr const char *kRe = R"({
  "task": "re",
  "kernel": {"type": "composite", "composite": {"variant": "CK2"}},
  "paths": {"train": {"conllu": "train.conllu", "constituency": "train.mrg"},
            "test": {"conllu": "/abs/test.conllu"},
            "embeddings": {"en": "en.vec"},
            "dictionaries": {"fa-en": "fa-en.dict"}},
  "languages": {"train": "en", "test": "fa"},
  "svm": {"C": 2.0, "class_weights": {"Other": 0.5}},
  "seed": 7
})";

std::string ErrorOf(const std::string &json) {
  try {
    ParseRunConfig(json, "/base");
  } catch (const ConfigError &e) {
    return e.what();
  }
  return "";
}

TEST_SUITE("config") {

TEST_CASE("a full relation config") {
  RunConfig c = ParseRunConfig(kRe, "/base", "run.json");
  CHECK(c.task == Task::kRe);
  CHECK(c.kernel.composite.variant == CompositeVariant::kCk2);
  CHECK(c.train.conllu == std::vector<std::string>{"/base/train.conllu"});
  CHECK(*c.train.constituency == "/base/train.mrg");
  CHECK(c.test.conllu == std::vector<std::string>{"/abs/test.conllu"});
  CHECK(c.embeddings.at("en") == "/base/en.vec");
  CHECK(c.dictionaries.at({"fa", "en"}) == "/base/fa-en.dict");
  CHECK(c.language("test") == "fa");
  CHECK(c.pivot_language == "en");
  CHECK(c.svm.C == 2.0);
  CHECK(c.svm.class_weights.at("Other") == 0.5);
  CHECK(c.eval.exclude_other);
  CHECK(c.seed == 7);
  CHECK(c.output.Resolve("model.json") == "/base/model.json");
  CHECK_NOTHROW(RequireSplit(c, "train"));
  CHECK_THROWS_AS(c.split("dev"), UsageError);
}

TEST_CASE("config errors name the field") {
  CHECK(ErrorOf(R"({"task": "re", "kernel": {}, "colour": 1})")
            .find("colour") != std::string::npos);
  CHECK(ErrorOf(R"({"task": "pi", "kernel": {"type": "tree"}})")
            .find("kernel.type") != std::string::npos);
  CHECK(ErrorOf(R"({"task": "tree", "kernel": {"type": "sm_tk"}})")
            .find("kernel.type") != std::string::npos);
  CHECK(ErrorOf(R"({"task": "ner", "kernel": {}})").find("task") !=
        std::string::npos);
  CHECK(ErrorOf(R"({"kernel": {}})").find("task") != std::string::npos);
  CHECK(ErrorOf(R"({"task": "tree", "kernel": {}, "svm": {"C": 0}})")
            .find("svm.C") != std::string::npos);
  CHECK(ErrorOf(R"({"task": "tree", "kernel": {}, "svm": {"tol": -1}})")
            .find("svm.tol") != std::string::npos);
  CHECK(ErrorOf(R"({"task": "tree", "kernel": {}, "seed": -3})")
            .find("seed") != std::string::npos);
  CHECK(ErrorOf(R"({"task": "tree", "kernel": {},
                    "paths": {"dictionaries": {"faen": "x"}}})")
            .find("fa-en") != std::string::npos);
  CHECK(ErrorOf("[1, 2").size() > 0);
}

TEST_CASE("split requirements and files") {
  RunConfig pi = ParseRunConfig(
      R"({"task": "pi", "kernel": {"type": "sm_tk"},
          "paths": {"train": {"conllu": "a.conllu"}}})",
      "/base");
  CHECK_THROWS_WITH_AS(RequireSplit(pi, "train"),
                       doctest::Contains("pairs"), ConfigError);
  CHECK_THROWS_AS(RequireSplit(pi, "test"), ConfigError);

  RunConfig ck1 = ParseRunConfig(
      R"({"task": "re",
          "kernel": {"type": "composite", "composite": {"variant": "CK1"}},
          "paths": {"train": {"conllu": "a.conllu"}}})",
      "/base");
  CHECK_THROWS_WITH_AS(RequireSplit(ck1, "train"),
                       doctest::Contains("constituency"), ConfigError);

  testing::TempDir dir("config");
  WriteFile(dir.File("train.conllu"), "");
  WriteFile(dir.File("run.json"),
            R"({"task": "tree", "kernel": {},
                "paths": {"train": {"conllu": "train.conllu"},
                          "embeddings": {"en": "en.vec"}}})");
  CHECK_THROWS_WITH_AS(LoadRunConfig(dir.File("run.json")),
                       doctest::Contains("embeddings"), ConfigError);
  WriteFile(dir.File("en.vec"), "a 1\n");
  RunConfig ok = LoadRunConfig(dir.File("run.json"));
  CHECK(ok.train.conllu[0] == dir.File("train.conllu"));
  CHECK_THROWS_AS(LoadRunConfig(dir.File("absent.json")), ConfigError);
}

}  // TEST_SUITE

}  // namespace
}  // namespace udtk
