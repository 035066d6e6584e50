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

// Run configuration: one JSON document naming the task, the kernel, the
// data files and the training and evaluation settings.
//
//   {
//     "task": "re",
//     "kernel": { ...KernelSpec... },
//     "paths": {
//       "train": {"conllu": "train.conllu", "constituency": "train.mrg"},
//       "test":  {"conllu": "test.fa.conllu"},
//       "embeddings": {"en": "en.vec", "fa": "fa.vec"},
//       "dictionaries": {"fa-en": "fa-en.tsv"}
//     },
//     "languages": {"train": "en", "test": "fa", "pivot": "en"},
//     "lowercase": true,
//     "svm": {"C": 1.0, "tol": 0.001, "max_passes": 10,
//             "class_weights": {"Other": 0.5}},
//     "output": {"dir": "out", "gram": "gram.tsv", "model": "model.json",
//                "predictions": "predictions.tsv", "report": "report"},
//     "eval": {"exclude_other": true, "merge_directions": false},
//     "seed": 7
//   }
//
// Relative paths are resolved against the directory of the config file.

#ifndef UDTK_CONFIG_H_
#define UDTK_CONFIG_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "udtk/combine.h"
#include "udtk/learn.h"
#include "udtk/metrics.h"

namespace udtk {

enum class Task {
  kPi,    // sentence pairs, binary
  kRe,    // relation instances, one-vs-rest
  kTree,  // single sentences labeled by "# label = <class>"
};

std::string ToString(Task task);
// Throws ConfigError.
Task ParseTask(std::string_view name);

struct SplitPaths {
  // PI: one file holds both sides, two files hold the a and b sides.
  std::vector<std::string> conllu;
  std::optional<std::string> pairs;
  std::optional<std::string> constituency;

  bool empty() const { return conllu.empty(); }
};

struct OutputPaths {
  std::string dir;
  std::string gram = "gram";
  std::string model = "model.json";
  std::string predictions = "predictions.tsv";
  // Stem of the text (.txt) and JSON (.json) reports.
  std::string report = "report";

  // `name` resolved against dir.
  std::string Resolve(const std::string &name) const;
};

struct RunConfig {
  std::string source;  // path of the config file, for messages
  Task task = Task::kTree;
  KernelSpec kernel;
  SplitPaths train;
  SplitPaths test;
  std::map<std::string, std::string> embeddings;
  std::map<std::pair<std::string, std::string>, std::string> dictionaries;
  std::string train_language = "en";
  std::string test_language = "en";
  std::string pivot_language = "en";
  bool lowercase = true;
  SvmOptions svm;
  OutputPaths output;
  EvalOptions eval;
  uint64_t seed = 0;

  const SplitPaths &split(std::string_view name) const;
  const std::string &language(std::string_view split_name) const;
};

// Parses a config document; relative paths resolve against `base_dir`.
// Throws ConfigError naming the offending field. Files are not checked.
RunConfig ParseRunConfig(std::string_view json, const std::string &base_dir,
                         const std::string &source = "<config>");

// Reads and parses a config file, then checks that every referenced input
// file exists.
RunConfig LoadRunConfig(const std::string &path);

// Throws ConfigError when a file named by the config does not exist.
void CheckFilesExist(const RunConfig &config);

// Throws ConfigError when `split` lacks what config.task and config.kernel
// need (CoNLL-U files, a pairs file, constituency trees).
void RequireSplit(const RunConfig &config, std::string_view split);

}  // namespace udtk

#endif  // UDTK_CONFIG_H_
