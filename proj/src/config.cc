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

#include "udtk/config.h"

#include <filesystem>

#include "json_util.h"
#include "udtk/dataset.h"
#include "udtk/error.h"
#include "udtk/util.h"

namespace udtk {

namespace fs = std::filesystem;

namespace {

std::string Resolve(const std::string &base_dir, const std::string &path) {
  if (path.empty() || base_dir.empty() || fs::path(path).is_absolute()) {
    return path;
  }
  return (fs::path(base_dir) / path).lexically_normal().string();
}

SplitPaths ParseSplit(const Json &j, const std::string &where,
                      const std::string &base_dir) {
  CheckKeys(j, where, {"conllu", "pairs", "constituency"});
  SplitPaths split;
  if (const Json *c = Field(j, "conllu")) {
    std::vector<std::string> files;
    if (c->is_string()) {
      files.push_back(c->get<std::string>());
    } else {
      files = StringList(*c, Path(where, "conllu"));
    }
    if (files.empty() || files.size() > 2) {
      throw ConfigError(Path(where, "conllu") + ": expected one or two files");
    }
    for (const std::string &f : files) {
      split.conllu.push_back(Resolve(base_dir, f));
    }
  }
  if (Field(j, "pairs")) {
    split.pairs = Resolve(base_dir, GetString(j, where, "pairs", ""));
  }
  if (Field(j, "constituency")) {
    split.constituency =
        Resolve(base_dir, GetString(j, where, "constituency", ""));
  }
  return split;
}

void CheckKindFits(const RunConfig &cfg) {
  const KernelType type = cfg.kernel.type;
  bool ok = false;
  switch (cfg.task) {
    case Task::kPi:
      ok = type == KernelType::kSmTk;
      break;
    case Task::kRe:
      ok = type == KernelType::kComposite || type == KernelType::kTree;
      break;
    case Task::kTree:
      ok = type == KernelType::kTree;
      break;
  }
  if (!ok) {
    throw ConfigError("kernel.type: '" + ToString(type) +
                      "' cannot be used for task '" + ToString(cfg.task) +
                      "'");
  }
}

void CheckFile(const std::string &path, const std::string &field) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw ConfigError(field + ": file not found: " + path);
  }
}

}  // namespace

std::string ToString(Task task) {
  switch (task) {
    case Task::kPi:
      return "pi";
    case Task::kRe:
      return "re";
    case Task::kTree:
      return "tree";
  }
  return "?";
}

Task ParseTask(std::string_view name) {
  if (name == "pi") return Task::kPi;
  if (name == "re") return Task::kRe;
  if (name == "tree") return Task::kTree;
  throw ConfigError("task: unknown task '" + std::string(name) +
                    "' (expected pi, re or tree)");
}

std::string OutputPaths::Resolve(const std::string &name) const {
  return udtk::Resolve(dir, name);
}

const SplitPaths &RunConfig::split(std::string_view name) const {
  if (name == "train") return train;
  if (name == "test") return test;
  throw UsageError("unknown split '" + std::string(name) +
                   "' (expected train or test)");
}

const std::string &RunConfig::language(std::string_view split_name) const {
  if (split_name == "train") return train_language;
  if (split_name == "test") return test_language;
  throw UsageError("unknown split '" + std::string(split_name) +
                   "' (expected train or test)");
}

RunConfig ParseRunConfig(std::string_view json, const std::string &base_dir,
                         const std::string &source) {
  Json j = ParseJson<ConfigError>(json, source);
  CheckKeys(j, "", {"task", "kernel", "paths", "languages", "lowercase", "svm",
                    "output", "eval", "seed"});
  RunConfig cfg;
  cfg.source = source;
  if (!Field(j, "task")) throw ConfigError("task: missing");
  cfg.task = ParseTask(GetString(j, "", "task", ""));
  const Json *kernel = Field(j, "kernel");
  if (kernel == nullptr) throw ConfigError("kernel: missing");
  cfg.kernel = KernelSpecFromJson(*kernel, "kernel");
  CheckKindFits(cfg);

  if (const Json *p = Field(j, "paths")) {
    CheckKeys(*p, "paths", {"train", "test", "embeddings", "dictionaries"});
    if (const Json *t = Field(*p, "train")) {
      cfg.train = ParseSplit(*t, "paths.train", base_dir);
    }
    if (const Json *t = Field(*p, "test")) {
      cfg.test = ParseSplit(*t, "paths.test", base_dir);
    }
    if (const Json *e = Field(*p, "embeddings")) {
      if (!e->is_object()) {
        throw ConfigError("paths.embeddings must map languages to files");
      }
      for (auto it = e->begin(); it != e->end(); ++it) {
        std::string lang = it.key();
        cfg.embeddings[lang] = Resolve(
            base_dir, GetString(*e, "paths.embeddings", lang.c_str(), ""));
      }
    }
    if (const Json *d = Field(*p, "dictionaries")) {
      if (!d->is_object()) {
        throw ConfigError("paths.dictionaries must map \"src-tgt\" to files");
      }
      for (auto it = d->begin(); it != d->end(); ++it) {
        std::string key = it.key();
        std::vector<std::string_view> parts = Split(key, '-');
        if (parts.size() != 2 || parts[0].empty() || parts[1].empty()) {
          throw ConfigError("paths.dictionaries." + key +
                            ": key must look like \"fa-en\"");
        }
        cfg.dictionaries[{std::string(parts[0]), std::string(parts[1])}] =
            Resolve(base_dir,
                    GetString(*d, "paths.dictionaries", key.c_str(), ""));
      }
    }
  }

  if (const Json *l = Field(j, "languages")) {
    CheckKeys(*l, "languages", {"train", "test", "pivot"});
    cfg.train_language = GetString(*l, "languages", "train", "en");
    cfg.test_language = GetString(*l, "languages", "test", cfg.train_language);
    cfg.pivot_language =
        GetString(*l, "languages", "pivot", cfg.train_language);
  }
  cfg.lowercase = GetBool(j, "", "lowercase", true);

  if (const Json *s = Field(j, "svm")) {
    CheckKeys(*s, "svm", {"C", "tol", "max_passes", "class_weights"});
    cfg.svm.C = GetDouble(*s, "svm", "C", cfg.svm.C);
    cfg.svm.tol = GetDouble(*s, "svm", "tol", cfg.svm.tol);
    cfg.svm.max_passes = GetInt(*s, "svm", "max_passes", cfg.svm.max_passes);
    if (const Json *w = Field(*s, "class_weights")) {
      if (!w->is_object()) {
        throw ConfigError("svm.class_weights must map labels to numbers");
      }
      for (auto it = w->begin(); it != w->end(); ++it) {
        double v = GetDouble(*w, "svm.class_weights", it.key().c_str(), 1);
        if (!(v > 0)) {
          throw ConfigError("svm.class_weights." + it.key() +
                            " must be positive");
        }
        cfg.svm.class_weights[it.key()] = v;
      }
    }
    if (!(cfg.svm.C > 0)) throw ConfigError("svm.C must be positive");
    if (!(cfg.svm.tol > 0)) throw ConfigError("svm.tol must be positive");
    if (cfg.svm.max_passes < 1) throw ConfigError("svm.max_passes must be >= 1");
  }

  cfg.output.dir = base_dir;
  if (const Json *o = Field(j, "output")) {
    CheckKeys(*o, "output", {"dir", "gram", "model", "predictions", "report"});
    cfg.output.dir = Resolve(base_dir, GetString(*o, "output", "dir", "."));
    cfg.output.gram = GetString(*o, "output", "gram", cfg.output.gram);
    cfg.output.model = GetString(*o, "output", "model", cfg.output.model);
    cfg.output.predictions =
        GetString(*o, "output", "predictions", cfg.output.predictions);
    cfg.output.report = GetString(*o, "output", "report", cfg.output.report);
  }

  cfg.eval.exclude_other = cfg.task == Task::kRe;
  if (cfg.task == Task::kPi) cfg.eval.positive_label = kPositiveLabel;
  if (const Json *e = Field(j, "eval")) {
    CheckKeys(*e, "eval", {"exclude_other", "merge_directions", "other_label",
                           "positive_label"});
    cfg.eval.exclude_other =
        GetBool(*e, "eval", "exclude_other", cfg.eval.exclude_other);
    cfg.eval.merge_directions =
        GetBool(*e, "eval", "merge_directions", cfg.eval.merge_directions);
    cfg.eval.other_label =
        GetString(*e, "eval", "other_label", cfg.eval.other_label);
    if (Field(*e, "positive_label")) {
      cfg.eval.positive_label = GetString(*e, "eval", "positive_label", "");
    }
  }

  if (const Json *s = Field(j, "seed")) {
    if (!s->is_number_unsigned()) {
      throw ConfigError("seed must be a non-negative integer");
    }
    cfg.seed = s->get<uint64_t>();
  }
  return cfg;
}

RunConfig LoadRunConfig(const std::string &path) {
  std::string text;
  try {
    text = ReadFile(path);
  } catch (const IoError &e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  std::string base = fs::path(path).parent_path().string();
  RunConfig cfg = ParseRunConfig(text, base, path);
  CheckFilesExist(cfg);
  return cfg;
}

void CheckFilesExist(const RunConfig &config) {
  for (const char *name : {"train", "test"}) {
    const SplitPaths &s = config.split(name);
    const std::string where = std::string("paths.") + name;
    for (const std::string &f : s.conllu) CheckFile(f, where + ".conllu");
    if (s.pairs) CheckFile(*s.pairs, where + ".pairs");
    if (s.constituency) CheckFile(*s.constituency, where + ".constituency");
  }
  for (const auto &[lang, f] : config.embeddings) {
    CheckFile(f, "embeddings: paths.embeddings." + lang);
  }
  for (const auto &[langs, f] : config.dictionaries) {
    CheckFile(f, "paths.dictionaries." + langs.first + "-" + langs.second);
  }
}

void RequireSplit(const RunConfig &config, std::string_view split) {
  const SplitPaths &s = config.split(split);
  const std::string where = "paths." + std::string(split);
  if (s.conllu.empty()) {
    throw ConfigError(where + ".conllu: required for this command");
  }
  if (config.task == Task::kPi && !s.pairs) {
    throw ConfigError(where + ".pairs: required for task 'pi'");
  }
  if (config.task != Task::kPi && s.conllu.size() != 1) {
    throw ConfigError(where + ".conllu: task '" + ToString(config.task) +
                      "' takes exactly one file");
  }
  if (config.task == Task::kRe &&
      config.kernel.type == KernelType::kComposite &&
      config.kernel.composite.UsesConstituency() && !s.constituency) {
    throw ConfigError(where + ".constituency: variant " +
                      ToString(config.kernel.composite.variant) +
                      " needs constituency trees");
  }
}

}  // namespace udtk
