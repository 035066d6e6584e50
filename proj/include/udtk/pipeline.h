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

// Dataset orchestration: turns the files named by a RunConfig into kernel
// inputs, loading embeddings and dictionaries only when a kernel needs
// them.

#ifndef UDTK_PIPELINE_H_
#define UDTK_PIPELINE_H_

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "udtk/combine.h"
#include "udtk/config.h"
#include "udtk/features.h"
#include "udtk/learn.h"
#include "udtk/lexsim.h"

namespace udtk {

// How word vectors are obtained under `spec`. SPTK similarity modes decide
// it when present; otherwise spec.features.embedding_mode does. Throws
// ConfigError when the two disagree.
EmbedderOptions EmbedderOptionsForSpec(const KernelSpec &spec,
                                       const std::string &pivot_language,
                                       bool lowercase);

// True when building inputs or compiling trees under `spec` looks up word
// vectors.
bool UsesWordVectors(const KernelSpec &spec);

// Kernel-facing form of task instances.
KernelInput MakeTreeInput(const DepTree &tree, const std::string &language,
                          const KernelSpec &spec);
KernelInput MakePairInput(const PIInstance &inst, const KernelSpec &spec);
// Composite specs need `embedder` for the feature vector and `vocab` for
// entity features.
KernelInput MakeRelationInput(const REInstance &inst, const KernelSpec &spec,
                              const WordEmbedder *embedder,
                              const EntityVocabulary *vocab);

struct TaskData {
  std::vector<KernelInput> inputs;
  // Gold labels aligned with inputs; empty strings when unlabeled.
  std::vector<std::string> labels;
};

class Pipeline {
 public:
  explicit Pipeline(RunConfig config);

  const RunConfig &config() const { return config_; }

  // Reads one split ("train" or "test") into kernel inputs under `spec`.
  // Entity features use *vocab; when *vocab is empty it is built from this
  // split first.
  TaskData Load(std::string_view split, const KernelSpec &spec,
                std::optional<EntityVocabulary> *vocab = nullptr);

  // Compiles inputs with the word vectors `spec` needs and computes their
  // self-kernel values.
  std::vector<PreparedInstance> Prepare(const KernelSpec &spec,
                                        const std::vector<KernelInput> &inputs,
                                        int threads);

  // The embedder for `spec`, with the stores and dictionaries for
  // `languages` loaded. Throws ConfigError ("embeddings: ...") when the
  // config names no file for a needed language.
  const WordEmbedder &Embedder(const KernelSpec &spec,
                               const std::set<std::string> &languages);

  const LexicalResources &resources() const { return resources_; }

 private:
  void LoadStore(const std::string &language);
  void LoadDictionary(const std::string &source, const std::string &target);

  RunConfig config_;
  LexicalResources resources_;
  std::unique_ptr<WordEmbedder> embedder_;
};

}  // namespace udtk

#endif  // UDTK_PIPELINE_H_
