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

#include "udtk/pipeline.h"

#include <utility>

#include "udtk/dataset.h"
#include "udtk/error.h"
#include "udtk/treebank.h"
#include "udtk/treeform.h"
#include "udtk/util.h"

namespace udtk {

namespace {

const TreeKernelParams &WordTreeParams(const KernelSpec &spec) {
  return spec.type == KernelType::kComposite ? spec.composite.pt : spec.tree;
}

std::vector<DepTree> ReadConllu(const std::string &path) {
  return ParseConllu(ReadFile(path), path);
}

}  // namespace

EmbedderOptions EmbedderOptionsForSpec(const KernelSpec &spec,
                                       const std::string &pivot_language,
                                       bool lowercase) {
  const TreeKernelParams &tp = WordTreeParams(spec);
  EmbedderOptions from_features;
  from_features.mode = spec.features.embedding_mode;
  from_features.pivot_language = pivot_language;
  from_features.lowercase = lowercase;
  if (!spec.NeedsEmbeddings()) return from_features;
  EmbedderOptions from_sigma =
      EmbedderOptionsFor(*tp.sigma, pivot_language, lowercase);
  if (spec.type == KernelType::kComposite &&
      from_sigma.mode != from_features.mode) {
    throw ConfigError(
        "kernel: the SPTK similarity mode and features.embedding_mode ask "
        "for different word-vector spaces");
  }
  return from_sigma;
}

bool UsesWordVectors(const KernelSpec &spec) {
  return spec.NeedsEmbeddings() || spec.type == KernelType::kComposite;
}

KernelInput MakeTreeInput(const DepTree &tree, const std::string &language,
                          const KernelSpec &spec) {
  KernelInput in;
  in.id = tree.sent_id();
  in.trees.push_back(ToLct(tree, {spec.features.use_lemma}));
  in.languages.push_back(language);
  return in;
}

KernelInput MakePairInput(const PIInstance &inst, const KernelSpec &spec) {
  KernelInput in;
  in.id = inst.id;
  in.trees.push_back(ToLct(inst.tree_a, {spec.features.use_lemma}));
  in.trees.push_back(ToLct(inst.tree_b, {spec.features.use_lemma}));
  in.languages = {inst.language_a, inst.language_b};
  return in;
}

KernelInput MakeRelationInput(const REInstance &inst, const KernelSpec &spec,
                              const WordEmbedder *embedder,
                              const EntityVocabulary *vocab) {
  KernelInput in = MakeTreeInput(inst.dep_tree, inst.language, spec);
  in.id = inst.id;
  if (spec.type != KernelType::kComposite) return in;
  const CompositeParams &cp = spec.composite;
  if (cp.UsesConstituency()) {
    if (!inst.const_tree) {
      throw ConfigError("instance '" + inst.id + "': variant " +
                        ToString(cp.variant) + " needs a constituency tree");
    }
    in.pet = ToLabeledTree(
        ExtractPet(*inst.const_tree, inst.e1_span, inst.e2_span));
  }
  if (embedder == nullptr) {
    throw ConfigError("embeddings: composite kernels need word vectors");
  }
  switch (cp.feature_mode) {
    case FeatureMode::kVo:
      in.features = BuildVo(inst, *embedder, spec.features);
      break;
    case FeatureMode::kVud:
      in.features = BuildVud(inst, *embedder, spec.features);
      break;
    case FeatureMode::kEntity:
      if (vocab == nullptr) {
        throw ConfigError("entity features need an entity vocabulary");
      }
      in.features = BuildEntityFeatures(inst, *vocab, *embedder, spec.features);
      break;
  }
  return in;
}

Pipeline::Pipeline(RunConfig config) : config_(std::move(config)) {}

void Pipeline::LoadStore(const std::string &language) {
  if (resources_.stores.count(language)) return;
  auto it = config_.embeddings.find(language);
  if (it == config_.embeddings.end()) {
    throw ConfigError("embeddings: no file configured for language '" +
                      language + "' (set paths.embeddings." + language + ")");
  }
  resources_.stores.emplace(
      language, udtk::LoadEmbeddings(it->second, language, config_.lowercase));
}

void Pipeline::LoadDictionary(const std::string &source,
                              const std::string &target) {
  auto key = std::make_pair(source, target);
  if (resources_.dictionaries.count(key)) return;
  auto it = config_.dictionaries.find(key);
  if (it == config_.dictionaries.end()) {
    throw ConfigError("dictionaries: no file configured for '" + source +
                      "-" + target + "' (set paths.dictionaries." + source +
                      "-" + target + ")");
  }
  resources_.dictionaries.emplace(
      key, udtk::LoadDictionary(it->second, source, target, config_.lowercase));
}

const WordEmbedder &Pipeline::Embedder(const KernelSpec &spec,
                                       const std::set<std::string> &languages) {
  EmbedderOptions options = EmbedderOptionsForSpec(
      spec, config_.pivot_language, config_.lowercase);
  for (const std::string &lang : languages) {
    if (options.mode == EmbeddingMode::kPivotTranslate &&
        lang != options.pivot_language) {
      LoadStore(options.pivot_language);
      LoadDictionary(lang, options.pivot_language);
    } else {
      LoadStore(options.mode == EmbeddingMode::kPivotTranslate
                    ? options.pivot_language
                    : lang);
    }
  }
  if (!embedder_ || embedder_->options().mode != options.mode ||
      embedder_->options().pivot_language != options.pivot_language ||
      embedder_->options().lowercase != options.lowercase) {
    embedder_ = std::make_unique<WordEmbedder>(&resources_, options);
  }
  return *embedder_;
}

TaskData Pipeline::Load(std::string_view split, const KernelSpec &spec,
                        std::optional<EntityVocabulary> *vocab) {
  RequireSplit(config_, split);
  const SplitPaths &paths = config_.split(split);
  const std::string &language = config_.language(split);
  TaskData data;
  switch (config_.task) {
    case Task::kTree: {
      for (const DepTree &t : ReadConllu(paths.conllu[0])) {
        RequireValid(t);
        data.inputs.push_back(MakeTreeInput(t, language, spec));
        data.labels.push_back(t.Metadata("label").value_or(""));
      }
      break;
    }
    case Task::kPi: {
      std::vector<DepTree> a = ReadConllu(paths.conllu[0]);
      std::vector<DepTree> b =
          paths.conllu.size() > 1 ? ReadConllu(paths.conllu[1]) : a;
      std::vector<PIInstance> pairs =
          ParsePiDataset(ReadFile(*paths.pairs), a, b, language, *paths.pairs);
      for (const PIInstance &p : pairs) {
        data.inputs.push_back(MakePairInput(p, spec));
        data.labels.push_back(p.label ? kPositiveLabel : kNegativeLabel);
      }
      break;
    }
    case Task::kRe: {
      // Constituency files are opened only when the kernel uses them.
      std::optional<std::string> constituency;
      if (spec.type == KernelType::kComposite &&
          spec.composite.UsesConstituency()) {
        constituency = paths.constituency;
      }
      std::vector<REInstance> insts =
          LoadReDataset(paths.conllu[0], constituency, language);
      const WordEmbedder *embedder = nullptr;
      if (UsesWordVectors(spec)) embedder = &Embedder(spec, {language});
      std::optional<EntityVocabulary> local;
      if (vocab == nullptr) vocab = &local;
      if (spec.type == KernelType::kComposite &&
          spec.composite.feature_mode == FeatureMode::kEntity && !*vocab) {
        *vocab = EntityVocabulary::Build(insts);
      }
      for (const REInstance &inst : insts) {
        data.inputs.push_back(MakeRelationInput(
            inst, spec, embedder, *vocab ? &**vocab : nullptr));
        data.labels.push_back(inst.label);
      }
      break;
    }
  }
  if (data.inputs.empty()) {
    throw ConfigError("paths." + std::string(split) + ": no instances");
  }
  return data;
}

std::vector<PreparedInstance> Pipeline::Prepare(
    const KernelSpec &spec, const std::vector<KernelInput> &inputs,
    int threads) {
  std::optional<NodeSimilarity> similarity;
  if (spec.NeedsEmbeddings()) {
    std::set<std::string> languages;
    for (const KernelInput &in : inputs) {
      languages.insert(in.languages.begin(), in.languages.end());
    }
    similarity.emplace(*WordTreeParams(spec).sigma,
                       &Embedder(spec, languages));
  }
  std::vector<PreparedInstance> out;
  out.reserve(inputs.size());
  for (const KernelInput &in : inputs) {
    out.push_back(Compile(in, similarity ? &*similarity : nullptr));
  }
  ComputeSelfKernels(spec, &out, threads);
  return out;
}

}  // namespace udtk
