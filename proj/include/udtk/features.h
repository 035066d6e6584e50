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

// Task instances and the dense feature vectors of relation instances:
// surface-window vectors (V_o), dependency-based vectors (V_ud) and entity
// feature vectors.

#ifndef UDTK_FEATURES_H_
#define UDTK_FEATURES_H_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "udtk/lexsim.h"
#include "udtk/treebank.h"
#include "udtk/treeform.h"
#include "udtk/trees.h"

namespace udtk {

enum class EntityEmbedding {
  kSpanMean,  // mean over the entity's marked tokens
  kHead,      // head token only
};

struct FeatureConfig {
  int window = 3;
  bool exclude_punct = true;
  // Lemmas (form when absent) label LCT nodes and key embedding lookups.
  bool use_lemma = true;
  MweConfig mwe;
  EntityEmbedding entity_embedding = EntityEmbedding::kSpanMean;
  // How word vectors of non-pivot languages are obtained.
  EmbeddingMode embedding_mode = EmbeddingMode::kPerLanguage;

  // Throws ConfigError.
  void Validate() const;

  bool operator==(const FeatureConfig &other) const = default;
};

struct REInstance {
  std::string id;
  DepTree dep_tree;
  std::optional<ConstTree> const_tree;
  int e1 = 0;
  int e2 = 0;
  Span e1_span{0, 0};
  Span e2_span{0, 0};
  std::string label;
  std::string language;
};

struct PIInstance {
  std::string id;
  DepTree tree_a;
  DepTree tree_b;
  bool label = false;
  std::string language_a;
  std::string language_b;
};

struct EntityLocation {
  int head = 0;
  Span span{0, 0};
};

// Finds the tokens marked Entity=<name> in MISC. The marked tokens must be
// contiguous; the head is the marked token whose head lies outside the
// span. Throws ValidationError when absent or malformed.
EntityLocation LocateEntity(const DepTree &tree, const std::string &name);

// Sets e1/e2 and their spans from the MISC marks of inst->dep_tree.
void LocateEntities(REInstance *inst);

// [e1; e2; between; before e1; after e2], each block of dimension d.
std::vector<double> BuildVo(const REInstance &inst,
                            const WordEmbedder &embedder,
                            const FeatureConfig &cfg);

// [e1; e2; shortest path interior; dependents of e1; dependents of e2]
// computed on the multiword-collapsed tree.
std::vector<double> BuildVud(const REInstance &inst,
                             const WordEmbedder &embedder,
                             const FeatureConfig &cfg);

// Category inventories for the entity feature vector. Every list holds
// "none", which also absorbs unseen values.
struct EntityVocabulary {
  std::vector<std::string> entity_types;
  std::vector<std::string> mention_types;
  std::vector<std::string> upos;

  static EntityVocabulary Build(const std::vector<REInstance> &training);

  bool operator==(const EntityVocabulary &other) const = default;
};

// Per entity: [one-hot EntityType; one-hot MentionType; head word vector;
// one-hot UPOS], e1 block then e2 block.
std::vector<double> BuildEntityFeatures(const REInstance &inst,
                                        const EntityVocabulary &vocab,
                                        const WordEmbedder &embedder,
                                        const FeatureConfig &cfg);

}  // namespace udtk

#endif  // UDTK_FEATURES_H_
