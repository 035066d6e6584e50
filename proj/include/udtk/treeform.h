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

// Tree transforms feeding the kernels: lexical-centered trees, dependency
// paths, multiword-expression collapsing and path-enclosed trees.

#ifndef UDTK_TREEFORM_H_
#define UDTK_TREEFORM_H_

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "udtk/treebank.h"
#include "udtk/trees.h"

namespace udtk {

struct LctOptions {
  // Label lexical nodes with the lemma (form when the lemma is absent).
  // When false the form is always used.
  bool use_lemma = true;
};

// Label used for a token's lexical node.
std::string LexicalLabel(const Token &token, bool use_lemma = true);

// Lexical-centered tree: each token becomes a lexical node whose children
// are, in order, a syntactic deprel node, a syntactic UPOS node and the
// subtrees of its dependents in surface order.
LabeledTree ToLct(const DepTree &tree, const LctOptions &options = {});

// Interior token ids of the undirected path from e1 to e2, ordered from the
// e1 side. Endpoints are excluded. Throws ArgumentError if e1 == e2.
std::vector<int> ShortestPath(const DepTree &tree, int e1, int e2);

// Direct dependents of e in surface order.
std::vector<int> Dependents(const DepTree &tree, int e);

enum class MweScope { kSdpAndDependents, kWholeTree };

struct MweConfig {
  std::set<std::string> relations = {"fixed"};
  MweScope scope = MweScope::kSdpAndDependents;

  bool operator==(const MweConfig &other) const = default;
};

struct MweCollapse {
  DepTree tree;
  // remap[old_id] = new id; remap[0] = 0.
  std::vector<int> remap;
};

// Targets for kSdpAndDependents scope: path interior, dependents of both
// entities and the entities themselves, sorted.
std::set<int> MweTargets(const DepTree &tree, int e1, int e2);

// Merges every target that has children attached by one of cfg.relations
// (transitively) into a single token. The merged form and lemma are the
// members' values in surface order joined by one space; the other fields
// come from the chain head. The merged token takes the surface position of
// its first member.
MweCollapse CollapseMwe(const DepTree &tree, const MweConfig &cfg,
                        const std::set<int> &targets);

// Inclusive 1-based surface span.
using Span = std::pair<int, int>;

// Path-enclosed tree: the lowest subtree covering both spans, with every
// node lying entirely outside [min start, max end] removed.
ConstTree ExtractPet(const ConstTree &tree, Span span1, Span span2);

}  // namespace udtk

#endif  // UDTK_TREEFORM_H_
