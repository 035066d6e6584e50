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

// Test-side generators and reference computations. Everything here is
// written from the definitions, independently of the library code it
// checks.

#ifndef UDTK_TESTS_SUPPORT_H_
#define UDTK_TESTS_SUPPORT_H_

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "udtk/combine.h"
#include "udtk/learn.h"
#include "udtk/treebank.h"
#include "udtk/trees.h"

namespace udtk::testing {

// Directory holding the checked-in fixtures.
std::string DataPath(const std::string &name);
std::vector<DepTree> ReadFixture(const std::string &name);

// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string &tag);
  ~TempDir();
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;
  const std::filesystem::path &path() const { return path_; }
  std::string File(const std::string &name) const {
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi].
int Uniform(Rng &rng, int lo, int hi);

// Every ordered tree with 1..max_nodes nodes whose labels come from
// `alphabet`. All nodes are syntactic.
std::vector<LabeledTree> AllTrees(int max_nodes,
                                  const std::vector<std::string> &alphabet);

// Random ordered tree: node k attaches as the last child of a uniformly
// chosen earlier node.
LabeledTree RandomTree(Rng &rng, int nodes,
                       const std::vector<std::string> &alphabet);

// Random kernel inputs for Gram checks. Trees have 1..max_nodes nodes
// labeled from a four-letter alphabet. Relation inputs carry a constituency
// tree and a feature vector of dimension `dim` with entries in [-1, 1].
KernelInput RandomTreeInput(Rng &rng, int max_nodes);
KernelInput RandomPairInput(Rng &rng, int max_nodes);
KernelInput RandomRelationInput(Rng &rng, int max_nodes, int dim);

// Random valid dependency tree with `n` tokens. Deprels are drawn from
// `deprels`; forms are "w<id>".
DepTree RandomDepTree(Rng &rng, int n, const std::vector<std::string> &deprels);

// Kernel values straight from the recursive definitions, enumerating every
// pair of child index subsequences explicitly.
double ReferencePtk(const LabeledTree &a, const LabeledTree &b, double lambda,
                    double mu);
double ReferenceSst(const LabeledTree &a, const LabeledTree &b, double lambda);

// Interior of the undirected path, by breadth-first search.
std::vector<int> BfsPath(const DepTree &tree, int from, int to);

// Lowest node covering [lo, hi] found by scanning every subtree, with the
// children outside [lo, hi] pruned.
ConstTree ReferencePet(const ConstTree &tree, int lo, int hi);
// Structure and labels only.
bool SameShape(const ConstTree &a, const ConstTree &b);

// Eigenvalues of a symmetric Gram matrix, ascending.
std::vector<double> Eigenvalues(const GramMatrix &gram);

}  // namespace udtk::testing

#endif  // UDTK_TESTS_SUPPORT_H_
