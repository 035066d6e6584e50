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

#include "support.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>

#include "udtk/util.h"

#ifndef UDTK_TEST_DATA_DIR
#error "UDTK_TEST_DATA_DIR must be defined"
#endif

namespace udtk::testing {

std::string DataPath(const std::string &name) {
  return std::string(UDTK_TEST_DATA_DIR) + "/" + name;
}

std::vector<DepTree> ReadFixture(const std::string &name) {
  return ParseConllu(ReadFile(DataPath(name)), name);
}

TempDir::TempDir(const std::string &tag) {
  static int counter = 0;
  std::random_device rd;
  path_ = std::filesystem::temp_directory_path() /
          ("udtk-" + tag + "-" + std::to_string(rd()) + "-" +
           std::to_string(counter++));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

int Uniform(Rng &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

namespace {

// Ordered forests with exactly n nodes, as lists of root subtrees.
std::vector<std::vector<LabeledTree>> Forests(
    int n, const std::vector<std::string> &alphabet);

std::vector<LabeledTree> TreesOfSize(int n,
                                     const std::vector<std::string> &alphabet) {
  std::vector<LabeledTree> out;
  for (const std::string &label : alphabet) {
    for (std::vector<LabeledTree> &kids : Forests(n - 1, alphabet)) {
      out.push_back(LabeledTree::Syntactic(label, std::move(kids)));
    }
  }
  return out;
}

std::vector<std::vector<LabeledTree>> Forests(
    int n, const std::vector<std::string> &alphabet) {
  if (n == 0) return {{}};
  std::vector<std::vector<LabeledTree>> out;
  for (int first = 1; first <= n; ++first) {
    for (const LabeledTree &head : TreesOfSize(first, alphabet)) {
      for (std::vector<LabeledTree> &rest : Forests(n - first, alphabet)) {
        rest.insert(rest.begin(), head);
        out.push_back(std::move(rest));
      }
    }
  }
  return out;
}

// Increasing index sequences of length k drawn from [0, n).
void Subsequences(int n, int k, int from, std::vector<int> *cur,
                  std::vector<std::vector<int>> *out) {
  if (static_cast<int>(cur->size()) == k) {
    out->push_back(*cur);
    return;
  }
  for (int i = from; i < n; ++i) {
    cur->push_back(i);
    Subsequences(n, k, i + 1, cur, out);
    cur->pop_back();
  }
}

int Gaps(const std::vector<int> &idx) {
  return idx.back() - idx.front() + 1 - static_cast<int>(idx.size());
}

double PtkDelta(const LabeledTree &a, const LabeledTree &b, double lambda,
                double mu) {
  if (a.label != b.label || a.kind != b.kind) return 0;
  double sum = lambda * lambda;
  const int n = static_cast<int>(a.children.size());
  const int m = static_cast<int>(b.children.size());
  for (int k = 1; k <= std::min(n, m); ++k) {
    std::vector<std::vector<int>> s1, s2;
    std::vector<int> cur;
    Subsequences(n, k, 0, &cur, &s1);
    Subsequences(m, k, 0, &cur, &s2);
    for (const auto &j1 : s1) {
      for (const auto &j2 : s2) {
        double prod = std::pow(lambda, Gaps(j1) + Gaps(j2));
        for (int t = 0; t < k && prod != 0; ++t) {
          prod *= PtkDelta(a.children[j1[t]], b.children[j2[t]], lambda, mu);
        }
        sum += prod;
      }
    }
  }
  return mu * sum;
}

bool SameProduction(const LabeledTree &a, const LabeledTree &b) {
  if (a.label != b.label || a.children.size() != b.children.size()) {
    return false;
  }
  for (size_t i = 0; i < a.children.size(); ++i) {
    if (a.children[i].label != b.children[i].label) return false;
  }
  return true;
}

double SstDelta(const LabeledTree &a, const LabeledTree &b, double lambda) {
  if (a.children.empty() || b.children.empty()) return 0;
  if (!SameProduction(a, b)) return 0;
  double prod = lambda;
  for (size_t i = 0; i < a.children.size(); ++i) {
    prod *= 1 + SstDelta(a.children[i], b.children[i], lambda);
  }
  return prod;
}

void Nodes(const LabeledTree &t, std::vector<const LabeledTree *> *out) {
  out->push_back(&t);
  for (const LabeledTree &c : t.children) Nodes(c, out);
}

template <typename F>
double SumPairs(const LabeledTree &a, const LabeledTree &b, F &&delta) {
  std::vector<const LabeledTree *> na, nb;
  Nodes(a, &na);
  Nodes(b, &nb);
  double total = 0;
  for (const LabeledTree *x : na) {
    for (const LabeledTree *y : nb) total += delta(*x, *y);
  }
  return total;
}

}  // namespace

std::vector<LabeledTree> AllTrees(int max_nodes,
                                  const std::vector<std::string> &alphabet) {
  std::vector<LabeledTree> out;
  for (int n = 1; n <= max_nodes; ++n) {
    for (LabeledTree &t : TreesOfSize(n, alphabet)) out.push_back(std::move(t));
  }
  return out;
}

LabeledTree RandomTree(Rng &rng, int nodes,
                       const std::vector<std::string> &alphabet) {
  // Parent links first, then materialize children in attachment order.
  std::vector<int> parent(nodes, -1);
  std::vector<std::string> label(nodes);
  for (int k = 0; k < nodes; ++k) {
    label[k] = alphabet[Uniform(rng, 0, static_cast<int>(alphabet.size()) - 1)];
    if (k > 0) parent[k] = Uniform(rng, 0, k - 1);
  }
  std::function<LabeledTree(int)> build = [&](int k) {
    LabeledTree t = LabeledTree::Syntactic(label[k]);
    for (int c = k + 1; c < nodes; ++c) {
      if (parent[c] == k) t.children.push_back(build(c));
    }
    return t;
  };
  return build(0);
}

KernelInput RandomTreeInput(Rng &rng, int max_nodes) {
  static const std::vector<std::string> kAlphabet = {"a", "b", "c", "d"};
  static int counter = 0;
  KernelInput in;
  in.id = "t" + std::to_string(counter++);
  in.trees.push_back(RandomTree(rng, Uniform(rng, 1, max_nodes), kAlphabet));
  in.languages.push_back("en");
  return in;
}

KernelInput RandomPairInput(Rng &rng, int max_nodes) {
  KernelInput in = RandomTreeInput(rng, max_nodes);
  KernelInput other = RandomTreeInput(rng, max_nodes);
  in.trees.push_back(other.trees[0]);
  in.languages.push_back("en");
  return in;
}

KernelInput RandomRelationInput(Rng &rng, int max_nodes, int dim) {
  KernelInput in = RandomTreeInput(rng, max_nodes);
  in.pet = RandomTree(rng, Uniform(rng, 1, max_nodes), {"S", "NP", "VP"});
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  in.features.emplace(dim);
  for (double &x : *in.features) x = unit(rng);
  return in;
}

DepTree RandomDepTree(Rng &rng, int n,
                      const std::vector<std::string> &deprels) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> head(n + 1, 0);
  for (int k = 1; k < n; ++k) head[order[k]] = order[Uniform(rng, 0, k - 1)];
  std::vector<Token> tokens;
  for (int id = 1; id <= n; ++id) {
    Token t;
    t.id = id;
    t.form = "w" + std::to_string(id);
    t.lemma = t.form;
    t.upos = id % 2 ? "NOUN" : "VERB";
    t.head = head[id];
    t.deprel = head[id] == 0
                   ? "root"
                   : deprels[Uniform(rng, 0,
                                     static_cast<int>(deprels.size()) - 1)];
    tokens.push_back(std::move(t));
  }
  return DepTree("random", std::move(tokens), {{"sent_id", "random"}});
}

double ReferencePtk(const LabeledTree &a, const LabeledTree &b, double lambda,
                    double mu) {
  return SumPairs(a, b, [&](const LabeledTree &x, const LabeledTree &y) {
    return PtkDelta(x, y, lambda, mu);
  });
}

double ReferenceSst(const LabeledTree &a, const LabeledTree &b,
                    double lambda) {
  return SumPairs(a, b, [&](const LabeledTree &x, const LabeledTree &y) {
    return SstDelta(x, y, lambda);
  });
}

std::vector<int> BfsPath(const DepTree &tree, int from, int to) {
  const int n = tree.size();
  std::vector<std::vector<int>> adj(n + 1);
  for (const Token &t : tree.tokens()) {
    if (t.head > 0) {
      adj[t.id].push_back(t.head);
      adj[t.head].push_back(t.id);
    }
  }
  std::vector<int> prev(n + 1, -1);
  std::deque<int> queue = {from};
  prev[from] = from;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : adj[u]) {
      if (prev[v] < 0) {
        prev[v] = u;
        queue.push_back(v);
      }
    }
  }
  std::vector<int> path;
  for (int v = prev[to]; v != from; v = prev[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

void AllSubtrees(const ConstTree &t, int depth,
                 std::vector<std::pair<int, const ConstTree *>> *out) {
  out->push_back({depth, &t});
  for (const ConstTree &c : t.children) AllSubtrees(c, depth + 1, out);
}

ConstTree PruneOutside(const ConstTree &t, int lo, int hi) {
  ConstTree out;
  out.label = t.label;
  out.start = t.start;
  out.end = t.end;
  for (const ConstTree &c : t.children) {
    if (c.end < lo || c.start > hi) continue;
    out.children.push_back(PruneOutside(c, lo, hi));
  }
  return out;
}

}  // namespace

ConstTree ReferencePet(const ConstTree &tree, int lo, int hi) {
  std::vector<std::pair<int, const ConstTree *>> all;
  AllSubtrees(tree, 0, &all);
  const ConstTree *best = nullptr;
  int best_width = 0, best_depth = -1;
  for (auto [depth, node] : all) {
    if (node->start > lo || node->end < hi) continue;
    int width = node->end - node->start;
    if (best == nullptr || width < best_width ||
        (width == best_width && depth > best_depth)) {
      best = node;
      best_width = width;
      best_depth = depth;
    }
  }
  return PruneOutside(*best, lo, hi);
}

bool SameShape(const ConstTree &a, const ConstTree &b) {
  if (a.label != b.label || a.children.size() != b.children.size()) {
    return false;
  }
  for (size_t i = 0; i < a.children.size(); ++i) {
    if (!SameShape(a.children[i], b.children[i])) return false;
  }
  return true;
}

std::vector<double> Eigenvalues(const GramMatrix &gram) {
  Eigen::MatrixXd m(gram.rows, gram.cols);
  for (int i = 0; i < gram.rows; ++i) {
    for (int j = 0; j < gram.cols; ++j) m(i, j) = gram.at(i, j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd &ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

}  // namespace udtk::testing
