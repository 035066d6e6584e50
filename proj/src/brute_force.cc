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

// Fragment enumeration reference for the tree kernels. Shares no code with
// the dynamic programs in kernels.cc.

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "udtk/error.h"
#include "udtk/kernels.h"

namespace udtk {

namespace {

// One way a fragment can be embedded with its root at a given node.
struct Embedding {
  std::string shape;  // canonical, unambiguous encoding of the fragment
  int nodes = 0;      // fragment nodes
  int leaves = 0;     // fragment leaves
  int gaps = 0;       // skipped siblings inside chosen child windows
  int productions = 0;
};

std::string Atom(const std::string &label) {
  return std::to_string(label.size()) + ":" + label;
}

// Every ordered choice of one element from each list.
template <typename F>
void Product(const std::vector<const std::vector<Embedding> *> &lists,
             size_t k, std::vector<const Embedding *> *chosen, F &&emit) {
  if (k == lists.size()) {
    emit(*chosen);
    return;
  }
  for (const Embedding &e : *lists[k]) {
    chosen->push_back(&e);
    Product(lists, k + 1, chosen, emit);
    chosen->pop_back();
  }
}

// Partial tree fragments: any non-empty child subsequence, each chosen child
// expanded by one of its own fragments.
std::vector<Embedding> PartialFragments(const LabeledTree &node) {
  std::vector<Embedding> out;
  out.push_back({Atom(node.label), 1, 1, 0, 0});
  const int k = static_cast<int>(node.children.size());
  std::vector<std::vector<Embedding>> sub;
  for (const LabeledTree &c : node.children) {
    sub.push_back(PartialFragments(c));
  }
  for (int mask = 1; mask < (1 << k); ++mask) {
    std::vector<const std::vector<Embedding> *> lists;
    int first = -1, last = -1;
    for (int c = 0; c < k; ++c) {
      if (mask & (1 << c)) {
        lists.push_back(&sub[c]);
        if (first < 0) first = c;
        last = c;
      }
    }
    const int window_gaps =
        last - first + 1 - static_cast<int>(lists.size());
    std::vector<const Embedding *> chosen;
    Product(lists, 0, &chosen, [&](const std::vector<const Embedding *> &es) {
      Embedding e;
      e.shape = Atom(node.label) + "(";
      e.nodes = 1;
      e.gaps = window_gaps;
      for (const Embedding *x : es) {
        e.shape += x->shape + ",";
        e.nodes += x->nodes;
        e.leaves += x->leaves;
        e.gaps += x->gaps;
      }
      e.shape += ")";
      out.push_back(std::move(e));
    });
  }
  return out;
}

// Subset tree fragments rooted at an internal node: all children kept, each
// internal child either cut or expanded further.
std::vector<Embedding> SubsetFragments(const LabeledTree &node) {
  std::vector<Embedding> out;
  if (node.children.empty()) return out;
  std::vector<std::vector<Embedding>> options;
  for (const LabeledTree &c : node.children) {
    std::vector<Embedding> opts;
    opts.push_back({Atom(c.label), 1, 1, 0, 0});
    for (Embedding &e : SubsetFragments(c)) opts.push_back(std::move(e));
    options.push_back(std::move(opts));
  }
  std::vector<const std::vector<Embedding> *> lists;
  for (const auto &o : options) lists.push_back(&o);
  std::vector<const Embedding *> chosen;
  Product(lists, 0, &chosen, [&](const std::vector<const Embedding *> &es) {
    Embedding e;
    e.shape = Atom(node.label) + "[";
    e.productions = 1;
    for (const Embedding *x : es) {
      e.shape += x->shape + ",";
      e.productions += x->productions;
    }
    e.shape += "]";
    out.push_back(std::move(e));
  });
  return out;
}

void CollectNodes(const LabeledTree &t, std::vector<const LabeledTree *> *out) {
  out->push_back(&t);
  for (const LabeledTree &c : t.children) CollectNodes(c, out);
}

}  // namespace

double BruteForceKernel(const LabeledTree &t1, const LabeledTree &t2,
                        TreeKernelKind kind, double lambda, double mu) {
  if (t1.NodeCount() > kBruteForceMaxNodes ||
      t2.NodeCount() > kBruteForceMaxNodes) {
    throw ArgumentError("brute-force kernel accepts trees of at most " +
                        std::to_string(kBruteForceMaxNodes) + " nodes");
  }
  if (kind == TreeKernelKind::kSptk) {
    throw ArgumentError("brute-force kernel supports SST and PTK only");
  }
  std::vector<const LabeledTree *> n1, n2;
  CollectNodes(t1, &n1);
  CollectNodes(t2, &n2);

  auto enumerate = [&](const LabeledTree &n) {
    return kind == TreeKernelKind::kSst ? SubsetFragments(n)
                                        : PartialFragments(n);
  };
  auto weight = [&](const Embedding &a, const Embedding &b) {
    if (kind == TreeKernelKind::kSst) {
      return std::pow(lambda, a.productions);
    }
    return std::pow(mu, a.nodes) * std::pow(lambda, 2 * a.leaves) *
           std::pow(lambda, a.gaps + b.gaps);
  };

  double total = 0;
  for (const LabeledTree *a : n1) {
    std::multimap<std::string, Embedding> by_shape;
    for (Embedding &e : enumerate(*a)) {
      std::string key = e.shape;
      by_shape.emplace(std::move(key), std::move(e));
    }
    for (const LabeledTree *b : n2) {
      for (const Embedding &eb : enumerate(*b)) {
        auto range = by_shape.equal_range(eb.shape);
        for (auto it = range.first; it != range.second; ++it) {
          total += weight(it->second, eb);
        }
      }
    }
  }
  return total;
}

}  // namespace udtk
