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

#include "udtk/treeform.h"

#include <algorithm>

#include "udtk/error.h"

namespace udtk {

namespace {

LabeledTree LctNode(const DepTree &tree, int id, const LctOptions &options) {
  const Token &tok = tree.token(id);
  LabeledTree node = LabeledTree::Lexical(LexicalLabel(tok, options.use_lemma),
                                          tok.upos);
  const std::vector<int> &deps = tree.Children(id);
  node.children.reserve(2 + deps.size());
  node.children.push_back(LabeledTree::Syntactic(tok.deprel));
  node.children.push_back(LabeledTree::Syntactic(tok.upos));
  for (int child : deps) node.children.push_back(LctNode(tree, child, options));
  return node;
}

void RequireToken(const DepTree &tree, int id) {
  if (!tree.HasToken(id)) {
    throw LookupError("sentence '" + tree.sent_id() + "' has no token " +
                      std::to_string(id));
  }
}

ConstTree Prune(const ConstTree &node, int lo, int hi) {
  ConstTree out;
  out.label = node.label;
  out.start = node.start;
  out.end = node.end;
  if (node.IsLeaf()) return out;
  bool first = true;
  for (const ConstTree &c : node.children) {
    if (c.end < lo || c.start > hi) continue;
    ConstTree kept = Prune(c, lo, hi);
    if (first) out.start = kept.start;
    out.end = kept.end;
    first = false;
    out.children.push_back(std::move(kept));
  }
  return out;
}

}  // namespace

std::string LexicalLabel(const Token &token, bool use_lemma) {
  if (use_lemma && !token.lemma.empty()) return token.lemma;
  return token.form;
}

LabeledTree ToLct(const DepTree &tree, const LctOptions &options) {
  RequireValid(tree);
  return LctNode(tree, tree.Root(), options);
}

std::vector<int> ShortestPath(const DepTree &tree, int e1, int e2) {
  RequireToken(tree, e1);
  RequireToken(tree, e2);
  if (e1 == e2) {
    throw ArgumentError("shortest path needs two distinct tokens, got " +
                        std::to_string(e1) + " twice");
  }
  RequireValid(tree);
  // Ancestor chains, each starting at the node itself.
  auto chain = [&](int node) {
    std::vector<int> out;
    for (int cur = node; cur != 0; cur = tree.token(cur).head) {
      out.push_back(cur);
    }
    return out;
  };
  std::vector<int> up1 = chain(e1);
  std::vector<int> up2 = chain(e2);
  std::vector<int> pos_in_up1(tree.size() + 1, -1);
  for (size_t i = 0; i < up1.size(); ++i) pos_in_up1[up1[i]] = i;
  size_t j = 0;
  while (pos_in_up1[up2[j]] < 0) ++j;
  const int lca_index = pos_in_up1[up2[j]];

  std::vector<int> path;
  // e1 side: up1[1 .. lca_index], lca included once.
  for (int i = 1; i <= lca_index; ++i) path.push_back(up1[i]);
  // e2 side: up2[j-1 .. 1], reversed so the path runs towards e2.
  for (size_t k = j; k-- > 1;) path.push_back(up2[k]);
  // When e2 is the ancestor it ends the e1 side.
  if (!path.empty() && path.back() == e2) path.pop_back();
  return path;
}

std::vector<int> Dependents(const DepTree &tree, int e) {
  RequireToken(tree, e);
  return tree.Children(e);
}

std::set<int> MweTargets(const DepTree &tree, int e1, int e2) {
  std::set<int> targets = {e1, e2};
  for (int id : ShortestPath(tree, e1, e2)) targets.insert(id);
  for (int id : Dependents(tree, e1)) targets.insert(id);
  for (int id : Dependents(tree, e2)) targets.insert(id);
  return targets;
}

MweCollapse CollapseMwe(const DepTree &tree, const MweConfig &cfg,
                        const std::set<int> &targets) {
  RequireValid(tree);
  const int n = tree.size();
  for (int t : targets) RequireToken(tree, t);

  std::vector<int> depth(n + 1, 0);
  for (int id = 1; id <= n; ++id) {
    for (int cur = id; tree.token(cur).head != 0; cur = tree.token(cur).head) {
      ++depth[id];
    }
  }
  std::vector<int> ordered(targets.begin(), targets.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [&](int a, int b) { return depth[a] < depth[b]; });

  // group_of[id] = index of the group whose head is `id`'s chain head.
  std::vector<int> group_of(n + 1, -1);
  std::vector<std::vector<int>> groups;
  for (int t : ordered) {
    if (group_of[t] >= 0) continue;
    std::vector<int> members = {t};
    for (size_t k = 0; k < members.size(); ++k) {
      for (int child : tree.Children(members[k])) {
        if (group_of[child] < 0 && cfg.relations.count(tree.token(child).deprel)) {
          members.push_back(child);
        }
      }
    }
    if (members.size() < 2) continue;
    for (int m : members) group_of[m] = static_cast<int>(groups.size());
    groups.push_back(std::move(members));
  }

  MweCollapse result;
  result.remap.assign(n + 1, 0);
  if (groups.empty()) {
    for (int id = 1; id <= n; ++id) result.remap[id] = id;
    result.tree = tree;
    return result;
  }

  // A unit is either a single token or a group, positioned at its first
  // member; the group head is the first element of its member list.
  struct Unit {
    int first;
    int head_token;
    std::vector<int> members;
  };
  std::vector<Unit> units;
  std::vector<char> emitted(groups.size(), 0);
  for (int id = 1; id <= n; ++id) {
    int g = group_of[id];
    if (g < 0) {
      units.push_back({id, id, {id}});
    } else if (!emitted[g]) {
      emitted[g] = 1;
      std::vector<int> sorted = groups[g];
      std::sort(sorted.begin(), sorted.end());
      units.push_back({id, groups[g][0], sorted});
    }
  }
  for (size_t u = 0; u < units.size(); ++u) {
    for (int m : units[u].members) result.remap[m] = static_cast<int>(u) + 1;
  }

  std::vector<Token> tokens;
  tokens.reserve(units.size());
  for (size_t u = 0; u < units.size(); ++u) {
    const Unit &unit = units[u];
    Token tok = tree.token(unit.head_token);
    tok.id = static_cast<int>(u) + 1;
    tok.head = result.remap[tree.token(unit.head_token).head];
    if (unit.members.size() > 1) {
      std::string form, lemma;
      for (size_t k = 0; k < unit.members.size(); ++k) {
        const Token &m = tree.token(unit.members[k]);
        if (k > 0) {
          form += ' ';
          lemma += ' ';
        }
        form += m.form;
        lemma += m.lemma.empty() ? m.form : m.lemma;
      }
      tok.form = std::move(form);
      tok.lemma = std::move(lemma);
    }
    tokens.push_back(std::move(tok));
  }
  result.tree = DepTree(tree.sent_id(), std::move(tokens), tree.metadata(),
                        tree.text());
  return result;
}

ConstTree ExtractPet(const ConstTree &tree, Span span1, Span span2) {
  const int n = tree.end;
  for (const Span &s : {span1, span2}) {
    if (s.first < 1 || s.second > n || s.first > s.second) {
      throw ArgumentError("entity span (" + std::to_string(s.first) + "," +
                          std::to_string(s.second) +
                          ") outside sentence of length " + std::to_string(n));
    }
  }
  if (span1.first <= span2.second && span2.first <= span1.second) {
    throw ArgumentError("entity spans overlap");
  }
  const int lo = std::min(span1.first, span2.first);
  const int hi = std::max(span1.second, span2.second);
  const ConstTree *node = &tree;
  while (true) {
    const ConstTree *next = nullptr;
    for (const ConstTree &c : node->children) {
      if (c.start <= lo && c.end >= hi) {
        next = &c;
        break;
      }
    }
    if (next == nullptr) break;
    node = next;
  }
  return Prune(*node, lo, hi);
}

}  // namespace udtk
