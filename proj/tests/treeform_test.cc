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

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "doctest.h"
#include "support.h"
#include "udtk/error.h"
#include "udtk/features.h"
#include "udtk/treebank.h"
#include "udtk/treeform.h"
#include "udtk/trees.h"

namespace udtk {
namespace {

using testing::ReadFixture;

int IdOf(const DepTree &t, const std::string &form) {
  for (const Token &tok : t.tokens()) {
    if (tok.form == form) return tok.id;
  }
  FAIL("no token " << form);
  return 0;
}

std::vector<std::string> Forms(const DepTree &t, const std::vector<int> &ids) {
  std::vector<std::string> out;
  for (int id : ids) out.push_back(t.token(id).form);
  return out;
}

Token Tok(int id, const std::string &form, int head, const std::string &rel) {
  Token t;
  t.id = id;
  t.form = form;
  t.lemma = form;
  t.upos = "X";
  t.head = head;
  t.deprel = rel;
  return t;
}

// Random constituency tree: internal nodes labeled from a small set, leaves
// named by position.
ConstTree RandomConstTree(testing::Rng &rng, int nodes) {
  LabeledTree shape = testing::RandomTree(rng, nodes, {"S", "NP", "VP"});
  int next_leaf = 1;
  std::function<ConstTree(const LabeledTree &)> build =
      [&](const LabeledTree &t) {
        ConstTree c;
        if (t.children.empty()) {
          c.label = "w" + std::to_string(next_leaf++);
          return c;
        }
        c.label = t.label;
        for (const LabeledTree &k : t.children) c.children.push_back(build(k));
        return c;
      };
  ConstTree root = build(shape);
  if (root.IsLeaf()) root = ConstTree{"S", {root}};
  root.ComputeSpans();
  return root;
}

TEST_SUITE("treeform") {

TEST_CASE("lct of a single token") {
  DepTree t("one", {[] {
              Token k = Tok(1, "run", 0, "root");
              k.upos = "VERB";
              return k;
            }()});
  LabeledTree lct = ToLct(t);
  CHECK(lct.label == "run");
  CHECK(lct.kind == NodeKind::kLexical);
  CHECK(lct.pos_tag == "VERB");
  REQUIRE(lct.children.size() == 2);
  CHECK(lct.children[0] == LabeledTree::Syntactic("root"));
  CHECK(lct.children[1] == LabeledTree::Syntactic("VERB"));
}

TEST_CASE("lct of the memo sentence") {
  DepTree t = ReadFixture("fig1a.conllu").at(0);
  LabeledTree lct = ToLct(t);
  CHECK(lct.label == "present");
  REQUIRE(lct.children.size() == 4);
  CHECK(lct.children[0].label == "root");
  CHECK(lct.children[1].label == "VERB");
  CHECK(lct.children[2].label == "memo");
  CHECK(lct.children[2].kind == NodeKind::kLexical);
  CHECK(lct.children[3].label == "detail");
  CHECK(lct.NodeCount() == 3 * t.size());
  CHECK(lct.LexicalCount() == t.size());

  LabeledTree forms = ToLct(t, {false});
  CHECK(forms.label == "presents");
}

TEST_CASE("lct node count is three per token") {
  std::vector<Token> toks;
  for (int i = 1; i <= 7; ++i) {
    toks.push_back(Tok(i, "t" + std::to_string(i), i == 4 ? 0 : 4,
                       i == 4 ? "root" : "dep"));
  }
  LabeledTree lct = ToLct(DepTree("seven", toks));
  std::function<int(const LabeledTree &)> count =
      [&](const LabeledTree &n) {
        int c = 1;
        for (const LabeledTree &k : n.children) c += count(k);
        return c;
      };
  CHECK(count(lct) == 21);
  CHECK(lct.NodeCount() == 21);
}

TEST_CASE("shortest path examples") {
  DepTree fig3 = ReadFixture("fig3b.conllu").at(0);
  CHECK(ShortestPath(fig3, IdOf(fig3, "audits"), IdOf(fig3, "waste")).empty());
  CHECK(ShortestPath(fig3, IdOf(fig3, "were"), IdOf(fig3, "waste")).empty());

  DepTree chain("chain", {Tok(1, "a", 2, "dep"), Tok(2, "b", 3, "dep"),
                          Tok(3, "c", 4, "dep"), Tok(4, "d", 0, "root")});
  CHECK(ShortestPath(chain, 1, 4) == std::vector<int>{2, 3});
  CHECK(ShortestPath(chain, 4, 1) == std::vector<int>{3, 2});
  CHECK_THROWS_AS(ShortestPath(chain, 2, 2), ArgumentError);
}

TEST_CASE("dependents examples") {
  DepTree fig3 = ReadFixture("fig3b.conllu").at(0);
  std::vector<std::string> deps =
      Forms(fig3, Dependents(fig3, IdOf(fig3, "waste")));
  CHECK(std::count(deps.begin(), deps.end(), "were") == 1);
  CHECK(std::count(deps.begin(), deps.end(), "about") == 1);
  CHECK(Dependents(fig3, IdOf(fig3, "recycling")).size() == 1);
  CHECK(Dependents(fig3, IdOf(fig3, "most")).empty());

  DepTree fig1 = ReadFixture("fig1a.conllu").at(0);
  CHECK(Forms(fig1, Dependents(fig1, fig1.Root())) ==
        std::vector<std::string>{"memo", "details"});
}

TEST_CASE("multiword collapse of the Farsi sentence") {
  REInstance inst;
  inst.dep_tree = ReadFixture("fig4.conllu").at(0);
  LocateEntities(&inst);
  const DepTree &t = inst.dep_tree;
  MweCollapse c =
      CollapseMwe(t, MweConfig{}, MweTargets(t, inst.e1, inst.e2));
  CHECK(t.size() == 8);
  CHECK(c.tree.size() == 7);
  CHECK(Validate(c.tree).empty());
  CHECK(c.remap[3] == c.remap[4]);
  const Token &merged = c.tree.token(c.remap[3]);
  CHECK(merged.form == "راجع به");
  CHECK(merged.deprel == "case");
  CHECK(merged.head == c.remap[inst.e1]);
  // Everything else keeps its own token.
  std::set<int> images;
  for (int id = 1; id <= 8; ++id) images.insert(c.remap[id]);
  CHECK(images.size() == 7);
}

TEST_CASE("collapse without fixed edges is the identity") {
  DepTree t = ReadFixture("fig1a.conllu").at(0);
  std::set<int> all;
  for (int i = 1; i <= t.size(); ++i) all.insert(i);
  MweCollapse c = CollapseMwe(t, MweConfig{}, all);
  CHECK(c.tree.tokens() == t.tokens());
  for (int i = 0; i <= t.size(); ++i) CHECK(c.remap[i] == i);
}

TEST_CASE("fixed chain merges into one token") {
  DepTree t("chain", {Tok(1, "a", 0, "root"), Tok(2, "b", 1, "fixed"),
                      Tok(3, "c", 2, "fixed")});
  MweCollapse c = CollapseMwe(t, MweConfig{}, {1});
  DepTree expected("chain", {Tok(1, "a b c", 0, "root")});
  CHECK(c.tree.tokens() == expected.tokens());
  CHECK(c.remap == std::vector<int>{0, 1, 1, 1});
}

TEST_CASE("bracketed trees") {
  std::vector<ConstTree> trees =
      ParseBracketed("(S (NP (NN dog)) (VP (VBZ barks)))\n");
  REQUIRE(trees.size() == 1);
  CHECK(trees[0].label == "S");
  CHECK(trees[0].children.size() == 2);
  CHECK(trees[0].start == 1);
  CHECK(trees[0].end == 2);

  CHECK_THROWS_AS(ParseBracketed("(NN dog"), ParseError);

  ConstTree unary = ParseBracketed("(A (B (C x)))").at(0);
  CHECK(unary.NodeCount() == 4);
  CHECK(unary.LeafCount() == 1);

  ConstTree wrapped = ParseBracketed("( (S (NN a) (NN b)) )").at(0);
  CHECK(wrapped.label == "S");
  CHECK(ParseBracketed(ToBracketed(wrapped)).at(0) == wrapped);

  LabeledTree lt = ToLabeledTree(trees[0]);
  CHECK(lt.children[0].children[0].children[0].kind == NodeKind::kLexical);
  CHECK(lt.children[0].children[0].children[0].pos_tag == "NN");
}

TEST_CASE("path-enclosed tree examples") {
  ConstTree t = ParseBracketed(
                    "(S (NP (DT the) (NN dog)) (VP (VBD bit) (NP (DT the) "
                    "(NN man))))")
                    .at(0);
  ConstTree same_np = ExtractPet(t, {1, 1}, {2, 2});
  CHECK(same_np.label == "NP");
  CHECK(same_np.Leaves() == std::vector<std::string>{"the", "dog"});

  ConstTree whole = ExtractPet(t, {1, 1}, {5, 5});
  CHECK(whole == t);

  ConstTree three = ParseBracketed(
                        "(S (NP (DT a) (JJ big) (NN dog)) (VP (VBD bit) (NP "
                        "(DT the) (NN man))) (. .))")
                        .at(0);
  ConstTree pet = ExtractPet(three, {3, 3}, {5, 5});
  CHECK(pet.Leaves() == std::vector<std::string>{"dog", "bit", "the"});
  CHECK(testing::SameShape(pet, testing::ReferencePet(three, 3, 5)));

  CHECK_THROWS_AS(ExtractPet(t, {1, 2}, {2, 3}), ArgumentError);
  CHECK_THROWS_AS(ExtractPet(t, {1, 1}, {6, 6}), ArgumentError);
}

TEST_CASE("property: shortest path matches breadth-first search") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    DepTree t = testing::RandomDepTree(rng, testing::Uniform(rng, 2, 14),
                                       {"dep"});
    int a = testing::Uniform(rng, 1, t.size());
    int b = testing::Uniform(rng, 1, t.size());
    if (a == b) continue;
    std::vector<int> ab = ShortestPath(t, a, b);
    CHECK(ab == testing::BfsPath(t, a, b));
    std::vector<int> ba = ShortestPath(t, b, a);
    std::reverse(ba.begin(), ba.end());
    CHECK(ab == ba);
  }
}

TEST_CASE("property: collapse keeps one root and a valid tree") {
  testing::Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    DepTree t = testing::RandomDepTree(rng, testing::Uniform(rng, 1, 12),
                                       {"fixed", "fixed", "obj", "nmod"});
    std::set<int> targets;
    for (int id = 1; id <= t.size(); ++id) {
      if (testing::Uniform(rng, 0, 1)) targets.insert(id);
    }
    MweCollapse c = CollapseMwe(t, MweConfig{}, targets);
    CAPTURE(WriteConllu(t));
    CHECK(Validate(c.tree).empty());
    CHECK(c.tree.Root() != 0);
    CHECK(c.remap.size() == static_cast<size_t>(t.size() + 1));
    CHECK(c.tree.size() <= t.size());
    LabeledTree lct = ToLct(c.tree);
    CHECK(lct.LexicalCount() == c.tree.size());
  }
}

TEST_CASE("property: path-enclosed tree is the minimal cover") {
  testing::Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    ConstTree t = RandomConstTree(rng, testing::Uniform(rng, 3, 12));
    const int n = t.LeafCount();
    if (n < 2) continue;
    int a = testing::Uniform(rng, 1, n - 1);
    int b = testing::Uniform(rng, a + 1, n);
    ConstTree pet = ExtractPet(t, {a, a}, {b, b});
    CAPTURE(ToBracketed(t));
    CAPTURE(a);
    CAPTURE(b);
    CHECK(testing::SameShape(pet, testing::ReferencePet(t, a, b)));
    std::vector<std::string> expected;
    for (int i = a; i <= b; ++i) expected.push_back("w" + std::to_string(i));
    CHECK(pet.Leaves() == expected);
    for (const ConstTree &c : pet.children) {
      CHECK(!(c.start <= a && c.end >= b));
    }
  }
}

TEST_CASE("property: annotated bracketed rendering round trips") {
  testing::Rng rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    LabeledTree t = testing::RandomTree(rng, testing::Uniform(rng, 1, 9),
                                        {"a", "b c", "(x)", "p|q", "\\"});
    if (testing::Uniform(rng, 0, 1)) {
      t.kind = NodeKind::kLexical;
      t.pos_tag = "NOUN";
    }
    CHECK(ParseLabeledTree(ToBracketed(t, true)) == t);
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace udtk
