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
#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "support.h"
#include "udtk/dataset.h"
#include "udtk/error.h"
#include "udtk/features.h"
#include "udtk/util.h"

namespace udtk {
namespace {

using Vec = std::vector<double>;

LexicalResources Resources() {
  LexicalResources res;
  res.stores.emplace("en",
                     LoadEmbeddings(testing::DataPath("en.vec"), "en"));
  res.dictionaries.emplace(
      std::make_pair("fa", "en"),
      LoadDictionary(testing::DataPath("fa-en.dict"), "fa", "en"));
  return res;
}

std::vector<REInstance> Instances(const std::string &fixture,
                                  const std::string &language = "en") {
  return ParseReDataset(ReadFile(testing::DataPath(fixture)), std::nullopt,
                        language, fixture);
}

// Test-side mean of store vectors, in the order given.
Vec Mean(const EmbeddingStore &store, const std::vector<std::string> &words) {
  Vec out(store.dimension(), 0.0);
  for (const std::string &w : words) {
    std::span<const float> v = store.Find(w);
    REQUIRE_MESSAGE(!v.empty(), w);
    for (size_t i = 0; i < v.size(); ++i) out[i] += v[i];
  }
  if (!words.empty()) {
    for (double &x : out) x /= words.size();
  }
  return out;
}

Vec Block(const Vec &v, int index, int dim) {
  return Vec(v.begin() + index * dim, v.begin() + (index + 1) * dim);
}

void CheckClose(const Vec &got, const Vec &want) {
  REQUIRE(got.size() == want.size());
  for (size_t i = 0; i < got.size(); ++i) {
    CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
  }
}

bool AllZero(const Vec &v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

std::string Sentence(const std::string &id,
                     const std::vector<std::string> &rows) {
  std::string out = "# sent_id = " + id + "\n# relation = Other\n";
  for (const std::string &r : rows) out += r + "\n";
  return out + "\n";
}

TEST_SUITE("features") {

TEST_CASE("surface vectors of the audits sentence") {
  LexicalResources res = Resources();
  WordEmbedder embed(&res, {});
  const EmbeddingStore &store = res.stores.at("en");
  REInstance inst = Instances("fig3b.conllu").at(0);
  Vec v = BuildVo(inst, embed, FeatureConfig{});
  REQUIRE(v.size() == 30);
  CheckClose(Block(v, 0, 6), Mean(store, {"audit"}));
  CheckClose(Block(v, 1, 6), Mean(store, {"waste"}));
  CheckClose(Block(v, 2, 6), Mean(store, {"be", "about"}));
  CheckClose(Block(v, 3, 6), Mean(store, {"common", "most", "the"}));
  CheckClose(Block(v, 4, 6), Mean(store, {"and", "recycling"}));

  FeatureConfig narrow;
  narrow.window = 1;
  Vec w = BuildVo(inst, embed, narrow);
  CheckClose(Block(w, 3, 6), Mean(store, {"common"}));
  CheckClose(Block(w, 4, 6), Mean(store, {"and"}));
}

TEST_CASE("dependency vectors of the audits sentence") {
  LexicalResources res = Resources();
  WordEmbedder embed(&res, {});
  const EmbeddingStore &store = res.stores.at("en");
  REInstance inst = Instances("fig3b.conllu").at(0);
  Vec v = BuildVud(inst, embed, FeatureConfig{});
  REQUIRE(v.size() == 30);
  CheckClose(Block(v, 0, 6), Mean(store, {"audit"}));
  CheckClose(Block(v, 1, 6), Mean(store, {"waste"}));
  CHECK(AllZero(Block(v, 2, 6)));
  CheckClose(Block(v, 3, 6), Mean(store, {"the", "common"}));
  // "were" and "about" reach the vector through the dependents of e2.
  CheckClose(Block(v, 4, 6), Mean(store, {"be", "about", "recycling"}));
}

TEST_CASE("the merged Farsi preposition is one translated word") {
  LexicalResources res = Resources();
  WordEmbedder pivot(&res, {EmbeddingMode::kPivotTranslate, "en", true});
  const EmbeddingStore &store = res.stores.at("en");
  REInstance inst = Instances("fig4.conllu", "fa").at(0);
  FeatureConfig cfg;
  cfg.embedding_mode = EmbeddingMode::kPivotTranslate;
  Vec v = BuildVud(inst, pivot, cfg);
  REQUIRE(v.size() == 30);
  CheckClose(Block(v, 0, 6), Mean(store, {"waste"}));
  CheckClose(Block(v, 1, 6), Mean(store, {"audit"}));
  CHECK(AllZero(Block(v, 2, 6)));
  CheckClose(Block(v, 3, 6), Mean(store, {"about", "recycling", "be"}));
  CheckClose(Block(v, 4, 6), Mean(store, {"common"}));

  // Without the collapse the two parts would enter separately.
  Vec split = Mean(store, {"concerning", "to", "recycling", "be"});
  Vec got = Block(v, 3, 6);
  double diff = 0;
  for (size_t i = 0; i < got.size(); ++i) diff += std::abs(got[i] - split[i]);
  CHECK(diff > 0.1);
}

TEST_CASE("empty groups give zero blocks") {
  LexicalResources res = Resources();
  WordEmbedder embed(&res, {});
  const EmbeddingStore &store = res.stores.at("en");
  REInstance inst =
      ParseReDataset(Sentence("adjacent",
                              {"1\tdog\tdog\tNOUN\t_\t_\t3\tnsubj\t_\tEntity=e1",
                               "2\tcat\tcat\tNOUN\t_\t_\t3\tobj\t_\tEntity=e2",
                               "3\trun\trun\tVERB\t_\t_\t0\troot\t_\t_"}),
                     std::nullopt, "en")
          .at(0);
  Vec vo = BuildVo(inst, embed, FeatureConfig{});
  CHECK(AllZero(Block(vo, 2, 6)));
  CHECK(AllZero(Block(vo, 3, 6)));
  CheckClose(Block(vo, 4, 6), Mean(store, {"run"}));

  Vec vud = BuildVud(inst, embed, FeatureConfig{});
  CheckClose(Block(vud, 2, 6), Mean(store, {"run"}));
  CHECK(AllZero(Block(vud, 3, 6)));
  CHECK(AllZero(Block(vud, 4, 6)));

  // Unknown words leave their group empty as well.
  REInstance oov = ParseReDataset(
      Sentence("oov", {"1\tzork\tzork\tNOUN\t_\t_\t2\tnsubj\t_\tEntity=e1",
                       "2\tblarg\tblarg\tVERB\t_\t_\t0\troot\t_\tEntity=e2"}),
      std::nullopt, "en")[0];
  Vec z = BuildVud(oov, embed, FeatureConfig{});
  CHECK(AllZero(z));
}

TEST_CASE("entity features") {
  LexicalResources res = Resources();
  WordEmbedder embed(&res, {});
  std::vector<REInstance> train = Instances("fig3b.conllu");
  EntityVocabulary vocab = EntityVocabulary::Build(train);
  CHECK(vocab.entity_types == std::vector<std::string>{"none"});
  CHECK(vocab.mention_types == std::vector<std::string>{"none"});
  CHECK(vocab.upos == std::vector<std::string>{"NOUN", "none"});

  Vec a = BuildEntityFeatures(train[0], vocab, embed, FeatureConfig{});
  const size_t per_entity = 1 + 1 + 6 + 2;
  REQUIRE(a.size() == 2 * per_entity);
  CHECK(a[0] == 1.0);  // EntityType none
  CHECK(a[1] == 1.0);  // MentionType none
  CHECK(a == BuildEntityFeatures(train[0], vocab, embed, FeatureConfig{}));

  // Changing only e1's UPOS touches only e1's UPOS block.
  std::vector<Token> tokens = train[0].dep_tree.tokens();
  tokens[train[0].e1 - 1].upos = "PROPN";
  REInstance changed = train[0];
  changed.dep_tree = DepTree(train[0].dep_tree.sent_id(), tokens,
                             train[0].dep_tree.metadata());
  Vec b = BuildEntityFeatures(changed, vocab, embed, FeatureConfig{});
  REQUIRE(b.size() == a.size());
  const size_t upos_begin = 1 + 1 + 6;
  for (size_t i = 0; i < a.size(); ++i) {
    bool in_block = i >= upos_begin && i < upos_begin + vocab.upos.size();
    CAPTURE(i);
    if (!in_block) CHECK(a[i] == b[i]);
  }
  CHECK(a != b);
}

TEST_CASE("entity location") {
  REInstance inst = Instances("fig3b.conllu").at(0);
  CHECK(inst.e1 == 4);
  CHECK(inst.e2 == 7);
  CHECK(inst.label == "Message-Topic(e1,e2)");
  CHECK_THROWS_AS(
      ParseReDataset(Sentence("gap",
                              {"1\ta\ta\tX\t_\t_\t0\troot\t_\tEntity=e1",
                               "2\tb\tb\tX\t_\t_\t1\tdep\t_\t_",
                               "3\tc\tc\tX\t_\t_\t1\tdep\t_\tEntity=e1",
                               "4\td\td\tX\t_\t_\t1\tdep\t_\tEntity=e2"}),
                     std::nullopt, "en"),
      ValidationError);
  CHECK_THROWS_AS(
      ParseReDataset(Sentence("none", {"1\ta\ta\tX\t_\t_\t0\troot\t_\t_"}),
                     std::nullopt, "en"),
      ValidationError);
}

TEST_CASE("word order changes surface vectors only") {
  LexicalResources res = Resources();
  WordEmbedder embed(&res, {});
  std::vector<REInstance> pair = Instances("word_order.conllu");
  REQUIRE(pair.size() == 2);
  CHECK(BuildVud(pair[0], embed, FeatureConfig{}) ==
        BuildVud(pair[1], embed, FeatureConfig{}));
  CHECK(BuildVo(pair[0], embed, FeatureConfig{}) !=
        BuildVo(pair[1], embed, FeatureConfig{}));
}

TEST_CASE("property: fixed shape, no NaN, order invariance") {
  testing::Rng rng(59);
  LexicalResources res;
  std::string text;
  std::normal_distribution<double> gauss;
  for (int w = 0; w < 12; ++w) {
    text += "v" + std::to_string(w);
    for (int i = 0; i < 4; ++i) text += " " + FormatDouble(gauss(rng));
    text += "\n";
  }
  res.stores.emplace("en", ParseEmbeddings(text, "en"));
  WordEmbedder embed(&res, {});
  for (int trial = 0; trial < 200; ++trial) {
    const int n = testing::Uniform(rng, 2, 12);
    DepTree base =
        testing::RandomDepTree(rng, n, {"nsubj", "obj", "amod", "punct"});
    int e1 = testing::Uniform(rng, 1, n);
    int e2 = testing::Uniform(rng, 1, n - 1);
    if (e2 >= e1) ++e2;
    std::vector<Token> tokens = base.tokens();
    for (Token &t : tokens) {
      // Some words are out of vocabulary on purpose.
      t.lemma = "v" + std::to_string(testing::Uniform(rng, 0, 14));
      t.upos = t.deprel == "punct" ? "PUNCT" : "NOUN";
      if (t.id == e1) t.misc = {{"Entity", "e1"}};
      if (t.id == e2) t.misc = {{"Entity", "e2"}};
    }
    REInstance inst;
    inst.dep_tree = DepTree("r", tokens);
    inst.language = "en";
    LocateEntities(&inst);

    // Same tree under a random permutation of surface positions.
    std::vector<int> perm(n + 1, 0);
    for (int i = 1; i <= n; ++i) perm[i] = i;
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    std::vector<Token> moved(n);
    for (const Token &t : tokens) {
      Token m = t;
      m.id = perm[t.id];
      m.head = perm[t.head];
      moved[m.id - 1] = m;
    }
    REInstance shuffled;
    shuffled.dep_tree = DepTree("r", moved);
    shuffled.language = "en";
    LocateEntities(&shuffled);

    Vec vo = BuildVo(inst, embed, FeatureConfig{});
    Vec vud = BuildVud(inst, embed, FeatureConfig{});
    CHECK(vo.size() == 20);
    CHECK(vud.size() == 20);
    for (double x : vo) CHECK(std::isfinite(x));
    for (double x : vud) CHECK(std::isfinite(x));
    CHECK(BuildVud(shuffled, embed, FeatureConfig{}) == vud);
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace udtk
