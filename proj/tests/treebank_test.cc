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
#include <set>
#include <string>

#include "doctest.h"
#include "support.h"
#include "udtk/error.h"
#include "udtk/treebank.h"

namespace udtk {
namespace {

using testing::ReadFixture;

int IdOf(const DepTree &t, const std::string &form) {
  for (const Token &tok : t.tokens()) {
    if (tok.form == form) return tok.id;
  }
  return 0;
}

// True when some report line starts with `what`.
bool Reports(const std::vector<std::string> &report, const std::string &what) {
  return std::any_of(report.begin(), report.end(), [&](const std::string &r) {
    return r.rfind(what, 0) == 0;
  });
}

std::string Row(int id, const std::string &form, int head,
                const std::string &deprel) {
  return std::to_string(id) + "\t" + form + "\t" + form + "\tX\t_\t_\t" +
         std::to_string(head) + "\t" + deprel + "\t_\t_\n";
}

TEST_SUITE("treebank") {

TEST_CASE("two-line sentence") {
  std::vector<DepTree> trees = ParseConllu(
      "1\tdogs\tdog\tNOUN\t_\t_\t2\tnsubj\t_\t_\n"
      "2\tbark\tbark\tVERB\t_\t_\t0\troot\t_\t_\n");
  REQUIRE(trees.size() == 1);
  CHECK(trees[0].Root() == 2);
  CHECK(trees[0].Children(2) == std::vector<int>{1});
  CHECK(trees[0].token(1).lemma == "dog");
  CHECK(!trees[0].token(1).xpos.has_value());
}

TEST_CASE("range lines are skipped") {
  std::vector<DepTree> trees = ReadFixture("range.conllu");
  REQUIRE(trees.size() == 1);
  CHECK(trees[0].size() == 2);
  CHECK(trees[0].token(1).form == "do");
}

TEST_CASE("memo sentence edges") {
  DepTree t = ReadFixture("fig1a.conllu").at(0);
  const Token &memo = t.token(IdOf(t, "memo"));
  CHECK(memo.deprel == "nsubj");
  CHECK(memo.head == IdOf(t, "presents"));
  CHECK(t.token(IdOf(t, "details")).deprel == "obj");
  CHECK(t.Metadata("text").value() ==
        "The memo presents details about the lineup management");
}

TEST_CASE("validate") {
  SUBCASE("two-node cycle") {
    DepTree t =
        ParseConllu(Row(1, "a", 2, "dep") + Row(2, "b", 1, "dep")).at(0);
    auto report = Validate(t);
    CHECK(Reports(report, "cycle"));
    CHECK(Reports(report, "no root"));
  }
  SUBCASE("two roots") {
    DepTree t = ParseConllu(Row(1, "a", 0, "root") + Row(2, "b", 0, "root"))
                    .at(0);
    auto report = Validate(t);
    CHECK(Reports(report, "multiple roots"));
    CHECK_THROWS_AS(RequireValid(t), ValidationError);
  }
  SUBCASE("dangling head and self loop") {
    DepTree t = ParseConllu(Row(1, "a", 0, "root") + Row(2, "b", 7, "dep") +
                            Row(3, "c", 3, "dep"))
                    .at(0);
    auto report = Validate(t);
    CHECK(Reports(report, "dangling head"));
    CHECK(Reports(report, "self loop"));
  }
  SUBCASE("memo sentence is valid") {
    CHECK(Validate(ReadFixture("fig1a.conllu").at(0)).empty());
  }
}

TEST_CASE("subtree tokens") {
  DepTree t = ReadFixture("fig1a.conllu").at(0);
  std::vector<int> all(t.size());
  for (int i = 0; i < t.size(); ++i) all[i] = i + 1;
  CHECK(SubtreeTokens(t, t.Root()) == all);
  CHECK(SubtreeTokens(t, 1) == std::vector<int>{1});
  CHECK(SubtreeTokens(t, IdOf(t, "memo")) == std::vector<int>{1, 2});
  std::vector<std::string> forms;
  for (int id : SubtreeTokens(t, IdOf(t, "details"))) {
    forms.push_back(t.token(id).form);
  }
  CHECK(forms == std::vector<std::string>{"details", "about", "the", "lineup",
                                          "management"});
  CHECK_THROWS_AS(SubtreeTokens(t, 42), LookupError);
}

TEST_CASE("parse errors name the line") {
  auto message = [](const std::string &text) {
    try {
      ParseConllu(text, "f.conllu");
    } catch (const ParseError &e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(Row(1, "a", 0, "root") + "2\tb\tb\n").find("f.conllu:2") !=
        std::string::npos);
  CHECK(message("1\ta\ta\tX\t_\t_\tzero\troot\t_\t_\n")
            .find("non-integer head") != std::string::npos);
  CHECK(message(Row(1, "a", 0, "root") + Row(1, "b", 1, "dep"))
            .find("duplicate token id") != std::string::npos);
}

TEST_CASE("synthetic sentence ids") {
  std::vector<DepTree> trees = ParseConllu(
      Row(1, "a", 0, "root") + "\n" + Row(1, "b", 0, "root"), "x.conllu");
  REQUIRE(trees.size() == 2);
  CHECK(trees[0].sent_id() == "x.conllu:1");
  CHECK(trees[1].sent_id() == "x.conllu:2");
}

TEST_CASE("round trip over fixtures") {
  for (const char *name :
       {"fig1a.conllu", "fig3b.conllu", "fig4.conllu", "three.conllu",
        "word_order.conllu", "range.conllu"}) {
    CAPTURE(name);
    std::vector<DepTree> trees = ReadFixture(name);
    std::vector<DepTree> again = ParseConllu(WriteConllu(trees), name);
    REQUIRE(again.size() == trees.size());
    for (size_t i = 0; i < trees.size(); ++i) {
      CHECK(again[i] == trees[i]);
      CHECK(again[i].tokens() == trees[i].tokens());
      CHECK(again[i].metadata() == trees[i].metadata());
    }
  }
}

TEST_CASE("property: random trees round trip, reach the root and partition") {
  testing::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    DepTree t = testing::RandomDepTree(rng, testing::Uniform(rng, 1, 12),
                                       {"nsubj", "obj", "fixed", "amod"});
    CAPTURE(WriteConllu(t));
    REQUIRE(Validate(t).empty());
    CHECK(ParseConllu(WriteConllu(t)).at(0) == t);

    int roots = 0;
    for (const Token &tok : t.tokens()) roots += tok.head == 0;
    CHECK(roots == 1);
    for (const Token &tok : t.tokens()) {
      int cur = tok.id, steps = 0;
      while (t.token(cur).head != 0 && steps <= t.size()) {
        cur = t.token(cur).head;
        ++steps;
      }
      CHECK(cur == t.Root());
    }

    std::vector<int> pieces = {t.Root()};
    for (int c : t.Children(t.Root())) {
      std::vector<int> sub = SubtreeTokens(t, c);
      pieces.insert(pieces.end(), sub.begin(), sub.end());
    }
    std::sort(pieces.begin(), pieces.end());
    CHECK(std::set<int>(pieces.begin(), pieces.end()).size() == pieces.size());
    CHECK(pieces == SubtreeTokens(t, t.Root()));
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace udtk
