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
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "support.h"
#include "udtk/commands.h"
#include "udtk/error.h"
#include "udtk/synthetic.h"
#include "udtk/treebank.h"
#include "udtk/util.h"

namespace udtk {
namespace {

RunConfig TreeConfig(const testing::TempDir &dir, const std::string &kernel) {
  std::string json = R"({"task": "tree", "kernel": )" + kernel +
                     R"(, "paths": {"train": {"conllu": ")" +
                     testing::DataPath("three.conllu") +
                     R"("}}, "output": {"dir": "out"}})";
  WriteFile(dir.File("run.json"), json);
  return LoadRunConfig(dir.File("run.json"));
}

bool Opened(const std::string &suffix) {
  for (const std::string &f : OpenedFiles()) {
    if (f.size() >= suffix.size() &&
        f.compare(f.size() - suffix.size(), suffix.size(), suffix) == 0) {
      return true;
    }
  }
  return false;
}

TEST_SUITE("commands") {

TEST_CASE("gram of a small treebank") {
  testing::TempDir dir("gram");
  RunConfig cfg = TreeConfig(dir, R"({"type": "tree", "tree": {"kind": "PTK"}})");
  GramArtifact a = RunGram(cfg, "train", GramFormat::kTsv, std::nullopt, {});
  REQUIRE(a.gram.rows == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(a.gram.at(i, i) == doctest::Approx(1.0).epsilon(1e-15));
  }
  CHECK(a.gram.row_ids == std::vector<std::string>{"s1", "s2", "s3"});
  // "dogs run" and "cats run" share the verb and the nsubj relation.
  CHECK(a.gram.at(0, 1) > 0);
  std::string first = ReadFile(a.path);
  std::string manifest = ReadFile(a.manifest_path);

  CommandOptions four;
  four.threads = 4;
  GramArtifact b = RunGram(cfg, "train", GramFormat::kTsv, std::nullopt, four);
  CHECK(ReadFile(b.path) == first);
  CHECK(ReadFile(b.manifest_path) == manifest);

  GramArtifact bin = RunGram(cfg, "train", GramFormat::kBinary,
                             dir.File("g.bin"), {});
  CHECK(GramFromBinary(ReadFile(bin.path)).values == a.gram.values);
  CHECK_THROWS_AS(ParseGramFormat("csv"), UsageError);

  RunConfig sptk = TreeConfig(dir, R"({"type": "tree", "tree": {"kind": "SPTK", "sigma": {"mode": "monolingual"}}})");
  CHECK_THROWS_WITH_AS(
      RunGram(sptk, "train", GramFormat::kTsv, std::nullopt, {}),
      doctest::Contains("embeddings"), ConfigError);
}

TEST_CASE("paraphrase training and prediction") {
  testing::TempDir dir("pi");
  WriteCorpus(SyntheticPi(5, 4, 4), dir.path().string());
  RunConfig cfg = LoadRunConfig(dir.File("config.json"));
  SvmModel model = RunTrain(cfg, std::nullopt, {});
  CHECK(model.binary);
  CHECK(model.support_inputs.size() <= 4);
  CHECK(std::filesystem::exists(cfg.output.Resolve(cfg.output.model)));

  std::vector<PredictionRecord> recs = RunPredict(cfg, std::nullopt,
                                                  std::nullopt, {});
  CHECK(recs.size() == 4);
  std::string tsv = ReadFile(cfg.output.Resolve(cfg.output.predictions));
  CHECK(tsv == PredictionsToTsv(model, recs));
  std::vector<PredictionRecord> back = PredictionsFromTsv(tsv, "p.tsv");
  REQUIRE(back.size() == recs.size());
  for (size_t i = 0; i < recs.size(); ++i) {
    CHECK(back[i].id == recs[i].id);
    CHECK(back[i].prediction.label == recs[i].prediction.label);
  }
  EvalReport r = RunEval(cfg, std::nullopt,
                         cfg.output.Resolve(cfg.output.predictions),
                         std::nullopt, {});
  CHECK(r.total == 4);
  CHECK(std::filesystem::exists(cfg.output.Resolve("report.txt")));
  CHECK(std::filesystem::exists(cfg.output.Resolve("report.json")));

  RunConfig other = cfg;
  other.kernel.tree.lambda = 0.9;
  CHECK_THROWS_AS(CheckCompatible(model, other), IncompatibleError);
  RunConfig tree = cfg;
  tree.task = Task::kTree;
  CHECK_THROWS_AS(CheckCompatible(model, tree), IncompatibleError);
  CHECK_NOTHROW(CheckCompatible(model, cfg));
}

TEST_CASE("relation training") {
  testing::TempDir dir("re");
  WriteCorpus(SyntheticRe(3, 30, 9), dir.path().string());
  RunConfig cfg = LoadRunConfig(dir.File("config.json"));
  REQUIRE(cfg.kernel.composite.variant == CompositeVariant::kCk2);

  ClearOpenedFiles();
  SvmModel model = TrainFromConfig(cfg, {});
  CHECK(model.labels.size() == 3);
  CHECK(model.classes.size() == 3);
  CHECK(model.entity_vocabulary.has_value() == false);
  CHECK(Opened("train.conllu"));
  CHECK(!Opened("train.mrg"));

  RunConfig ck1 = cfg;
  ck1.kernel.composite.variant = CompositeVariant::kCk1;
  ck1.kernel.composite.feature_mode = BoundFeatureMode(CompositeVariant::kCk1);
  ClearOpenedFiles();
  SvmModel with_pet = TrainFromConfig(ck1, {});
  CHECK(Opened("train.mrg"));
  CHECK(with_pet.classes.size() == 3);

  std::vector<PredictionRecord> recs = PredictFromConfig(cfg, model, {});
  CHECK(recs.size() == 9);
}

TEST_CASE("transform, validate and delta") {
  std::string fig1 = ReadFile(testing::DataPath("fig1a.conllu"));
  std::string lct = RunTransform(TransformOp::kLct, fig1, std::nullopt,
                                 FeatureConfig{}, false);
  CHECK(lct.rfind("(present (root) (VERB) (memo", 0) == 0);
  CHECK(std::count(lct.begin(), lct.end(), '\n') == 1);

  std::string fig4 = ReadFile(testing::DataPath("fig4.conllu"));
  std::string collapsed = RunTransform(TransformOp::kMwe, fig4, std::nullopt,
                                       FeatureConfig{}, true);
  std::vector<DepTree> trees = ParseConllu(collapsed, "collapsed");
  REQUIRE(trees.size() == 1);
  CHECK(trees[0].size() == 7);
  CHECK_THROWS_AS(ParseTransformOp("flatten"), UsageError);
  CHECK(ParseTransformOp("pet") == TransformOp::kPet);
  CHECK_THROWS_AS(RunTransform(TransformOp::kPet,
                               ReadFile(testing::DataPath("fig3b.conllu")),
                               std::nullopt, FeatureConfig{}, false),
                  Error);

  bool ok = false;
  std::string report = ValidateConllu(fig1, "fig1a", &ok);
  CHECK(ok);
  report = ValidateConllu(
      "# sent_id = bad\n1\ta\ta\tX\t_\t_\t2\tdep\t_\t_\n"
      "2\tb\tb\tX\t_\t_\t1\tdep\t_\t_\n\n",
      "bad", &ok);
  CHECK(!ok);
  CHECK(report.find("cycle") != std::string::npos);

  TreeKernelParams p = TreeKernelParams::Of(TreeKernelKind::kPtk);
  p.normalize = false;
  std::string table = RunDelta("(a (b) (c))", "(a (b))", p);
  CHECK(table.find("b") != std::string::npos);
  CHECK(std::count(table.begin(), table.end(), '\n') == 4);
}

}  // TEST_SUITE

}  // namespace
}  // namespace udtk
