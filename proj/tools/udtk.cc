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

// Command-line front end.
//
//   udtk --config run.json gram --split train --format tsv
//   udtk --config run.json train
//   udtk --config run.json predict
//   udtk --config run.json eval
//   udtk transform --op lct --input sentences.conllu
//   udtk validate --input sentences.conllu
//   udtk delta --kind PTK "(a (b) (c))" "(a (b))"
//   udtk synth --task pi --out demo/

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "udtk/commands.h"
#include "udtk/config.h"
#include "udtk/error.h"
#include "udtk/synthetic.h"
#include "udtk/util.h"

namespace {

std::optional<std::string> Opt(const std::string &value) {
  if (value.empty()) return std::nullopt;
  return value;
}

// "@path" reads a file; anything else is taken literally.
std::string TreeArgument(const std::string &arg) {
  if (!arg.empty() && arg[0] == '@') return udtk::ReadFile(arg.substr(1));
  return arg;
}

int Fail(const std::string &category, const std::string &message) {
  std::cerr << "error[" << category << "]: " << message << "\n";
  return category == "usage" ? 2 : 1;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"udtk: tree kernels over Universal Dependencies"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string config_path;
  int threads = 1;
  bool verbose = false;
  app.add_option("--config", config_path, "Run configuration (JSON)");
  app.add_option("--threads", threads,
                 "Worker threads for kernel matrices (0: all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--verbose", verbose, "Progress messages on stderr");

  std::string split = "train", format = "tsv", out_path;
  CLI::App *gram = app.add_subcommand("gram", "Write a Gram matrix");
  gram->add_option("--split", split, "train or test");
  gram->add_option("--format", format, "tsv or binary");
  gram->add_option("--out", out_path, "Output path");

  std::string model_path;
  CLI::App *train = app.add_subcommand("train", "Train and save a model");
  train->add_option("--model", model_path, "Model path");

  CLI::App *predict =
      app.add_subcommand("predict", "Predict the test split");
  predict->add_option("--model", model_path, "Model path");
  predict->add_option("--out", out_path, "Predictions path");

  std::string predictions_path, report_stem;
  CLI::App *eval = app.add_subcommand("eval", "Score test predictions");
  eval->add_option("--model", model_path, "Model to run on the test split");
  eval->add_option("--predictions", predictions_path,
                   "Score an existing predictions file instead");
  eval->add_option("--report", report_stem,
                   "Report stem (<stem>.txt and <stem>.json)");

  std::string op, input, constituency;
  bool conllu_output = false;
  CLI::App *transform =
      app.add_subcommand("transform", "Print transformed trees");
  transform->add_option("--op", op, "lct, pet or mwe")->required();
  transform->add_option("--input", input, "CoNLL-U file")->required();
  transform->add_option("--constituency", constituency,
                        "Bracketed trees (pet)");
  transform->add_flag("--conllu", conllu_output,
                      "mwe: print the collapsed CoNLL-U");
  transform->add_option("--out", out_path, "Output path (default stdout)");

  CLI::App *validate = app.add_subcommand(
      "validate", "Check a CoNLL-U file or every dataset of a config");
  validate->add_option("--input", input, "CoNLL-U file");

  std::string kind = "PTK", tree1, tree2;
  double lambda = 0.4, mu = 0.4;
  CLI::App *delta =
      app.add_subcommand("delta", "Print the Delta table of two trees");
  delta->add_option("--kind", kind, "SST, PTK or SPTK (label indicator)");
  delta->add_option("--lambda", lambda, "Vertical decay");
  delta->add_option("--mu", mu, "Horizontal decay");
  delta->add_option("tree1", tree1, "Bracketed tree or @file")->required();
  delta->add_option("tree2", tree2, "Bracketed tree or @file")->required();

  std::string task = "pi", synth_dir;
  uint64_t seed = 1;
  int train_size = 0, test_size = 0;
  CLI::App *synth =
      app.add_subcommand("synth", "Write a small synthetic corpus");
  synth->add_option("--task", task, "pi or re");
  synth->add_option("--seed", seed, "Generator seed");
  synth->add_option("--train", train_size, "Training instances");
  synth->add_option("--test", test_size, "Test instances");
  synth->add_option("--out", synth_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    return Fail("usage", e.what());
  }

  udtk::CommandOptions options;
  options.threads = threads;
  options.verbose = verbose;
  options.log = &std::cerr;

  try {
    auto load_config = [&]() {
      if (config_path.empty()) {
        throw udtk::UsageError("--config is required for this command");
      }
      return udtk::LoadRunConfig(config_path);
    };
    auto emit = [&](const std::string &text) {
      if (out_path.empty()) {
        std::cout << text;
      } else {
        udtk::WriteFile(out_path, text);
      }
    };

    if (*gram) {
      udtk::GramArtifact a =
          udtk::RunGram(load_config(), split, udtk::ParseGramFormat(format),
                        Opt(out_path), options);
      std::cout << a.gram.rows << "x" << a.gram.cols << " -> " << a.path
                << "\n";
    } else if (*train) {
      udtk::RunConfig config = load_config();
      udtk::SvmModel model = udtk::RunTrain(config, Opt(model_path), options);
      std::cout << "trained " << model.classes.size() << " decision function"
                << (model.classes.size() == 1 ? "" : "s") << " over "
                << model.support_inputs.size() << " support instances -> "
                << (model_path.empty()
                        ? config.output.Resolve(config.output.model)
                        : model_path)
                << "\n";
    } else if (*predict) {
      udtk::RunConfig config = load_config();
      auto records =
          udtk::RunPredict(config, Opt(model_path), Opt(out_path), options);
      std::cout << records.size() << " predictions -> "
                << (out_path.empty()
                        ? config.output.Resolve(config.output.predictions)
                        : out_path)
                << "\n";
    } else if (*eval) {
      udtk::EvalReport report =
          udtk::RunEval(load_config(), Opt(model_path), Opt(predictions_path),
                        Opt(report_stem), options);
      std::cout << udtk::RenderReport(report);
    } else if (*transform) {
      const udtk::TransformOp transform_op = udtk::ParseTransformOp(op);
      udtk::FeatureConfig features;
      if (!config_path.empty()) {
        features = udtk::LoadRunConfig(config_path).kernel.features;
      }
      std::optional<std::string> trees;
      if (!constituency.empty()) trees = udtk::ReadFile(constituency);
      emit(udtk::RunTransform(transform_op, udtk::ReadFile(input), trees,
                              features, conllu_output, input));
    } else if (*validate) {
      if (!input.empty()) {
        bool ok = true;
        std::cout << udtk::ValidateConllu(udtk::ReadFile(input), input, &ok);
        return ok ? 0 : 1;
      }
      std::cout << udtk::ValidateConfig(load_config());
    } else if (*delta) {
      udtk::TreeKernelParams params =
          udtk::TreeKernelParams::Of(udtk::ParseTreeKernelKind(kind));
      params.lambda = lambda;
      params.mu = mu;
      if (params.kind == udtk::TreeKernelKind::kSptk) {
        udtk::SigmaConfig sigma;
        sigma.mode = udtk::SigmaMode::kLabelIndicator;
        params.sigma = sigma;
      }
      params.Validate();
      std::cout << udtk::RunDelta(TreeArgument(tree1), TreeArgument(tree2),
                                  params);
    } else if (*synth) {
      udtk::SyntheticCorpus corpus;
      if (task == "pi") {
        corpus = udtk::SyntheticPi(seed, train_size ? train_size : 40,
                                   test_size ? test_size : 40);
      } else if (task == "re") {
        corpus = udtk::SyntheticRe(seed, train_size ? train_size : 60,
                                   test_size ? test_size : 60);
      } else {
        throw udtk::UsageError("synth --task must be pi or re");
      }
      udtk::WriteCorpus(corpus, synth_dir);
      std::cout << "wrote " << corpus.size() << " files to " << synth_dir
                << "\n";
    }
  } catch (const udtk::Error &e) {
    return Fail(e.category(), e.what());
  } catch (const std::exception &e) {
    return Fail("internal", e.what());
  }
  return 0;
}
