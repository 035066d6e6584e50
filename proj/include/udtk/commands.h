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

// The operations behind the command-line subcommands. Each is a function
// of its config and input files; artifacts are written only to the paths
// named by the caller or the config.

#ifndef UDTK_COMMANDS_H_
#define UDTK_COMMANDS_H_

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "udtk/config.h"
#include "udtk/learn.h"
#include "udtk/metrics.h"
#include "udtk/pipeline.h"

namespace udtk {

struct CommandOptions {
  int threads = 1;
  bool verbose = false;
  // Progress messages when verbose; may be null.
  std::ostream *log = nullptr;
};

enum class GramFormat { kTsv, kBinary };

// Throws UsageError.
GramFormat ParseGramFormat(std::string_view name);

struct GramArtifact {
  GramMatrix gram;
  std::string path;
  std::string manifest_path;
};

// Writes the Gram matrix of one split and its manifest. `out` defaults to
// output.gram plus ".tsv" or ".bin"; the manifest adds ".manifest.json".
GramArtifact RunGram(const RunConfig &config, std::string_view split,
                     GramFormat format, const std::optional<std::string> &out,
                     const CommandOptions &options);

// Trains on the train split. The model is written to `model_path`
// (default output.model) unless it is the empty string.
SvmModel TrainFromConfig(const RunConfig &config,
                         const CommandOptions &options);
SvmModel RunTrain(const RunConfig &config,
                  const std::optional<std::string> &model_path,
                  const CommandOptions &options);

struct PredictionRecord {
  std::string id;
  std::string gold;
  Prediction prediction;
};

// Kernel rows between test inputs and the model's support instances,
// followed by the decision function.
std::vector<Prediction> PredictInputs(const SvmModel &model,
                                      Pipeline *pipeline,
                                      const std::vector<KernelInput> &inputs,
                                      int threads);

// Throws IncompatibleError when the model's task or kernel fingerprint
// differs from the config.
void CheckCompatible(const SvmModel &model, const RunConfig &config);

// Predicts the test split.
std::vector<PredictionRecord> PredictFromConfig(const RunConfig &config,
                                                const SvmModel &model,
                                                const CommandOptions &options);

// "id<TAB>gold<TAB>predicted<TAB>label=value ..." per instance.
std::string PredictionsToTsv(const SvmModel &model,
                             const std::vector<PredictionRecord> &records);
// Reads ids, gold and predicted labels back. Throws FormatError.
std::vector<PredictionRecord> PredictionsFromTsv(std::string_view text,
                                                 std::string_view source);

// Loads `model_path` (default output.model), predicts the test split and
// writes the predictions TSV (default output.predictions).
std::vector<PredictionRecord> RunPredict(
    const RunConfig &config, const std::optional<std::string> &model_path,
    const std::optional<std::string> &predictions_path,
    const CommandOptions &options);

// Scores predictions: from `predictions_path` when given, else by running
// the model on the test split. Writes <stem>.txt and <stem>.json (default
// stem output.report).
EvalReport RunEval(const RunConfig &config,
                   const std::optional<std::string> &model_path,
                   const std::optional<std::string> &predictions_path,
                   const std::optional<std::string> &report_stem,
                   const CommandOptions &options);

enum class TransformOp { kLct, kPet, kMwe };

// Throws UsageError listing the valid operations.
TransformOp ParseTransformOp(std::string_view name);

// One bracketed tree per sentence. lct: the LCT of each sentence. pet: the
// path-enclosed constituency tree of each relation instance (needs
// `constituency`). mwe: the LCT after multiword collapse over the
// configured targets, or the collapsed CoNLL-U when `conllu_output`.
std::string RunTransform(TransformOp op, std::string_view conllu,
                         const std::optional<std::string> &constituency,
                         const FeatureConfig &features, bool conllu_output,
                         std::string_view source = "<input>");

// Checks trees of `conllu` and returns a report; `ok` is set to false when
// any tree is invalid.
std::string ValidateConllu(std::string_view conllu, std::string_view source,
                           bool *ok);

// Parses every dataset named by the config (relation metadata, entity
// marks, pairs, constituency alignment) and summarizes it.
std::string ValidateConfig(const RunConfig &config);

// Delta table of two annotated bracketed trees: a header row of the second
// tree's post-order labels, then one row per node of the first.
std::string RunDelta(std::string_view tree1, std::string_view tree2,
                     const TreeKernelParams &params);

}  // namespace udtk

#endif  // UDTK_COMMANDS_H_
