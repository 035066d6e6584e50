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

#include "udtk/commands.h"

#include <filesystem>
#include <map>
#include <set>

#include "udtk/dataset.h"
#include "udtk/error.h"
#include "udtk/kernels.h"
#include "udtk/treebank.h"
#include "udtk/treeform.h"
#include "udtk/util.h"

namespace udtk {

namespace {

constexpr const char *kPredictionsHeader = "id\tgold\tpredicted\tdecisions";

void Log(const CommandOptions &options, const std::string &message) {
  if (options.verbose && options.log != nullptr) {
    *options.log << message << "\n";
  }
}

void WriteArtifact(const std::string &path, std::string_view contents) {
  std::filesystem::path parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(parent, ec);
    if (ec) {
      throw IoError("cannot create directory " + parent.string() + ": " +
                    ec.message());
    }
  }
  WriteFile(path, contents);
}

std::string LabelCounts(const std::vector<std::string> &labels) {
  std::map<std::string, int> counts;
  for (const std::string &l : labels) ++counts[l];
  std::string out;
  for (const auto &[label, n] : counts) {
    if (!out.empty()) out += ", ";
    out += (label.empty() ? std::string("<unlabeled>") : label) + ": " +
           std::to_string(n);
  }
  return out;
}

std::set<int> AllTokens(const DepTree &tree) {
  std::set<int> all;
  for (int i = 1; i <= tree.size(); ++i) all.insert(i);
  return all;
}

bool HasEntityMarks(const DepTree &tree) {
  bool e1 = false, e2 = false;
  for (const Token &t : tree.tokens()) {
    std::optional<std::string> v = FindAttribute(t.misc, "Entity");
    e1 = e1 || v == "e1";
    e2 = e2 || v == "e2";
  }
  return e1 && e2;
}

}  // namespace

GramFormat ParseGramFormat(std::string_view name) {
  if (name == "tsv") return GramFormat::kTsv;
  if (name == "binary") return GramFormat::kBinary;
  throw UsageError("unknown Gram format '" + std::string(name) +
                   "' (expected tsv or binary)");
}

GramArtifact RunGram(const RunConfig &config, std::string_view split,
                     GramFormat format, const std::optional<std::string> &out,
                     const CommandOptions &options) {
  Pipeline pipeline(config);
  std::optional<EntityVocabulary> vocab;
  TaskData data = pipeline.Load(split, config.kernel, &vocab);
  Log(options, "loaded " + std::to_string(data.inputs.size()) +
                   " instances from the " + std::string(split) + " split");
  std::vector<PreparedInstance> prepared =
      pipeline.Prepare(config.kernel, data.inputs, options.threads);
  TreeKernelCache cache;
  GramArtifact artifact;
  artifact.gram =
      ComputeGram(config.kernel, prepared, options.threads, &cache);
  const bool tsv = format == GramFormat::kTsv;
  artifact.path = out ? *out
                      : config.output.Resolve(config.output.gram +
                                              (tsv ? ".tsv" : ".bin"));
  artifact.manifest_path = artifact.path + ".manifest.json";
  WriteArtifact(artifact.path, tsv ? GramToTsv(artifact.gram)
                                   : GramToBinary(artifact.gram));
  WriteArtifact(artifact.manifest_path,
                GramManifest(artifact.gram, config.kernel,
                             tsv ? "tsv" : "binary"));
  Log(options, "wrote " + artifact.path);
  return artifact;
}

SvmModel TrainFromConfig(const RunConfig &config,
                         const CommandOptions &options) {
  Pipeline pipeline(config);
  std::optional<EntityVocabulary> vocab;
  TaskData data = pipeline.Load("train", config.kernel, &vocab);
  for (size_t i = 0; i < data.labels.size(); ++i) {
    if (data.labels[i].empty()) {
      throw ConfigError("sentence '" + data.inputs[i].id +
                        "': missing '# label = <class>' comment");
    }
  }
  Log(options, "training on " + std::to_string(data.inputs.size()) +
                   " instances (" + LabelCounts(data.labels) + ")");
  std::vector<PreparedInstance> prepared =
      pipeline.Prepare(config.kernel, data.inputs, options.threads);
  TreeKernelCache cache;
  GramMatrix gram =
      ComputeGram(config.kernel, prepared, options.threads, &cache);
  const bool binary = config.task == Task::kPi;
  SvmModel model = TrainModel(gram, data.labels, data.inputs, config.svm,
                              binary, binary ? kPositiveLabel : "");
  model.task = ToString(config.task);
  model.spec = config.kernel;
  if (config.kernel.type == KernelType::kComposite &&
      config.kernel.composite.feature_mode == FeatureMode::kEntity) {
    model.entity_vocabulary = vocab;
  }
  model.training_meta["language"] = config.train_language;
  Log(options, "model has " + std::to_string(model.support_inputs.size()) +
                   " support instances");
  return model;
}

SvmModel RunTrain(const RunConfig &config,
                  const std::optional<std::string> &model_path,
                  const CommandOptions &options) {
  SvmModel model = TrainFromConfig(config, options);
  std::string path =
      model_path ? *model_path : config.output.Resolve(config.output.model);
  if (!path.empty()) {
    WriteArtifact(path, ModelToJson(model));
    Log(options, "wrote " + path);
  }
  return model;
}

std::vector<Prediction> PredictInputs(const SvmModel &model,
                                      Pipeline *pipeline,
                                      const std::vector<KernelInput> &inputs,
                                      int threads) {
  std::vector<PreparedInstance> support =
      pipeline->Prepare(model.spec, model.support_inputs, threads);
  std::vector<PreparedInstance> test =
      pipeline->Prepare(model.spec, inputs, threads);
  TreeKernelCache cache;
  GramMatrix cross = ComputeCross(model.spec, test, support, threads, &cache);
  std::vector<Prediction> out;
  out.reserve(inputs.size());
  for (int i = 0; i < cross.rows; ++i) {
    std::vector<double> row(cross.values.begin() + i * cross.cols,
                            cross.values.begin() + (i + 1) * cross.cols);
    out.push_back(model.Predict(row));
  }
  return out;
}

void CheckCompatible(const SvmModel &model, const RunConfig &config) {
  if (model.task != ToString(config.task)) {
    throw IncompatibleError("model was trained for task '" + model.task +
                            "' but the config runs task '" +
                            ToString(config.task) + "'");
  }
  const std::string want = Fingerprint(config.kernel);
  const std::string have = Fingerprint(model.spec);
  if (want != have) {
    throw IncompatibleError("kernel fingerprint mismatch: model " + have +
                            ", config " + want);
  }
}

std::vector<PredictionRecord> PredictFromConfig(const RunConfig &config,
                                                const SvmModel &model,
                                                const CommandOptions &options) {
  CheckCompatible(model, config);
  Pipeline pipeline(config);
  std::optional<EntityVocabulary> vocab = model.entity_vocabulary;
  TaskData data = pipeline.Load("test", model.spec, &vocab);
  Log(options, "predicting " + std::to_string(data.inputs.size()) +
                   " instances");
  std::vector<Prediction> predictions =
      PredictInputs(model, &pipeline, data.inputs, options.threads);
  std::vector<PredictionRecord> records;
  for (size_t i = 0; i < predictions.size(); ++i) {
    records.push_back({data.inputs[i].id, data.labels[i], predictions[i]});
  }
  return records;
}

std::string PredictionsToTsv(const SvmModel &model,
                             const std::vector<PredictionRecord> &records) {
  std::string out = std::string(kPredictionsHeader) + "\n";
  for (const PredictionRecord &r : records) {
    out += r.id + "\t" + r.gold + "\t" + r.prediction.label + "\t";
    const std::vector<double> &d = r.prediction.decisions;
    for (size_t k = 0; k < d.size(); ++k) {
      const std::string &label = model.binary
                                     ? model.labels[model.positive_index]
                                     : model.labels[k];
      if (k > 0) out += ' ';
      out += label + "=" + FormatDouble(d[k]);
    }
    out += "\n";
  }
  return out;
}

std::vector<PredictionRecord> PredictionsFromTsv(std::string_view text,
                                                 std::string_view source) {
  std::vector<PredictionRecord> out;
  int line_no = 0;
  for (std::string_view line : Split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line == kPredictionsHeader) continue;
    std::vector<std::string_view> cols = Split(line, '\t');
    if (cols.size() < 3) {
      throw FormatError(std::string(source) + ":" + std::to_string(line_no) +
                        ": expected id, gold and predicted columns");
    }
    PredictionRecord r;
    r.id = std::string(cols[0]);
    r.gold = std::string(cols[1]);
    r.prediction.label = std::string(cols[2]);
    out.push_back(std::move(r));
  }
  if (out.empty()) throw FormatError(std::string(source) + ": no predictions");
  return out;
}

std::vector<PredictionRecord> RunPredict(
    const RunConfig &config, const std::optional<std::string> &model_path,
    const std::optional<std::string> &predictions_path,
    const CommandOptions &options) {
  SvmModel model = LoadModel(
      model_path ? *model_path : config.output.Resolve(config.output.model));
  std::vector<PredictionRecord> records =
      PredictFromConfig(config, model, options);
  std::string path = predictions_path
                         ? *predictions_path
                         : config.output.Resolve(config.output.predictions);
  WriteArtifact(path, PredictionsToTsv(model, records));
  Log(options, "wrote " + path);
  return records;
}

EvalReport RunEval(const RunConfig &config,
                   const std::optional<std::string> &model_path,
                   const std::optional<std::string> &predictions_path,
                   const std::optional<std::string> &report_stem,
                   const CommandOptions &options) {
  std::vector<PredictionRecord> records;
  if (predictions_path) {
    records = PredictionsFromTsv(ReadFile(*predictions_path),
                                 *predictions_path);
  } else {
    SvmModel model = LoadModel(
        model_path ? *model_path : config.output.Resolve(config.output.model));
    records = PredictFromConfig(config, model, options);
  }
  std::vector<std::string> gold, predicted;
  for (const PredictionRecord &r : records) {
    if (r.gold.empty()) {
      throw ConfigError("instance '" + r.id + "' has no gold label");
    }
    gold.push_back(r.gold);
    predicted.push_back(r.prediction.label);
  }
  EvalReport report = Evaluate(gold, predicted, config.eval);
  std::string stem =
      report_stem ? *report_stem : config.output.Resolve(config.output.report);
  WriteArtifact(stem + ".txt", RenderReport(report));
  WriteArtifact(stem + ".json", ReportToJson(report));
  Log(options, "wrote " + stem + ".txt and " + stem + ".json");
  return report;
}

TransformOp ParseTransformOp(std::string_view name) {
  if (name == "lct") return TransformOp::kLct;
  if (name == "pet") return TransformOp::kPet;
  if (name == "mwe") return TransformOp::kMwe;
  throw UsageError("unknown transform op '" + std::string(name) +
                   "' (valid ops: lct, pet, mwe)");
}

std::string RunTransform(TransformOp op, std::string_view conllu,
                         const std::optional<std::string> &constituency,
                         const FeatureConfig &features, bool conllu_output,
                         std::string_view source) {
  const LctOptions lct{features.use_lemma};
  std::string out;
  if (op == TransformOp::kPet) {
    if (!constituency) {
      throw UsageError("transform --op pet needs --constituency");
    }
    for (const REInstance &inst :
         ParseReDataset(conllu, std::string_view(*constituency), "", source)) {
      out += ToBracketed(
                 ExtractPet(*inst.const_tree, inst.e1_span, inst.e2_span)) +
             "\n";
    }
    return out;
  }
  for (const DepTree &tree : ParseConllu(conllu, source)) {
    RequireValid(tree);
    if (op == TransformOp::kLct) {
      out += ToBracketed(ToLct(tree, lct)) + "\n";
      continue;
    }
    std::set<int> targets = AllTokens(tree);
    if (features.mwe.scope == MweScope::kSdpAndDependents &&
        HasEntityMarks(tree)) {
      int e1 = LocateEntity(tree, "e1").head;
      int e2 = LocateEntity(tree, "e2").head;
      targets = MweTargets(tree, e1, e2);
    }
    MweCollapse collapsed = CollapseMwe(tree, features.mwe, targets);
    out += conllu_output ? WriteConllu(collapsed.tree)
                         : ToBracketed(ToLct(collapsed.tree, lct)) + "\n";
  }
  return out;
}

std::string ValidateConllu(std::string_view conllu, std::string_view source,
                           bool *ok) {
  std::vector<DepTree> trees = ParseConllu(conllu, source);
  std::string out;
  int invalid = 0;
  for (const DepTree &t : trees) {
    std::vector<std::string> problems = Validate(t);
    if (problems.empty()) {
      out += t.sent_id() + "\tok\n";
    } else {
      ++invalid;
      out += t.sent_id() + "\tinvalid: " + Join(problems, "; ") + "\n";
    }
  }
  out += std::to_string(trees.size()) + " sentences, " +
         std::to_string(invalid) + " invalid\n";
  if (ok != nullptr) *ok = invalid == 0;
  return out;
}

std::string ValidateConfig(const RunConfig &config) {
  CheckFilesExist(config);
  config.kernel.Validate();
  EmbedderOptions embedder = EmbedderOptionsForSpec(
      config.kernel, config.pivot_language, config.lowercase);
  std::string out = "task " + ToString(config.task) + ", kernel " +
                    Fingerprint(config.kernel) + "\n";
  for (const char *split : {"train", "test"}) {
    if (config.split(split).empty()) continue;
    RequireSplit(config, split);
    const SplitPaths &paths = config.split(split);
    const std::string &language = config.language(split);
    std::vector<std::string> labels;
    switch (config.task) {
      case Task::kTree:
        for (const DepTree &t :
             ParseConllu(ReadFile(paths.conllu[0]), paths.conllu[0])) {
          RequireValid(t);
          labels.push_back(t.Metadata("label").value_or(""));
        }
        break;
      case Task::kPi: {
        std::vector<DepTree> a =
            ParseConllu(ReadFile(paths.conllu[0]), paths.conllu[0]);
        std::vector<DepTree> b =
            paths.conllu.size() > 1
                ? ParseConllu(ReadFile(paths.conllu[1]), paths.conllu[1])
                : a;
        for (const PIInstance &p : ParsePiDataset(ReadFile(*paths.pairs), a,
                                                  b, language, *paths.pairs)) {
          labels.push_back(p.label ? kPositiveLabel : kNegativeLabel);
        }
        break;
      }
      case Task::kRe: {
        std::optional<std::string> constituency;
        if (config.kernel.type == KernelType::kComposite &&
            config.kernel.composite.UsesConstituency()) {
          constituency = paths.constituency;
        }
        for (const REInstance &inst :
             LoadReDataset(paths.conllu[0], constituency, language)) {
          labels.push_back(inst.label);
        }
        break;
      }
    }
    if (UsesWordVectors(config.kernel)) {
      const std::string &store =
          embedder.mode == EmbeddingMode::kPivotTranslate
              ? embedder.pivot_language
              : language;
      if (!config.embeddings.count(store)) {
        throw ConfigError("embeddings: no file configured for language '" +
                          store + "' (set paths.embeddings." + store + ")");
      }
      if (embedder.mode == EmbeddingMode::kPivotTranslate &&
          language != embedder.pivot_language &&
          !config.dictionaries.count({language, embedder.pivot_language})) {
        throw ConfigError("dictionaries: no file configured for '" + language +
                          "-" + embedder.pivot_language + "'");
      }
    }
    out += std::string(split) + ": " + std::to_string(labels.size()) +
           " instances (" + LabelCounts(labels) + ")\n";
  }
  return out;
}

std::string RunDelta(std::string_view tree1, std::string_view tree2,
                     const TreeKernelParams &params) {
  LabeledTree a = ParseLabeledTree(tree1);
  LabeledTree b = ParseLabeledTree(tree2);
  if (params.kind == TreeKernelKind::kSptk &&
      (!params.sigma || params.sigma->mode != SigmaMode::kLabelIndicator)) {
    throw UsageError(
        "delta supports SPTK only with the label_indicator similarity");
  }
  DeltaMatrix d = ComputeDeltaMatrix(a, b, params);
  std::vector<std::string> rows = PostOrderLabels(a);
  std::vector<std::string> cols = PostOrderLabels(b);
  std::string out;
  for (const std::string &c : cols) out += "\t" + c;
  out += "\n";
  for (int i = 0; i < d.rows; ++i) {
    out += rows[i];
    for (int j = 0; j < d.cols; ++j) out += "\t" + FormatDouble(d.at(i, j));
    out += "\n";
  }
  return out;
}

}  // namespace udtk
