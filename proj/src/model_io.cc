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

#include "json_util.h"
#include "udtk/error.h"
#include "udtk/learn.h"
#include "udtk/util.h"

namespace udtk {

namespace {

Json InputToJson(const KernelInput &in) {
  Json j;
  j["id"] = in.id;
  Json trees = Json::array();
  for (const LabeledTree &t : in.trees) trees.push_back(ToBracketed(t, true));
  j["trees"] = trees;
  j["languages"] = in.languages;
  if (in.pet) j["pet"] = ToBracketed(*in.pet, true);
  if (in.features) j["features"] = *in.features;
  return j;
}

KernelInput InputFromJson(const Json &j) {
  KernelInput in;
  in.id = j.at("id").get<std::string>();
  for (const Json &t : j.at("trees")) {
    in.trees.push_back(ParseLabeledTree(t.get<std::string>()));
  }
  in.languages = j.at("languages").get<std::vector<std::string>>();
  if (j.contains("pet")) in.pet = ParseLabeledTree(j["pet"].get<std::string>());
  if (j.contains("features")) {
    in.features = j["features"].get<std::vector<double>>();
  }
  return in;
}

}  // namespace

std::string ModelToJson(const SvmModel &model) {
  Json j;
  j["version"] = kModelVersion;
  j["task"] = model.task;
  j["kernel_spec"] = ToJson(model.spec);
  j["fingerprint"] = Fingerprint(model.spec);
  j["labels"] = model.labels;
  Json label_map = Json::object();
  for (size_t i = 0; i < model.labels.size(); ++i) {
    label_map[model.labels[i]] = static_cast<int>(i);
  }
  j["label_map"] = label_map;
  j["binary"] = model.binary;
  if (model.binary) j["positive_label"] = model.labels[model.positive_index];
  Json classes = Json::array();
  for (const ClassModel &c : model.classes) {
    classes.push_back({{"label", c.label},
                       {"bias", c.bias},
                       {"coeffs", c.coeffs},
                       {"support", c.support}});
  }
  j["classes"] = classes;
  Json instances = Json::array();
  for (const KernelInput &in : model.support_inputs) {
    instances.push_back(InputToJson(in));
  }
  j["support_instances"] = instances;
  if (model.entity_vocabulary) {
    j["entity_vocabulary"] = ToJson(*model.entity_vocabulary);
  }
  j["training_meta"] = model.training_meta;
  return j.dump(1) + "\n";
}

SvmModel ModelFromJson(std::string_view text) {
  Json j = ParseJson<LoadError>(text, "model");
  if (!j.is_object() || !j.contains("version")) {
    throw LoadError("model file has no version field");
  }
  if (!j["version"].is_string() || j["version"] != kModelVersion) {
    throw LoadError("unsupported model version " + j["version"].dump() +
                    " (expected \"" + kModelVersion + "\")");
  }
  SvmModel model;
  try {
    model.task = j.at("task").get<std::string>();
    model.spec = KernelSpecFromJson(j.at("kernel_spec"), "kernel_spec");
    model.labels = j.at("labels").get<std::vector<std::string>>();
    model.binary = j.at("binary").get<bool>();
    if (model.binary) {
      std::string pos = j.at("positive_label").get<std::string>();
      auto it = std::find(model.labels.begin(), model.labels.end(), pos);
      if (it == model.labels.end() || model.labels.size() != 2) {
        throw LoadError("binary model labels are inconsistent");
      }
      model.positive_index = static_cast<int>(it - model.labels.begin());
    }
    for (const Json &in : j.at("support_instances")) {
      model.support_inputs.push_back(InputFromJson(in));
    }
    for (const Json &c : j.at("classes")) {
      ClassModel cm;
      cm.label = c.at("label").get<std::string>();
      cm.bias = c.at("bias").get<double>();
      cm.coeffs = c.at("coeffs").get<std::vector<double>>();
      cm.support = c.at("support").get<std::vector<int>>();
      if (cm.coeffs.size() != cm.support.size()) {
        throw LoadError("class '" + cm.label +
                        "': coeffs and support differ in length");
      }
      for (int s : cm.support) {
        if (s < 0 || s >= static_cast<int>(model.support_inputs.size())) {
          throw LoadError("class '" + cm.label +
                          "': support index out of range");
        }
      }
      model.classes.push_back(std::move(cm));
    }
    if (model.classes.size() != (model.binary ? 1 : model.labels.size())) {
      throw LoadError("model has " + std::to_string(model.classes.size()) +
                      " decision functions for " +
                      std::to_string(model.labels.size()) + " labels");
    }
    if (j.contains("entity_vocabulary")) {
      model.entity_vocabulary =
          EntityVocabularyFromJson(j["entity_vocabulary"], "entity_vocabulary");
    }
    if (j.contains("training_meta")) {
      model.training_meta =
          j["training_meta"].get<std::map<std::string, std::string>>();
    }
    std::string stored = j.value("fingerprint", "");
    if (!stored.empty() && stored != Fingerprint(model.spec)) {
      throw LoadError("stored fingerprint does not match the kernel spec");
    }
  } catch (const Json::exception &e) {
    throw LoadError(std::string("malformed model: ") + e.what());
  } catch (const LoadError &) {
    throw;
  } catch (const Error &e) {
    throw LoadError(std::string("malformed model: ") + e.what());
  }
  return model;
}

void SaveModel(const SvmModel &model, const std::string &path) {
  WriteFile(path, ModelToJson(model));
}

SvmModel LoadModel(const std::string &path) {
  std::string text;
  try {
    text = ReadFile(path);
  } catch (const IoError &e) {
    throw LoadError(e.what());
  }
  try {
    return ModelFromJson(text);
  } catch (const LoadError &e) {
    throw LoadError(path + ": " + e.what());
  }
}

}  // namespace udtk
