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

#include "udtk/dataset.h"

#include <unordered_map>

#include "udtk/error.h"
#include "udtk/util.h"

namespace udtk {

std::vector<REInstance> ParseReDataset(
    std::string_view conllu, std::optional<std::string_view> constituency,
    const std::string &language, std::string_view source) {
  std::vector<DepTree> trees = ParseConllu(conllu, source);
  std::vector<ConstTree> consts;
  if (constituency) {
    consts = ParseBracketed(*constituency);
    if (consts.size() != trees.size()) {
      throw ValidationError(std::string(source) + ": " +
                            std::to_string(trees.size()) +
                            " sentences but " + std::to_string(consts.size()) +
                            " constituency trees");
    }
  }
  std::vector<REInstance> out;
  out.reserve(trees.size());
  for (size_t i = 0; i < trees.size(); ++i) {
    REInstance inst;
    inst.id = trees[i].sent_id();
    inst.language = language;
    const std::string where = "sentence '" + inst.id + "': ";
    RequireValid(trees[i]);
    std::optional<std::string> relation = trees[i].Metadata("relation");
    if (!relation || relation->empty()) {
      throw ValidationError(where + "missing '# relation = <label>' comment");
    }
    inst.label = *relation;
    inst.dep_tree = std::move(trees[i]);
    LocateEntities(&inst);
    if (inst.e1 == inst.e2) {
      throw ValidationError(where + "e1 and e2 share a head token");
    }
    if (constituency) {
      ConstTree &c = consts[i];
      c.ComputeSpans();
      if (c.LeafCount() != inst.dep_tree.size()) {
        throw ValidationError(where + "constituency tree has " +
                              std::to_string(c.LeafCount()) +
                              " leaves for " +
                              std::to_string(inst.dep_tree.size()) +
                              " tokens");
      }
      inst.const_tree = std::move(c);
    }
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<REInstance> LoadReDataset(
    const std::string &conllu_path,
    const std::optional<std::string> &constituency_path,
    const std::string &language) {
  std::string conllu = ReadFile(conllu_path);
  std::optional<std::string> constituency;
  if (constituency_path) constituency = ReadFile(*constituency_path);
  std::optional<std::string_view> view;
  if (constituency) view = *constituency;
  return ParseReDataset(conllu, view, language, conllu_path);
}

std::vector<PIInstance> ParsePiDataset(std::string_view pairs,
                                       const std::vector<DepTree> &a_side,
                                       const std::vector<DepTree> &b_side,
                                       const std::string &language,
                                       std::string_view source) {
  auto index = [](const std::vector<DepTree> &trees) {
    std::unordered_map<std::string, const DepTree *> out;
    for (const DepTree &t : trees) out.emplace(t.sent_id(), &t);
    return out;
  };
  auto a_index = index(a_side);
  auto b_index = index(b_side);
  auto find = [&](const auto &idx, std::string_view id, int line_no) {
    auto it = idx.find(std::string(id));
    if (it == idx.end()) {
      throw LookupError(std::string(source) + ":" + std::to_string(line_no) +
                        ": unknown sentence id '" + std::string(id) + "'");
    }
    return it->second;
  };
  std::vector<PIInstance> out;
  int line_no = 0;
  for (std::string_view line : Split(pairs, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty() || line.front() == '#') continue;
    std::vector<std::string_view> cols = Split(line, '\t');
    if (cols.size() != 3) {
      throw FormatError(std::string(source) + ":" + std::to_string(line_no) +
                        ": expected 3 tab-separated fields, found " +
                        std::to_string(cols.size()));
    }
    std::string label = AsciiLower(Trim(cols[0]));
    PIInstance inst;
    if (label == "1" || label == "true") {
      inst.label = true;
    } else if (label == "0" || label == "false") {
      inst.label = false;
    } else {
      throw FormatError(std::string(source) + ":" + std::to_string(line_no) +
                        ": label must be 1/0 or true/false, got '" +
                        std::string(cols[0]) + "'");
    }
    const DepTree *a = find(a_index, Trim(cols[1]), line_no);
    const DepTree *b = find(b_index, Trim(cols[2]), line_no);
    for (const DepTree *t : {a, b}) {
      RequireValid(*t);
    }
    inst.id = a->sent_id() + "+" + b->sent_id();
    inst.tree_a = *a;
    inst.tree_b = *b;
    inst.language_a = language;
    inst.language_b = language;
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace udtk
