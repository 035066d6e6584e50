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

// Task dataset readers.
//
// Relation extraction: CoNLL-U sentences carrying "# relation = <label>"
// and MISC marks Entity=e1 / Entity=e2 on the entity tokens. An optional
// bracketed constituency file holds one tree per sentence, in the same
// order, whose leaves are the sentence tokens.
//
// Paraphrase identification: "label<TAB>sent_id_a<TAB>sent_id_b" lines
// referring to sentences of one or two CoNLL-U files. Labels are 1/0 or
// true/false.

#ifndef UDTK_DATASET_H_
#define UDTK_DATASET_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "udtk/features.h"
#include "udtk/treebank.h"

namespace udtk {

// Throws ValidationError naming the sentence for invalid trees, missing
// relation comments, missing entities or misaligned constituency trees.
std::vector<REInstance> ParseReDataset(
    std::string_view conllu, std::optional<std::string_view> constituency,
    const std::string &language, std::string_view source = "<re>");

std::vector<REInstance> LoadReDataset(
    const std::string &conllu_path,
    const std::optional<std::string> &constituency_path,
    const std::string &language);

// Sentences named by the a side are looked up in `a_side`, the b side in
// `b_side`. Throws FormatError for malformed lines and LookupError for
// unknown sentence ids.
std::vector<PIInstance> ParsePiDataset(std::string_view pairs,
                                       const std::vector<DepTree> &a_side,
                                       const std::vector<DepTree> &b_side,
                                       const std::string &language,
                                       std::string_view source = "<pairs>");

// Canonical PI class names.
inline constexpr const char *kPositiveLabel = "1";
inline constexpr const char *kNegativeLabel = "0";

}  // namespace udtk

#endif  // UDTK_DATASET_H_
