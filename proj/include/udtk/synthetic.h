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

// Small template-generated corpora for smoke runs.
//
// Paraphrase pairs put an active-voice sentence next to an alternate
// construction of one of four templates ("Federer beat Nadal" / "Nadal was
// beaten by Federer"). Positive pairs use the same template and fillers;
// negative pairs put the active sentence next to an unrelated construction.
//
// Relation instances come from three templates: "the X caused the Y"
// (Cause-Effect(e1,e2)), "the X was caused by the Y" (Cause-Effect(e2,e1))
// and "the X sat near the Y" (Other), with optional adjectives. The test
// split draws part of its nouns from a vocabulary unseen in training.

#ifndef UDTK_SYNTHETIC_H_
#define UDTK_SYNTHETIC_H_

#include <cstdint>
#include <map>
#include <string>

namespace udtk {

// File name -> contents.
using SyntheticCorpus = std::map<std::string, std::string>;

// train.conllu, train.pairs, test.conllu, test.pairs and config.json
// (task pi, SM_TK over PTK).
SyntheticCorpus SyntheticPi(uint64_t seed, int train_pairs = 40,
                            int test_pairs = 40);

// train.conllu, train.mrg, test.conllu, test.mrg, en.vec and config.json
// (task re, CK2).
SyntheticCorpus SyntheticRe(uint64_t seed, int train_instances = 60,
                            int test_instances = 60);

// Writes every file under `dir`, creating it when needed.
void WriteCorpus(const SyntheticCorpus &corpus, const std::string &dir);

}  // namespace udtk

#endif  // UDTK_SYNTHETIC_H_
