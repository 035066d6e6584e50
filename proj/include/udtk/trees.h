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

// Ordered labeled trees: the generic input of the kernel engine and the
// constituency trees read from bracketed files.

#ifndef UDTK_TREES_H_
#define UDTK_TREES_H_

#include <string>
#include <string_view>
#include <vector>

namespace udtk {

enum class NodeKind { kLexical, kSyntactic };

// Kernel-engine tree. Lexical nodes carry a POS tag (used by the node
// similarity); syntactic nodes carry grammatical labels.
struct LabeledTree {
  std::string label;
  NodeKind kind = NodeKind::kSyntactic;
  std::string pos_tag;
  std::vector<LabeledTree> children;

  static LabeledTree Syntactic(std::string label,
                               std::vector<LabeledTree> children = {});
  static LabeledTree Lexical(std::string label, std::string pos,
                             std::vector<LabeledTree> children = {});

  int NodeCount() const;
  int LexicalCount() const;

  bool operator==(const LabeledTree &other) const = default;
};

// Bracketed rendering "(label child ...)". With annotate=true, lexical
// labels are written as "label|POS" so ParseLabeledTree can restore kinds.
// Spaces, parentheses, '|' and '\' inside labels are backslash-escaped.
std::string ToBracketed(const LabeledTree &tree, bool annotate = false);

// Parses the annotated rendering. Throws ParseError.
LabeledTree ParseLabeledTree(std::string_view text);

// Constituency tree over surface positions. Leaves are words; every node
// covers the 1-based inclusive leaf span [start, end].
struct ConstTree {
  std::string label;
  std::vector<ConstTree> children;
  int start = 0;
  int end = 0;

  bool IsLeaf() const { return children.empty(); }
  // Assigns spans left to right beginning at first_position; returns the
  // next free position.
  int ComputeSpans(int first_position = 1);
  int LeafCount() const;
  std::vector<std::string> Leaves() const;
  int NodeCount() const;

  bool operator==(const ConstTree &other) const = default;
};

// Penn-style bracketed trees, one per non-blank line. An unlabeled outer
// bracket "( (S ...) )" is unwrapped. Throws ParseError with the offset of
// unbalanced brackets.
std::vector<ConstTree> ParseBracketed(std::string_view text);

std::string ToBracketed(const ConstTree &tree);

// Internal nodes become syntactic nodes; leaves become lexical nodes tagged
// with their parent's label.
LabeledTree ToLabeledTree(const ConstTree &tree);

}  // namespace udtk

#endif  // UDTK_TREES_H_
