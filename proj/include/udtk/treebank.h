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

// CoNLL-U reading, writing and validation of dependency trees.

#ifndef UDTK_TREEBANK_H_
#define UDTK_TREEBANK_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace udtk {

// Ordered key=value list, used for FEATS and MISC. An item without '=' is
// stored with an empty value.
using Attributes = std::vector<std::pair<std::string, std::string>>;

// Returns the value of the first item with the given key, if any.
std::optional<std::string> FindAttribute(const Attributes &attrs,
                                         std::string_view key);

// One syntactic word of a CoNLL-U sentence. Absent fields ("_") are empty.
struct Token {
  int id = 0;
  std::string form;
  std::string lemma;
  std::string upos;
  std::optional<std::string> xpos;
  Attributes feats;
  int head = 0;
  std::string deprel;
  Attributes misc;

  bool operator==(const Token &other) const = default;
};

// A sentence with its dependency tree. Construction does not enforce tree
// validity (Validate reports violations); the children index is always
// consistent with the head fields.
class DepTree {
 public:
  DepTree() = default;
  DepTree(std::string sent_id, std::vector<Token> tokens,
          std::vector<std::pair<std::string, std::string>> metadata = {},
          std::optional<std::string> text = std::nullopt);

  const std::string &sent_id() const { return sent_id_; }
  const std::optional<std::string> &text() const { return text_; }
  // Comment lines in file order. "# key = value" lines are split; other
  // comments are stored with an empty value.
  const std::vector<std::pair<std::string, std::string>> &metadata() const {
    return metadata_;
  }
  std::optional<std::string> Metadata(std::string_view key) const;

  const std::vector<Token> &tokens() const { return tokens_; }
  int size() const { return static_cast<int>(tokens_.size()); }

  // Token ids are 1..size() in surface order.
  bool HasToken(int id) const { return id >= 1 && id <= size(); }
  // Throws LookupError for unknown ids.
  const Token &token(int id) const;

  // Dependents of a token in surface order; Children(0) lists the roots.
  const std::vector<int> &Children(int id) const;

  // The unique root id, or 0 if the tree does not have exactly one root.
  int Root() const;

  bool operator==(const DepTree &other) const;

 private:
  void BuildIndex();

  std::string sent_id_;
  std::optional<std::string> text_;
  std::vector<std::pair<std::string, std::string>> metadata_;
  std::vector<Token> tokens_;
  std::vector<std::vector<int>> children_;
};

// Parses CoNLL-U text. Multiword range lines and empty nodes are skipped.
// Sentences without "# sent_id" receive "<source>:<ordinal>" (1-based).
// Token ids must be contiguous 1..n after skipping.
std::vector<DepTree> ParseConllu(std::string_view text,
                                 std::string_view source = "<input>");

// Emits CoNLL-U. Parsing the output yields an equal DepTree.
std::string WriteConllu(const DepTree &tree);
std::string WriteConllu(const std::vector<DepTree> &trees);

// Lists invariant violations: "no root", "multiple roots", "cycle",
// "dangling head", "self loop", "empty deprel". Valid tree: empty list.
std::vector<std::string> Validate(const DepTree &tree);

// Throws ValidationError with the first violation.
void RequireValid(const DepTree &tree);

// The node and all its descendants, in surface order. Throws LookupError
// for unknown ids.
std::vector<int> SubtreeTokens(const DepTree &tree, int node);

}  // namespace udtk

#endif  // UDTK_TREEBANK_H_
