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

#include "udtk/trees.h"

#include "udtk/error.h"
#include "udtk/util.h"

namespace udtk {

namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string Escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == ' ' || c == '(' || c == ')' || c == '|' || c == '\\' ||
        c == '\t' || c == '\n') {
      out += '\\';
    }
    out += c;
  }
  return out;
}

// Tokenizer for bracketed s-expressions with backslash escapes.
class Reader {
 public:
  Reader(std::string_view text, std::string context)
      : text_(text), context_(std::move(context)) {}

  struct Atom {
    std::string text;
    // Position in `text` of the first unescaped '|', or npos.
    size_t bar = std::string::npos;
  };

  void SkipSpace() {
    while (pos_ < text_.size() && IsSpace(text_[pos_])) ++pos_;
  }
  bool AtEnd() {
    SkipSpace();
    return pos_ >= text_.size();
  }
  char Peek() {
    SkipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  size_t offset() const { return pos_; }

  void Expect(char c) {
    SkipSpace();
    if (pos_ >= text_.size()) {
      Fail(std::string("unbalanced parentheses: expected '") + c +
           "' before end of input");
    }
    if (text_[pos_] != c) {
      Fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  Atom ReadAtom() {
    SkipSpace();
    Atom atom;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (IsSpace(c) || c == '(' || c == ')') break;
      if (c == '\\') {
        if (pos_ + 1 >= text_.size()) Fail("dangling escape");
        atom.text += text_[pos_ + 1];
        pos_ += 2;
        continue;
      }
      if (c == '|' && atom.bar == std::string::npos) atom.bar = atom.text.size();
      atom.text += c;
      ++pos_;
    }
    return atom;
  }

  [[noreturn]] void Fail(const std::string &what) const {
    throw ParseError(context_ + "offset " + std::to_string(pos_) + ": " +
                     what);
  }

 private:
  std::string_view text_;
  std::string context_;
  size_t pos_ = 0;
};

ConstTree ReadConst(Reader &r) {
  r.Expect('(');
  ConstTree node;
  char c = r.Peek();
  if (c != '(' && c != ')' && c != '\0') node.label = r.ReadAtom().text;
  while (true) {
    c = r.Peek();
    if (c == ')') break;
    if (c == '\0') r.Fail("unbalanced parentheses: missing ')'");
    if (c == '(') {
      node.children.push_back(ReadConst(r));
    } else {
      ConstTree leaf;
      leaf.label = r.ReadAtom().text;
      node.children.push_back(std::move(leaf));
    }
  }
  r.Expect(')');
  return node;
}

LabeledTree ReadLabeled(Reader &r) {
  r.Expect('(');
  char c = r.Peek();
  if (c == '(' || c == ')' || c == '\0') r.Fail("node without label");
  Reader::Atom atom = r.ReadAtom();
  LabeledTree node;
  if (atom.bar != std::string::npos) {
    node.kind = NodeKind::kLexical;
    node.label = atom.text.substr(0, atom.bar);
    node.pos_tag = atom.text.substr(atom.bar + 1);
  } else {
    node.kind = NodeKind::kSyntactic;
    node.label = std::move(atom.text);
  }
  while (true) {
    c = r.Peek();
    if (c == ')') break;
    if (c == '\0') r.Fail("unbalanced parentheses: missing ')'");
    if (c != '(') r.Fail("expected '(' or ')'");
    node.children.push_back(ReadLabeled(r));
  }
  r.Expect(')');
  return node;
}

void WriteLabeled(const LabeledTree &t, bool annotate, std::string *out) {
  *out += '(';
  *out += Escape(t.label);
  if (annotate && t.kind == NodeKind::kLexical) {
    *out += '|';
    *out += Escape(t.pos_tag);
  }
  for (const LabeledTree &c : t.children) {
    *out += ' ';
    WriteLabeled(c, annotate, out);
  }
  *out += ')';
}

void WriteConst(const ConstTree &t, std::string *out) {
  if (t.IsLeaf()) {
    *out += Escape(t.label);
    return;
  }
  *out += '(';
  *out += Escape(t.label);
  for (const ConstTree &c : t.children) {
    *out += ' ';
    WriteConst(c, out);
  }
  *out += ')';
}

LabeledTree ConstToLabeled(const ConstTree &t, const std::string &parent) {
  if (t.IsLeaf()) return LabeledTree::Lexical(t.label, parent);
  LabeledTree node = LabeledTree::Syntactic(t.label);
  node.children.reserve(t.children.size());
  for (const ConstTree &c : t.children) {
    node.children.push_back(ConstToLabeled(c, t.label));
  }
  return node;
}

}  // namespace

LabeledTree LabeledTree::Syntactic(std::string label,
                                   std::vector<LabeledTree> children) {
  LabeledTree t;
  t.label = std::move(label);
  t.kind = NodeKind::kSyntactic;
  t.children = std::move(children);
  return t;
}

LabeledTree LabeledTree::Lexical(std::string label, std::string pos,
                                 std::vector<LabeledTree> children) {
  LabeledTree t;
  t.label = std::move(label);
  t.kind = NodeKind::kLexical;
  t.pos_tag = std::move(pos);
  t.children = std::move(children);
  return t;
}

int LabeledTree::NodeCount() const {
  int n = 1;
  for (const LabeledTree &c : children) n += c.NodeCount();
  return n;
}

int LabeledTree::LexicalCount() const {
  int n = kind == NodeKind::kLexical ? 1 : 0;
  for (const LabeledTree &c : children) n += c.LexicalCount();
  return n;
}

std::string ToBracketed(const LabeledTree &tree, bool annotate) {
  std::string out;
  WriteLabeled(tree, annotate, &out);
  return out;
}

LabeledTree ParseLabeledTree(std::string_view text) {
  Reader r(text, "");
  LabeledTree tree = ReadLabeled(r);
  if (!r.AtEnd()) r.Fail("trailing input after tree");
  return tree;
}

int ConstTree::ComputeSpans(int first_position) {
  if (IsLeaf()) {
    start = end = first_position;
    return first_position + 1;
  }
  int next = first_position;
  for (ConstTree &c : children) next = c.ComputeSpans(next);
  start = first_position;
  end = next - 1;
  return next;
}

int ConstTree::LeafCount() const {
  if (IsLeaf()) return 1;
  int n = 0;
  for (const ConstTree &c : children) n += c.LeafCount();
  return n;
}

std::vector<std::string> ConstTree::Leaves() const {
  std::vector<std::string> out;
  if (IsLeaf()) {
    out.push_back(label);
    return out;
  }
  for (const ConstTree &c : children) {
    std::vector<std::string> sub = c.Leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

int ConstTree::NodeCount() const {
  int n = 1;
  for (const ConstTree &c : children) n += c.NodeCount();
  return n;
}

std::vector<ConstTree> ParseBracketed(std::string_view text) {
  std::vector<ConstTree> trees;
  int line_no = 0;
  for (std::string_view line : Split(text, '\n')) {
    ++line_no;
    if (Trim(line).empty()) continue;
    Reader r(line, "line " + std::to_string(line_no) + ", ");
    ConstTree tree = ReadConst(r);
    if (!r.AtEnd()) {
      if (r.Peek() == ')') r.Fail("unbalanced parentheses: unexpected ')'");
      r.Fail("trailing input after tree");
    }
    while (tree.label.empty() && tree.children.size() == 1 &&
           !tree.children[0].IsLeaf()) {
      ConstTree inner = std::move(tree.children[0]);
      tree = std::move(inner);
    }
    if (tree.IsLeaf()) r.Fail("tree without brackets");
    tree.ComputeSpans(1);
    trees.push_back(std::move(tree));
  }
  return trees;
}

std::string ToBracketed(const ConstTree &tree) {
  std::string out;
  WriteConst(tree, &out);
  return out;
}

LabeledTree ToLabeledTree(const ConstTree &tree) {
  return ConstToLabeled(tree, "");
}

}  // namespace udtk
