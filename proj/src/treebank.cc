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

#include "udtk/treebank.h"

#include <algorithm>
#include <set>

#include "udtk/error.h"
#include "udtk/util.h"

namespace udtk {

namespace {

std::string Field(std::string_view value) {
  if (value == "_") return "";
  return std::string(value);
}

Attributes ParseAttributes(std::string_view value) {
  Attributes attrs;
  if (value.empty() || value == "_") return attrs;
  for (std::string_view item : Split(value, '|')) {
    if (item.empty()) continue;
    size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      attrs.emplace_back(std::string(item), "");
    } else {
      attrs.emplace_back(std::string(item.substr(0, eq)),
                         std::string(item.substr(eq + 1)));
    }
  }
  return attrs;
}

std::string FormatAttributes(const Attributes &attrs) {
  if (attrs.empty()) return "_";
  std::string out;
  for (size_t i = 0; i < attrs.size(); ++i) {
    if (i > 0) out += '|';
    out += attrs[i].first;
    if (!attrs[i].second.empty()) {
      out += '=';
      out += attrs[i].second;
    }
  }
  return out;
}

std::string Column(const std::string &value) {
  return value.empty() ? "_" : value;
}

struct PendingSentence {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<Token> tokens;
  std::set<int> ids;
  int first_line = 0;
};

}  // namespace

std::optional<std::string> FindAttribute(const Attributes &attrs,
                                         std::string_view key) {
  for (const auto &[k, v] : attrs) {
    if (k == key) return v;
  }
  return std::nullopt;
}

DepTree::DepTree(std::string sent_id, std::vector<Token> tokens,
                 std::vector<std::pair<std::string, std::string>> metadata,
                 std::optional<std::string> text)
    : sent_id_(std::move(sent_id)),
      text_(std::move(text)),
      metadata_(std::move(metadata)),
      tokens_(std::move(tokens)) {
  BuildIndex();
}

void DepTree::BuildIndex() {
  children_.assign(tokens_.size() + 1, {});
  for (const Token &t : tokens_) {
    if (t.head >= 0 && t.head <= size() && t.head != t.id) {
      children_[t.head].push_back(t.id);
    }
  }
}

std::optional<std::string> DepTree::Metadata(std::string_view key) const {
  for (const auto &[k, v] : metadata_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

const Token &DepTree::token(int id) const {
  if (!HasToken(id)) {
    throw LookupError("sentence '" + sent_id_ + "' has no token " +
                      std::to_string(id));
  }
  return tokens_[id - 1];
}

const std::vector<int> &DepTree::Children(int id) const {
  if (id < 0 || id > size()) {
    throw LookupError("sentence '" + sent_id_ + "' has no token " +
                      std::to_string(id));
  }
  return children_[id];
}

int DepTree::Root() const {
  if (children_.empty() || children_[0].size() != 1) return 0;
  return children_[0][0];
}

bool DepTree::operator==(const DepTree &other) const {
  return sent_id_ == other.sent_id_ && text_ == other.text_ &&
         metadata_ == other.metadata_ && tokens_ == other.tokens_;
}

std::vector<DepTree> ParseConllu(std::string_view text,
                                 std::string_view source) {
  std::vector<DepTree> trees;
  PendingSentence pending;
  int line_no = 0;

  auto flush = [&]() {
    if (pending.tokens.empty()) {
      if (!pending.metadata.empty()) {
        throw ParseError(std::string(source) + ":" +
                         std::to_string(pending.first_line) +
                         ": sentence block without token lines");
      }
      return;
    }
    std::sort(pending.tokens.begin(), pending.tokens.end(),
              [](const Token &a, const Token &b) { return a.id < b.id; });
    for (size_t i = 0; i < pending.tokens.size(); ++i) {
      if (pending.tokens[i].id != static_cast<int>(i) + 1) {
        throw ParseError(std::string(source) + ":" +
                         std::to_string(pending.first_line) +
                         ": token ids are not contiguous from 1");
      }
    }
    std::string sent_id;
    std::optional<std::string> sent_text;
    bool has_id = false;
    for (const auto &[k, v] : pending.metadata) {
      if (k == "sent_id" && !has_id) {
        sent_id = v;
        has_id = true;
      } else if (k == "text" && !sent_text) {
        sent_text = v;
      }
    }
    if (!has_id) {
      sent_id = std::string(source) + ":" + std::to_string(trees.size() + 1);
      pending.metadata.insert(pending.metadata.begin(), {"sent_id", sent_id});
    }
    trees.emplace_back(std::move(sent_id), std::move(pending.tokens),
                       std::move(pending.metadata), std::move(sent_text));
    pending = PendingSentence();
  };

  for (std::string_view raw : Split(text, '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty()) {
      flush();
      continue;
    }
    if (pending.first_line == 0) pending.first_line = line_no;
    auto where = [&]() {
      return std::string(source) + ":" + std::to_string(line_no) + ": ";
    };
    if (line.front() == '#') {
      if (!pending.tokens.empty()) {
        throw ParseError(where() + "comment line inside a sentence");
      }
      std::string_view body = Trim(line.substr(1));
      size_t eq = body.find('=');
      if (eq == std::string_view::npos) {
        pending.metadata.emplace_back(std::string(body), "");
      } else {
        pending.metadata.emplace_back(std::string(Trim(body.substr(0, eq))),
                                      std::string(Trim(body.substr(eq + 1))));
      }
      continue;
    }
    std::vector<std::string_view> cols = Split(line, '\t');
    if (cols.size() != 10) {
      throw ParseError(where() + "expected 10 tab-separated columns, found " +
                       std::to_string(cols.size()));
    }
    std::string_view id_field = cols[0];
    if (id_field.find('-') != std::string_view::npos ||
        id_field.find('.') != std::string_view::npos) {
      continue;  // multiword range or empty node
    }
    Token tok;
    if (!ParseInt(id_field, &tok.id) || tok.id < 1) {
      throw ParseError(where() + "invalid token id '" + std::string(id_field) +
                       "'");
    }
    if (!pending.ids.insert(tok.id).second) {
      throw ParseError(where() + "duplicate token id " +
                       std::to_string(tok.id));
    }
    if (!ParseInt(cols[6], &tok.head) || tok.head < 0) {
      throw ParseError(where() + "non-integer head '" + std::string(cols[6]) +
                       "'");
    }
    tok.form = Field(cols[1]);
    tok.lemma = Field(cols[2]);
    tok.upos = Field(cols[3]);
    if (cols[4] != "_") tok.xpos = std::string(cols[4]);
    tok.feats = ParseAttributes(cols[5]);
    tok.deprel = Field(cols[7]);
    tok.misc = ParseAttributes(cols[9]);
    pending.tokens.push_back(std::move(tok));
  }
  flush();
  return trees;
}

std::string WriteConllu(const DepTree &tree) {
  std::string out;
  for (const auto &[k, v] : tree.metadata()) {
    out += "# " + k;
    if (!v.empty()) out += " = " + v;
    out += '\n';
  }
  for (const Token &t : tree.tokens()) {
    out += std::to_string(t.id) + '\t' + Column(t.form) + '\t' +
           Column(t.lemma) + '\t' + Column(t.upos) + '\t' +
           (t.xpos ? Column(*t.xpos) : std::string("_")) + '\t' +
           FormatAttributes(t.feats) + '\t' + std::to_string(t.head) + '\t' +
           Column(t.deprel) + "\t_\t" + FormatAttributes(t.misc) + '\n';
  }
  out += '\n';
  return out;
}

std::string WriteConllu(const std::vector<DepTree> &trees) {
  std::string out;
  for (const DepTree &t : trees) out += WriteConllu(t);
  return out;
}

std::vector<std::string> Validate(const DepTree &tree) {
  std::vector<std::string> report;
  const int n = tree.size();
  int roots = 0;
  for (const Token &t : tree.tokens()) {
    if (t.head == 0) ++roots;
    if (t.head == t.id) {
      report.push_back("self loop at token " + std::to_string(t.id));
    } else if (t.head > n || t.head < 0) {
      report.push_back("dangling head: token " + std::to_string(t.id) +
                       " -> " + std::to_string(t.head));
    }
    if (t.deprel.empty()) {
      report.push_back("empty deprel at token " + std::to_string(t.id));
    }
  }
  if (roots == 0) report.push_back("no root");
  if (roots > 1) {
    report.push_back("multiple roots (" + std::to_string(roots) + ")");
  }
  // 0 = unvisited, 1 = on current walk, 2 = known to reach the root or a
  // reported defect.
  std::vector<int> state(n + 1, 0);
  for (int start = 1; start <= n; ++start) {
    if (state[start] != 0) continue;
    std::vector<int> walk;
    int cur = start;
    while (cur >= 1 && cur <= n && state[cur] == 0) {
      state[cur] = 1;
      walk.push_back(cur);
      int head = tree.tokens()[cur - 1].head;
      if (head == cur) break;
      cur = head;
    }
    if (cur >= 1 && cur <= n && state[cur] == 1 &&
        tree.tokens()[cur - 1].head != cur) {
      auto it = std::find(walk.begin(), walk.end(), cur);
      std::string cycle = "cycle: ";
      for (auto p = it; p != walk.end(); ++p) {
        cycle += std::to_string(*p) + " -> ";
      }
      cycle += std::to_string(cur);
      report.push_back(cycle);
    }
    for (int w : walk) state[w] = 2;
  }
  return report;
}

void RequireValid(const DepTree &tree) {
  std::vector<std::string> report = Validate(tree);
  if (!report.empty()) {
    throw ValidationError("sentence '" + tree.sent_id() + "': " + report[0]);
  }
}

std::vector<int> SubtreeTokens(const DepTree &tree, int node) {
  if (!tree.HasToken(node)) {
    throw LookupError("sentence '" + tree.sent_id() + "' has no token " +
                      std::to_string(node));
  }
  std::vector<int> out;
  std::vector<char> seen(tree.size() + 1, 0);
  std::vector<int> stack = {node};
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    if (seen[cur]) continue;
    seen[cur] = 1;
    out.push_back(cur);
    for (int child : tree.Children(cur)) stack.push_back(child);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace udtk
