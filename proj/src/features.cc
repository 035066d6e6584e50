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

#include "udtk/features.h"

#include <algorithm>

#include "udtk/error.h"

namespace udtk {

namespace {

bool IsPunct(const Token &tok) { return tok.upos == "PUNCT"; }

// Mean of the in-vocabulary vectors of `words`; zeros when none is found.
// Words are visited in sorted order so the result does not depend on the
// order in which the group was collected.
void AppendMean(std::vector<std::string> words, const WordEmbedder &embedder,
                const std::string &language, int dim,
                std::vector<double> *out) {
  std::sort(words.begin(), words.end());
  std::vector<double> sum(dim, 0.0);
  int found = 0;
  for (const std::string &w : words) {
    std::optional<std::vector<double>> v = embedder.Lookup(w, language);
    if (!v) continue;
    for (int i = 0; i < dim; ++i) sum[i] += (*v)[i];
    ++found;
  }
  if (found > 0) {
    for (double &x : sum) x /= found;
  }
  out->insert(out->end(), sum.begin(), sum.end());
}

std::vector<std::string> Words(const DepTree &tree, const std::vector<int> &ids,
                               const FeatureConfig &cfg) {
  std::vector<std::string> out;
  for (int id : ids) {
    const Token &tok = tree.token(id);
    if (cfg.exclude_punct && IsPunct(tok)) continue;
    out.push_back(LexicalLabel(tok, cfg.use_lemma));
  }
  return out;
}

std::vector<std::string> EntityWords(const DepTree &tree, int head,
                                     const std::set<int> &span,
                                     const FeatureConfig &cfg) {
  if (cfg.entity_embedding == EntityEmbedding::kHead) {
    return {LexicalLabel(tree.token(head), cfg.use_lemma)};
  }
  std::vector<std::string> out;
  for (int id : span) out.push_back(LexicalLabel(tree.token(id), cfg.use_lemma));
  return out;
}

std::set<int> SpanIds(Span s) {
  std::set<int> out;
  for (int i = s.first; i <= s.second; ++i) out.insert(i);
  return out;
}

void RequireEntities(const REInstance &inst) {
  const DepTree &t = inst.dep_tree;
  if (!t.HasToken(inst.e1) || !t.HasToken(inst.e2) || inst.e1 == inst.e2) {
    throw ValidationError("instance '" + inst.id +
                          "' needs two distinct entity tokens");
  }
}

std::vector<double> OneHot(const std::vector<std::string> &vocab,
                           const std::string &value) {
  std::vector<double> out(vocab.size(), 0.0);
  auto it = std::lower_bound(vocab.begin(), vocab.end(), value);
  if (it == vocab.end() || *it != value) {
    it = std::lower_bound(vocab.begin(), vocab.end(), std::string("none"));
  }
  if (it != vocab.end()) out[it - vocab.begin()] = 1.0;
  return out;
}

std::string AttributeOrNone(const Attributes &attrs, std::string_view key) {
  std::optional<std::string> v = FindAttribute(attrs, key);
  return v && !v->empty() ? *v : std::string("none");
}

}  // namespace

void FeatureConfig::Validate() const {
  if (window < 1) {
    throw ConfigError("features.window must be >= 1, got " +
                      std::to_string(window));
  }
}

EntityLocation LocateEntity(const DepTree &tree, const std::string &name) {
  std::vector<int> marked;
  for (const Token &tok : tree.tokens()) {
    std::optional<std::string> v = FindAttribute(tok.misc, "Entity");
    if (v && *v == name) marked.push_back(tok.id);
  }
  if (marked.empty()) {
    throw ValidationError("sentence '" + tree.sent_id() +
                          "' has no token marked Entity=" + name);
  }
  if (marked.back() - marked.front() + 1 != static_cast<int>(marked.size())) {
    throw ValidationError("sentence '" + tree.sent_id() + "': Entity=" + name +
                          " tokens are not contiguous");
  }
  EntityLocation loc;
  loc.span = {marked.front(), marked.back()};
  for (int id : marked) {
    int h = tree.token(id).head;
    if (h < loc.span.first || h > loc.span.second) {
      loc.head = id;
      break;
    }
  }
  if (loc.head == 0) {
    throw ValidationError("sentence '" + tree.sent_id() + "': Entity=" + name +
                          " span has no head");
  }
  return loc;
}

void LocateEntities(REInstance *inst) {
  EntityLocation a = LocateEntity(inst->dep_tree, "e1");
  EntityLocation b = LocateEntity(inst->dep_tree, "e2");
  inst->e1 = a.head;
  inst->e1_span = a.span;
  inst->e2 = b.head;
  inst->e2_span = b.span;
}

std::vector<double> BuildVo(const REInstance &inst,
                            const WordEmbedder &embedder,
                            const FeatureConfig &cfg) {
  RequireEntities(inst);
  const DepTree &tree = inst.dep_tree;
  const int dim = embedder.Dimension(inst.language);
  const std::set<int> span1 = SpanIds(inst.e1_span);
  const std::set<int> span2 = SpanIds(inst.e2_span);
  auto usable = [&](int id) {
    if (span1.count(id) || span2.count(id)) return false;
    return !(cfg.exclude_punct && IsPunct(tree.token(id)));
  };

  std::vector<int> between, before, after;
  const int lo = std::min(inst.e1, inst.e2);
  const int hi = std::max(inst.e1, inst.e2);
  for (int id = lo + 1; id < hi; ++id) {
    if (usable(id)) between.push_back(id);
  }
  for (int id = inst.e1_span.first - 1;
       id >= 1 && static_cast<int>(before.size()) < cfg.window; --id) {
    if (usable(id)) before.push_back(id);
  }
  for (int id = inst.e2_span.second + 1;
       id <= tree.size() && static_cast<int>(after.size()) < cfg.window;
       ++id) {
    if (usable(id)) after.push_back(id);
  }

  std::vector<double> out;
  out.reserve(5 * dim);
  AppendMean(EntityWords(tree, inst.e1, span1, cfg), embedder, inst.language,
             dim, &out);
  AppendMean(EntityWords(tree, inst.e2, span2, cfg), embedder, inst.language,
             dim, &out);
  AppendMean(Words(tree, between, cfg), embedder, inst.language, dim, &out);
  AppendMean(Words(tree, before, cfg), embedder, inst.language, dim, &out);
  AppendMean(Words(tree, after, cfg), embedder, inst.language, dim, &out);
  return out;
}

std::vector<double> BuildVud(const REInstance &inst,
                             const WordEmbedder &embedder,
                             const FeatureConfig &cfg) {
  RequireEntities(inst);
  const DepTree &tree = inst.dep_tree;
  const int dim = embedder.Dimension(inst.language);
  const std::set<int> span1 = SpanIds(inst.e1_span);
  const std::set<int> span2 = SpanIds(inst.e2_span);

  std::set<int> targets;
  if (cfg.mwe.scope == MweScope::kWholeTree) {
    for (int id = 1; id <= tree.size(); ++id) targets.insert(id);
  } else {
    targets = MweTargets(tree, inst.e1, inst.e2);
    targets.insert(span1.begin(), span1.end());
    targets.insert(span2.begin(), span2.end());
  }
  MweCollapse collapsed = CollapseMwe(tree, cfg.mwe, targets);
  const DepTree &ct = collapsed.tree;
  const std::vector<int> &remap = collapsed.remap;

  std::set<int> cspan1, cspan2;
  for (int id : span1) cspan1.insert(remap[id]);
  for (int id : span2) cspan2.insert(remap[id]);
  const int ce1 = remap[inst.e1];
  const int ce2 = remap[inst.e2];
  auto not_entity = [&](const std::vector<int> &ids) {
    std::vector<int> out;
    for (int id : ids) {
      if (!cspan1.count(id) && !cspan2.count(id)) out.push_back(id);
    }
    return out;
  };
  std::vector<int> path;
  if (ce1 != ce2) path = not_entity(ShortestPath(ct, ce1, ce2));
  std::vector<int> deps1 = not_entity(Dependents(ct, ce1));
  std::vector<int> deps2 = not_entity(Dependents(ct, ce2));

  std::vector<double> out;
  out.reserve(5 * dim);
  AppendMean(EntityWords(ct, ce1, cspan1, cfg), embedder, inst.language, dim,
             &out);
  AppendMean(EntityWords(ct, ce2, cspan2, cfg), embedder, inst.language, dim,
             &out);
  AppendMean(Words(ct, path, cfg), embedder, inst.language, dim, &out);
  AppendMean(Words(ct, deps1, cfg), embedder, inst.language, dim, &out);
  AppendMean(Words(ct, deps2, cfg), embedder, inst.language, dim, &out);
  return out;
}

EntityVocabulary EntityVocabulary::Build(
    const std::vector<REInstance> &training) {
  std::set<std::string> types = {"none"}, mentions = {"none"}, upos = {"none"};
  for (const REInstance &inst : training) {
    for (int id : {inst.e1, inst.e2}) {
      if (!inst.dep_tree.HasToken(id)) continue;
      const Token &tok = inst.dep_tree.token(id);
      types.insert(AttributeOrNone(tok.misc, "EntityType"));
      mentions.insert(AttributeOrNone(tok.misc, "MentionType"));
      if (!tok.upos.empty()) upos.insert(tok.upos);
    }
  }
  EntityVocabulary vocab;
  vocab.entity_types.assign(types.begin(), types.end());
  vocab.mention_types.assign(mentions.begin(), mentions.end());
  vocab.upos.assign(upos.begin(), upos.end());
  return vocab;
}

std::vector<double> BuildEntityFeatures(const REInstance &inst,
                                        const EntityVocabulary &vocab,
                                        const WordEmbedder &embedder,
                                        const FeatureConfig &cfg) {
  RequireEntities(inst);
  const int dim = embedder.Dimension(inst.language);
  std::vector<double> out;
  for (int id : {inst.e1, inst.e2}) {
    const Token &tok = inst.dep_tree.token(id);
    for (const auto &block :
         {OneHot(vocab.entity_types, AttributeOrNone(tok.misc, "EntityType")),
          OneHot(vocab.mention_types,
                 AttributeOrNone(tok.misc, "MentionType"))}) {
      out.insert(out.end(), block.begin(), block.end());
    }
    AppendMean({LexicalLabel(tok, cfg.use_lemma)}, embedder, inst.language, dim,
               &out);
    std::vector<double> pos =
        OneHot(vocab.upos, tok.upos.empty() ? std::string("none") : tok.upos);
    out.insert(out.end(), pos.begin(), pos.end());
  }
  return out;
}

}  // namespace udtk
