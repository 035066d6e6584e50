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

#include <algorithm>

#include "json_util.h"
#include "udtk/error.h"
#include "udtk/util.h"

namespace udtk {

namespace {

void RequireObject(const Json &j, const std::string &where) {
  if (!j.is_object()) {
    throw ConfigError((where.empty() ? std::string("document") : where) +
                      " must be a JSON object");
  }
}

std::string SigmaModeName(SigmaMode mode) {
  switch (mode) {
    case SigmaMode::kMonolingual:
      return "monolingual";
    case SigmaMode::kTranslateThenCompare:
      return "translate_then_compare";
    case SigmaMode::kSharedSpace:
      return "shared_space";
    case SigmaMode::kLabelIndicator:
      return "label_indicator";
  }
  return "?";
}

SigmaMode ParseSigmaMode(const std::string &s, const std::string &where) {
  for (SigmaMode m : {SigmaMode::kMonolingual, SigmaMode::kTranslateThenCompare,
                      SigmaMode::kSharedSpace, SigmaMode::kLabelIndicator}) {
    if (SigmaModeName(m) == s) return m;
  }
  throw ConfigError(where +
                    ": unknown sigma mode '" + s +
                    "' (expected monolingual, translate_then_compare, "
                    "shared_space or label_indicator)");
}

std::string OovName(OovPolicy p) {
  return p == OovPolicy::kZero ? "zero" : "exact_match";
}

OovPolicy ParseOov(const std::string &s, const std::string &where) {
  if (s == "zero") return OovPolicy::kZero;
  if (s == "exact_match") return OovPolicy::kExactMatchFallback;
  throw ConfigError(where + ": unknown oov_policy '" + s +
                    "' (expected zero or exact_match)");
}

std::string ScopeName(MweScope s) {
  return s == MweScope::kWholeTree ? "whole_tree" : "sdp_and_dependents";
}

std::string EntityEmbeddingName(EntityEmbedding e) {
  return e == EntityEmbedding::kHead ? "head" : "span_mean";
}

}  // namespace

const Json *Field(const Json &j, const char *key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

std::string Path(const std::string &where, const char *key) {
  return where.empty() ? std::string(key) : where + "." + key;
}

std::vector<std::string> StringList(const Json &j, const std::string &where) {
  if (!j.is_array()) throw ConfigError(where + " must be a list of strings");
  std::vector<std::string> out;
  for (const Json &x : j) {
    if (!x.is_string()) throw ConfigError(where + " must be a list of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

void CheckKeys(const Json &j, const std::string &where,
               std::initializer_list<std::string_view> allowed) {
  RequireObject(j, where);
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
      std::string names;
      for (std::string_view a : allowed) {
        if (!names.empty()) names += ", ";
        names += a;
      }
      throw ConfigError(Path(where, it.key().c_str()) +
                        ": unknown field (expected one of " + names + ")");
    }
  }
}

bool GetBool(const Json &j, const std::string &where, const char *key,
             bool fallback) {
  const Json *f = Field(j, key);
  if (f == nullptr) return fallback;
  if (!f->is_boolean()) throw ConfigError(Path(where, key) + " must be a boolean");
  return f->get<bool>();
}

double GetDouble(const Json &j, const std::string &where, const char *key,
                 double fallback) {
  const Json *f = Field(j, key);
  if (f == nullptr) return fallback;
  if (!f->is_number()) throw ConfigError(Path(where, key) + " must be a number");
  return f->get<double>();
}

int GetInt(const Json &j, const std::string &where, const char *key,
           int fallback) {
  const Json *f = Field(j, key);
  if (f == nullptr) return fallback;
  if (!f->is_number_integer()) {
    throw ConfigError(Path(where, key) + " must be an integer");
  }
  return f->get<int>();
}

std::string GetString(const Json &j, const std::string &where, const char *key,
                      const std::string &fallback) {
  const Json *f = Field(j, key);
  if (f == nullptr) return fallback;
  if (!f->is_string()) throw ConfigError(Path(where, key) + " must be a string");
  return f->get<std::string>();
}

Json ToJson(const TreeKernelParams &p) {
  Json j;
  j["kind"] = ToString(p.kind);
  j["lambda"] = p.lambda;
  if (p.kind != TreeKernelKind::kSst) j["mu"] = p.mu;
  j["normalize"] = p.normalize;
  if (p.kind == TreeKernelKind::kSptk && p.sigma) {
    j["sigma"] = {{"mode", SigmaModeName(p.sigma->mode)},
                  {"pos_must_match", p.sigma->pos_must_match},
                  {"oov_policy", OovName(p.sigma->oov_policy)}};
  }
  return j;
}

TreeKernelParams TreeKernelParamsFromJson(const Json &j,
                                          const std::string &where) {
  CheckKeys(j, where, {"kind", "lambda", "mu", "normalize", "sigma"});
  TreeKernelParams p;
  p.kind = ParseTreeKernelKind(GetString(j, where, "kind", "PTK"));
  p.lambda = GetDouble(j, where, "lambda", p.lambda);
  p.mu = GetDouble(j, where, "mu", p.mu);
  p.normalize = GetBool(j, where, "normalize", p.normalize);
  if (const Json *s = Field(j, "sigma")) {
    std::string w = Path(where, "sigma");
    CheckKeys(*s, w, {"mode", "pos_must_match", "oov_policy"});
    SigmaConfig cfg;
    cfg.mode = ParseSigmaMode(GetString(*s, w, "mode", "monolingual"), w);
    cfg.pos_must_match = GetBool(*s, w, "pos_must_match", true);
    cfg.oov_policy = ParseOov(GetString(*s, w, "oov_policy", "zero"), w);
    p.sigma = cfg;
  }
  if (p.kind != TreeKernelKind::kSptk) p.sigma.reset();
  try {
    p.Validate();
  } catch (const ConfigError &e) {
    throw ConfigError(where + ": " + e.what());
  }
  return p;
}

Json ToJson(const FeatureConfig &cfg) {
  Json relations = Json::array();
  for (const std::string &r : cfg.mwe.relations) relations.push_back(r);
  return {{"window", cfg.window},
          {"exclude_punct", cfg.exclude_punct},
          {"use_lemma", cfg.use_lemma},
          {"mwe", {{"relations", relations}, {"scope", ScopeName(cfg.mwe.scope)}}},
          {"entity_embedding", EntityEmbeddingName(cfg.entity_embedding)},
          {"embedding_mode", cfg.embedding_mode == EmbeddingMode::kPivotTranslate
                                 ? "pivot_translate"
                                 : "per_language"}};
}

FeatureConfig FeatureConfigFromJson(const Json &j, const std::string &where) {
  CheckKeys(j, where,
            {"window", "exclude_punct", "use_lemma", "mwe", "entity_embedding",
             "embedding_mode"});
  FeatureConfig cfg;
  cfg.window = GetInt(j, where, "window", cfg.window);
  cfg.exclude_punct = GetBool(j, where, "exclude_punct", cfg.exclude_punct);
  cfg.use_lemma = GetBool(j, where, "use_lemma", cfg.use_lemma);
  if (const Json *m = Field(j, "mwe")) {
    std::string w = Path(where, "mwe");
    CheckKeys(*m, w, {"relations", "scope"});
    if (const Json *r = Field(*m, "relations")) {
      std::vector<std::string> rel = StringList(*r, Path(w, "relations"));
      cfg.mwe.relations = std::set<std::string>(rel.begin(), rel.end());
    }
    std::string scope = GetString(*m, w, "scope", "sdp_and_dependents");
    if (scope == "whole_tree") {
      cfg.mwe.scope = MweScope::kWholeTree;
    } else if (scope == "sdp_and_dependents") {
      cfg.mwe.scope = MweScope::kSdpAndDependents;
    } else {
      throw ConfigError(Path(w, "scope") + ": unknown scope '" + scope +
                        "' (expected sdp_and_dependents or whole_tree)");
    }
  }
  std::string ee = GetString(j, where, "entity_embedding", "span_mean");
  if (ee == "head") {
    cfg.entity_embedding = EntityEmbedding::kHead;
  } else if (ee == "span_mean") {
    cfg.entity_embedding = EntityEmbedding::kSpanMean;
  } else {
    throw ConfigError(Path(where, "entity_embedding") + ": unknown value '" +
                      ee + "' (expected span_mean or head)");
  }
  std::string em = GetString(j, where, "embedding_mode", "per_language");
  if (em == "pivot_translate") {
    cfg.embedding_mode = EmbeddingMode::kPivotTranslate;
  } else if (em == "per_language") {
    cfg.embedding_mode = EmbeddingMode::kPerLanguage;
  } else {
    throw ConfigError(Path(where, "embedding_mode") + ": unknown value '" +
                      em + "' (expected per_language or pivot_translate)");
  }
  cfg.Validate();
  return cfg;
}

Json ToJson(const KernelSpec &spec) {
  Json j;
  j["type"] = ToString(spec.type);
  switch (spec.type) {
    case KernelType::kTree:
      j["tree"] = ToJson(spec.tree);
      j["features"] = {{"use_lemma", spec.features.use_lemma}};
      break;
    case KernelType::kSmTk:
      j["tree"] = ToJson(spec.tree);
      j["m"] = spec.m;
      j["features"] = {{"use_lemma", spec.features.use_lemma}};
      break;
    case KernelType::kComposite: {
      const CompositeParams &c = spec.composite;
      Json cj;
      cj["variant"] = ToString(c.variant);
      cj["feature_mode"] = ToString(c.feature_mode);
      cj["pt"] = ToJson(c.pt);
      cj["degree"] = c.vec.degree;
      cj["coef0"] = c.vec.coef0;
      cj["normalize_vectors"] = c.vec.normalize;
      if (c.UsesConstituency()) {
        cj["alpha"] = c.alpha;
        cj["sst"] = ToJson(c.sst);
      }
      j["composite"] = cj;
      j["features"] = ToJson(spec.features);
      break;
    }
  }
  return j;
}

KernelSpec KernelSpecFromJson(const Json &j, const std::string &where) {
  CheckKeys(j, where, {"type", "tree", "m", "composite", "features"});
  KernelSpec spec;
  spec.type = ParseKernelType(GetString(j, where, "type", "tree"));
  if (const Json *t = Field(j, "tree")) {
    spec.tree = TreeKernelParamsFromJson(*t, Path(where, "tree"));
  }
  spec.m = GetDouble(j, where, "m", spec.m);
  if (const Json *f = Field(j, "features")) {
    spec.features = FeatureConfigFromJson(*f, Path(where, "features"));
  }
  if (const Json *c = Field(j, "composite")) {
    std::string w = Path(where, "composite");
    CheckKeys(*c, w,
              {"variant", "feature_mode", "alpha", "sst", "pt", "degree",
               "coef0", "normalize_vectors"});
    CompositeParams &cp = spec.composite;
    cp.variant = ParseCompositeVariant(GetString(*c, w, "variant", "CK2"));
    std::string mode = GetString(*c, w, "feature_mode", "");
    cp.feature_mode =
        mode.empty() ? BoundFeatureMode(cp.variant) : ParseFeatureMode(mode);
    cp.alpha = GetDouble(*c, w, "alpha", cp.alpha);
    if (const Json *s = Field(*c, "sst")) {
      Json sj = *s;
      if (!sj.contains("kind")) sj["kind"] = "SST";
      cp.sst = TreeKernelParamsFromJson(sj, Path(w, "sst"));
    }
    if (const Json *p = Field(*c, "pt")) {
      cp.pt = TreeKernelParamsFromJson(*p, Path(w, "pt"));
    }
    cp.vec.degree = GetInt(*c, w, "degree", cp.vec.degree);
    cp.vec.coef0 = GetDouble(*c, w, "coef0", cp.vec.coef0);
    cp.vec.normalize = GetBool(*c, w, "normalize_vectors", cp.vec.normalize);
  }
  try {
    spec.Validate();
  } catch (const ConfigError &e) {
    throw ConfigError((where.empty() ? std::string("kernel") : where) + ": " +
                      e.what());
  }
  return spec;
}

Json ToJson(const EntityVocabulary &vocab) {
  return {{"entity_types", vocab.entity_types},
          {"mention_types", vocab.mention_types},
          {"upos", vocab.upos}};
}

EntityVocabulary EntityVocabularyFromJson(const Json &j,
                                          const std::string &where) {
  CheckKeys(j, where, {"entity_types", "mention_types", "upos"});
  EntityVocabulary v;
  auto list = [&](const char *key) {
    const Json *f = Field(j, key);
    if (f == nullptr) throw ConfigError(Path(where, key) + " is missing");
    std::vector<std::string> out = StringList(*f, Path(where, key));
    std::sort(out.begin(), out.end());
    return out;
  };
  v.entity_types = list("entity_types");
  v.mention_types = list("mention_types");
  v.upos = list("upos");
  return v;
}

std::string CanonicalJson(const KernelSpec &spec) {
  return ToJson(spec).dump();
}

std::string Fingerprint(const KernelSpec &spec) {
  return HexDigest(Fnv1a(CanonicalJson(spec)));
}

KernelSpec KernelSpecFromJson(std::string_view json) {
  return KernelSpecFromJson(ParseJson<ConfigError>(json, "kernel spec"), "");
}

}  // namespace udtk
