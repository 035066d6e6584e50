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

#include "udtk/combine.h"

#include <algorithm>
#include <cmath>

#include "udtk/error.h"
#include "udtk/util.h"

namespace udtk {

double Softmax2(double x1, double x2, double m) {
  return std::max(x1, x2) + std::log1p(std::exp(-m * std::fabs(x1 - x2))) / m;
}

void PairKernelParams::Validate() const {
  base.Validate();
  if (!(m > 0) || !std::isfinite(m)) {
    throw ConfigError("softmax sharpness m must be > 0, got " +
                      FormatDouble(m));
  }
}

std::string ToString(CompositeVariant variant) {
  switch (variant) {
    case CompositeVariant::kCk:
      return "CK";
    case CompositeVariant::kCk1:
      return "CK1";
    case CompositeVariant::kCk2:
      return "CK2";
    case CompositeVariant::kCk3:
      return "CK3";
  }
  return "?";
}

std::string ToString(FeatureMode mode) {
  switch (mode) {
    case FeatureMode::kEntity:
      return "entity";
    case FeatureMode::kVo:
      return "V_o";
    case FeatureMode::kVud:
      return "V_ud";
  }
  return "?";
}

CompositeVariant ParseCompositeVariant(std::string_view name) {
  std::string upper(name);
  for (char &c : upper) c = static_cast<char>(std::toupper(c));
  if (upper == "CK") return CompositeVariant::kCk;
  if (upper == "CK1") return CompositeVariant::kCk1;
  if (upper == "CK2") return CompositeVariant::kCk2;
  if (upper == "CK3") return CompositeVariant::kCk3;
  throw ConfigError("unknown composite variant '" + std::string(name) +
                    "' (expected CK, CK1, CK2 or CK3)");
}

FeatureMode ParseFeatureMode(std::string_view name) {
  std::string lower = AsciiLower(name);
  if (lower == "entity") return FeatureMode::kEntity;
  if (lower == "v_o") return FeatureMode::kVo;
  if (lower == "v_ud") return FeatureMode::kVud;
  throw ConfigError("unknown feature mode '" + std::string(name) +
                    "' (expected entity, V_o or V_ud)");
}

FeatureMode BoundFeatureMode(CompositeVariant variant) {
  switch (variant) {
    case CompositeVariant::kCk:
      return FeatureMode::kEntity;
    case CompositeVariant::kCk1:
      return FeatureMode::kVo;
    case CompositeVariant::kCk2:
    case CompositeVariant::kCk3:
      return FeatureMode::kVud;
  }
  return FeatureMode::kVud;
}

void CompositeParams::Validate() const {
  if (!(alpha >= 0 && alpha <= 1)) {
    throw ConfigError("alpha must be in [0, 1], got " + FormatDouble(alpha));
  }
  if (feature_mode != BoundFeatureMode(variant)) {
    throw ConfigError(ToString(variant) + " is defined over " +
                      ToString(BoundFeatureMode(variant)) + ", not " +
                      ToString(feature_mode));
  }
  if (sst.kind != TreeKernelKind::kSst) {
    throw ConfigError("composite.sst must be an SST kernel");
  }
  if (vec.degree < 1) {
    throw ConfigError("polynomial degree must be >= 1");
  }
  sst.Validate();
  pt.Validate();
}

std::string ToString(KernelType type) {
  switch (type) {
    case KernelType::kTree:
      return "tree";
    case KernelType::kSmTk:
      return "sm_tk";
    case KernelType::kComposite:
      return "composite";
  }
  return "?";
}

KernelType ParseKernelType(std::string_view name) {
  std::string lower = AsciiLower(name);
  if (lower == "tree") return KernelType::kTree;
  if (lower == "sm_tk") return KernelType::kSmTk;
  if (lower == "composite") return KernelType::kComposite;
  throw ConfigError("unknown kernel type '" + std::string(name) +
                    "' (expected tree, sm_tk or composite)");
}

void KernelSpec::Validate() const {
  features.Validate();
  switch (type) {
    case KernelType::kTree:
      tree.Validate();
      break;
    case KernelType::kSmTk:
      pair().Validate();
      break;
    case KernelType::kComposite:
      composite.Validate();
      break;
  }
}

bool KernelSpec::NeedsEmbeddings() const {
  auto needs = [](const TreeKernelParams &p) {
    return p.kind == TreeKernelKind::kSptk && p.sigma &&
           p.sigma->mode != SigmaMode::kLabelIndicator;
  };
  if (type == KernelType::kComposite) return needs(composite.pt);
  return needs(tree);
}

PreparedInstance Compile(const KernelInput &input,
                         const NodeSimilarity *similarity) {
  PreparedInstance out;
  out.id = input.id;
  for (size_t i = 0; i < input.trees.size(); ++i) {
    std::string_view lang =
        i < input.languages.size() ? std::string_view(input.languages[i]) : "";
    out.trees.push_back(CompiledTree::Compile(input.trees[i], similarity, lang));
  }
  if (input.pet) out.pet = CompiledTree::Compile(*input.pet);
  out.features = input.features;
  return out;
}

// TreeKernelCache.

std::optional<double> TreeKernelCache::Find(uint64_t a, uint64_t b) const {
  if (b < a) std::swap(a, b);
  std::lock_guard<std::mutex> lock(mu_);
  auto it = values_.find({a, b});
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void TreeKernelCache::Insert(uint64_t a, uint64_t b, double value) {
  if (b < a) std::swap(a, b);
  std::lock_guard<std::mutex> lock(mu_);
  values_.emplace(std::make_pair(a, b), value);
}

size_t TreeKernelCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return values_.size();
}

// KernelWorker.

namespace {

TreeKernelParams MainTreeParams(const KernelSpec &spec) {
  return spec.type == KernelType::kComposite ? spec.composite.pt : spec.tree;
}

}  // namespace

KernelWorker::KernelWorker(const KernelSpec &spec, TreeKernelCache *cache)
    : spec_(spec),
      cache_(cache),
      tree_(MainTreeParams(spec)),
      pet_(spec.composite.sst) {
  spec_.Validate();
}

void KernelWorker::ComputeSelf(PreparedInstance *p) {
  p->tree_self.clear();
  for (const CompiledTree &t : p->trees) p->tree_self.push_back(tree_.Raw(t, t));
  const bool composite = spec_.type == KernelType::kComposite;
  // Variants without the constituency term never touch the PET.
  if (p->pet && composite && spec_.composite.UsesConstituency()) {
    p->pet_self = pet_.Raw(*p->pet, *p->pet);
  }
  if (p->features && composite) {
    p->features_self = PolyKernel(*p->features, *p->features,
                                  spec_.composite.vec.degree,
                                  spec_.composite.vec.coef0);
  }
}

double KernelWorker::Tree(TreeKernelEvaluator *eval, const CompiledTree &x,
                          double self_x, const CompiledTree &y, double self_y,
                          bool use_cache) {
  const CompiledTree *a = &x;
  const CompiledTree *b = &y;
  if (b->fingerprint() < a->fingerprint()) {
    std::swap(a, b);
    std::swap(self_x, self_y);
  }
  if (use_cache && cache_ != nullptr) {
    if (std::optional<double> hit =
            cache_->Find(a->fingerprint(), b->fingerprint())) {
      return *hit;
    }
  }
  double value = eval->Normalized(eval->Raw(*a, *b), self_x, self_y);
  if (use_cache && cache_ != nullptr) {
    cache_->Insert(a->fingerprint(), b->fingerprint(), value);
  }
  return value;
}

double KernelWorker::Vector(const std::vector<double> &u, double self_u,
                            const std::vector<double> &v,
                            double self_v) const {
  const PolyParams &p = spec_.composite.vec;
  double k = PolyKernel(u, v, p.degree, p.coef0);
  if (!p.normalize) return k;
  if (self_u <= 0 || self_v <= 0) return 0;
  return k / std::sqrt(self_u * self_v);
}

double KernelWorker::Composite(const PreparedInstance &a,
                               const PreparedInstance &b) {
  const CompositeParams &p = spec_.composite;
  if (a.trees.empty() || b.trees.empty()) {
    throw ConfigError("composite kernel needs dependency trees");
  }
  if (!a.features || !b.features) {
    throw ConfigError("composite kernel " + ToString(p.variant) +
                      " needs the " + ToString(p.feature_mode) +
                      " feature vector");
  }
  double k_pt = Tree(&tree_, a.trees[0], a.tree_self[0], b.trees[0],
                     b.tree_self[0], false);
  double k_vec = Vector(*a.features, a.features_self, *b.features,
                        b.features_self);
  double inner = (k_vec + k_pt) * (k_vec + k_pt);
  if (!p.UsesConstituency()) return inner;
  if (!a.pet || !b.pet) {
    throw ConfigError("composite kernel " + ToString(p.variant) +
                      " needs constituency trees");
  }
  double k_sst = Tree(&pet_, *a.pet, a.pet_self, *b.pet, b.pet_self, false);
  return p.alpha * k_sst + (1 - p.alpha) * inner;
}

double KernelWorker::Evaluate(const PreparedInstance &a,
                              const PreparedInstance &b) {
  switch (spec_.type) {
    case KernelType::kTree:
      if (a.trees.empty() || b.trees.empty()) {
        throw ConfigError("tree kernel needs one tree per instance");
      }
      return Tree(&tree_, a.trees[0], a.tree_self[0], b.trees[0],
                  b.tree_self[0], false);
    case KernelType::kSmTk: {
      if (a.trees.size() != 2 || b.trees.size() != 2) {
        throw ConfigError("sm_tk needs two trees per instance");
      }
      auto tk = [&](int i, int j) {
        return Tree(&tree_, a.trees[i], a.tree_self[i], b.trees[j],
                    b.tree_self[j], true);
      };
      double straight = tk(0, 0) * tk(1, 1);
      double crossed = tk(0, 1) * tk(1, 0);
      return Softmax2(straight, crossed, spec_.m);
    }
    case KernelType::kComposite:
      return Composite(a, b);
  }
  return 0;
}

// Free functions.

double SmTk(const std::pair<LabeledTree, LabeledTree> &pa,
            const std::pair<LabeledTree, LabeledTree> &pb,
            const PairKernelParams &params,
            const NodeSimilarity *similarity) {
  KernelSpec spec;
  spec.type = KernelType::kSmTk;
  spec.tree = params.base;
  spec.m = params.m;
  KernelWorker worker(spec);
  auto prepare = [&](const std::pair<LabeledTree, LabeledTree> &p) {
    PreparedInstance out;
    out.trees.push_back(CompiledTree::Compile(p.first, similarity));
    out.trees.push_back(CompiledTree::Compile(p.second, similarity));
    worker.ComputeSelf(&out);
    return out;
  };
  PreparedInstance a = prepare(pa);
  PreparedInstance b = prepare(pb);
  return worker.Evaluate(a, b);
}

double CompositeKernel(PreparedInstance a, PreparedInstance b,
                       const CompositeParams &params) {
  KernelSpec spec;
  spec.type = KernelType::kComposite;
  spec.composite = params;
  KernelWorker worker(spec);
  worker.ComputeSelf(&a);
  worker.ComputeSelf(&b);
  return worker.Evaluate(a, b);
}

}  // namespace udtk
