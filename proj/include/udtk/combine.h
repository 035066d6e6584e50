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

// Kernel combinations: the softmax pair kernel for sentence pairs and the
// composite tree/vector kernels for relation instances.
//
//   SM_TK(pa, pb) = softmax2(TK(a1,b1) TK(a2,b2), TK(a1,b2) TK(a2,b1))
//   CK  = a K_SST(PET) + (1-a) (K_P(entity) + K_PT(LCT))^2
//   CK1 = a K_SST(PET) + (1-a) (K_P(V_o) + K_PT(LCT))^2
//   CK2 =                      (K_P(V_ud) + K_PT(LCT))^2
//   CK3 = a K_SST(PET) + (1-a) (K_P(V_ud) + K_PT(LCT))^2

#ifndef UDTK_COMBINE_H_
#define UDTK_COMBINE_H_

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "udtk/features.h"
#include "udtk/kernels.h"

namespace udtk {

// max(x1, x2) + log(1 + exp(-m |x1 - x2|)) / m.
double Softmax2(double x1, double x2, double m);

struct PairKernelParams {
  TreeKernelParams base;
  double m = 100;

  // Throws ConfigError.
  void Validate() const;

  bool operator==(const PairKernelParams &other) const = default;
};

enum class CompositeVariant { kCk, kCk1, kCk2, kCk3 };
enum class FeatureMode { kEntity, kVo, kVud };

std::string ToString(CompositeVariant variant);
std::string ToString(FeatureMode mode);
// Throw ConfigError on unknown names.
CompositeVariant ParseCompositeVariant(std::string_view name);
FeatureMode ParseFeatureMode(std::string_view name);

// The feature vector each variant is defined over.
FeatureMode BoundFeatureMode(CompositeVariant variant);

struct PolyParams {
  int degree = 2;
  double coef0 = 1.0;
  bool normalize = true;

  bool operator==(const PolyParams &other) const = default;
};

struct CompositeParams {
  CompositeVariant variant = CompositeVariant::kCk2;
  double alpha = 0.23;
  TreeKernelParams sst = TreeKernelParams::Of(TreeKernelKind::kSst);
  TreeKernelParams pt = TreeKernelParams::Of(TreeKernelKind::kPtk);
  PolyParams vec;
  FeatureMode feature_mode = FeatureMode::kVud;

  // Throws ConfigError for alpha outside [0, 1] or a variant bound to a
  // different feature mode.
  void Validate() const;
  bool UsesConstituency() const { return variant != CompositeVariant::kCk2; }

  bool operator==(const CompositeParams &other) const = default;
};

enum class KernelType {
  kTree,       // tree kernel over the LCT of one sentence
  kSmTk,       // softmax pair kernel over LCTs of two sentences
  kComposite,  // composite kernel over relation instances
};

std::string ToString(KernelType type);
KernelType ParseKernelType(std::string_view name);

// Every hyperparameter that determines kernel values, including how
// instances are turned into trees and vectors.
struct KernelSpec {
  KernelType type = KernelType::kTree;
  TreeKernelParams tree;  // kTree, and the base kernel of kSmTk
  double m = 100;         // kSmTk
  CompositeParams composite;
  FeatureConfig features;

  void Validate() const;
  PairKernelParams pair() const { return {tree, m}; }
  // True when any tree kernel in use is SPTK with embedding similarity.
  bool NeedsEmbeddings() const;

  bool operator==(const KernelSpec &other) const = default;
};

// Canonical JSON text of the fields relevant to spec.type and its
// FNV-1a fingerprint.
std::string CanonicalJson(const KernelSpec &spec);
std::string Fingerprint(const KernelSpec &spec);
// Throws ConfigError.
KernelSpec KernelSpecFromJson(std::string_view json);

// The kernel-facing form of an instance: its trees and feature vector.
// This is what models store for support instances.
struct KernelInput {
  std::string id;
  // kTree: {lct}; kSmTk: {lct_a, lct_b}; kComposite: {lct}.
  std::vector<LabeledTree> trees;
  // Language of each tree, for word-vector lookups.
  std::vector<std::string> languages;
  // Path-enclosed constituency tree (composite variants that use it).
  std::optional<LabeledTree> pet;
  std::optional<std::vector<double>> features;

  bool operator==(const KernelInput &other) const = default;
};

// An instance compiled for evaluation, with self-kernel values for
// normalization.
struct PreparedInstance {
  std::string id;
  // kTree: {lct}; kSmTk: {lct_a, lct_b}; kComposite: {lct}.
  std::vector<CompiledTree> trees;
  std::optional<CompiledTree> pet;
  std::optional<std::vector<double>> features;

  std::vector<double> tree_self;
  double pet_self = 0;
  double features_self = 0;
};

// Compiles an input's trees; `similarity` attaches word vectors for SPTK.
// Self values are left for KernelWorker::ComputeSelf.
PreparedInstance Compile(const KernelInput &input,
                         const NodeSimilarity *similarity);

// Thread-safe memo of tree kernel values keyed by unordered tree
// fingerprints.
class TreeKernelCache {
 public:
  std::optional<double> Find(uint64_t a, uint64_t b) const;
  void Insert(uint64_t a, uint64_t b, double value);
  size_t size() const;

 private:
  struct KeyHash {
    size_t operator()(const std::pair<uint64_t, uint64_t> &k) const {
      return k.first ^ (k.second * 0x9e3779b97f4a7c15ULL);
    }
  };
  mutable std::mutex mu_;
  std::unordered_map<std::pair<uint64_t, uint64_t>, double, KeyHash> values_;
};

// Evaluates a KernelSpec between prepared instances. Holds scratch state;
// use one per thread. Tree pairs are always evaluated in fingerprint order,
// so K(a, b) and K(b, a) are bit-identical.
class KernelWorker {
 public:
  explicit KernelWorker(const KernelSpec &spec,
                        TreeKernelCache *cache = nullptr);

  // Fills the self-kernel fields.
  void ComputeSelf(PreparedInstance *p);

  double Evaluate(const PreparedInstance &a, const PreparedInstance &b);

 private:
  double Tree(TreeKernelEvaluator *eval, const CompiledTree &x, double self_x,
              const CompiledTree &y, double self_y, bool use_cache);
  double Vector(const std::vector<double> &u, double self_u,
                const std::vector<double> &v, double self_v) const;
  double Composite(const PreparedInstance &a, const PreparedInstance &b);

  KernelSpec spec_;
  TreeKernelCache *cache_;
  TreeKernelEvaluator tree_;
  TreeKernelEvaluator pet_;
};

// SM_TK over two pairs of labeled trees.
double SmTk(const std::pair<LabeledTree, LabeledTree> &pa,
            const std::pair<LabeledTree, LabeledTree> &pb,
            const PairKernelParams &params,
            const NodeSimilarity *similarity = nullptr);

// Composite kernel between two prepared relation instances. Self values
// are computed as needed.
double CompositeKernel(PreparedInstance a, PreparedInstance b,
                       const CompositeParams &params);

}  // namespace udtk

#endif  // UDTK_COMBINE_H_
