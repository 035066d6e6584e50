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

#include "udtk/kernels.h"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "udtk/error.h"
#include "udtk/util.h"

namespace udtk {

namespace {

std::atomic<uint64_t> sst_calls{0};
std::atomic<uint64_t> ptk_calls{0};
std::atomic<uint64_t> sptk_calls{0};
std::atomic<uint64_t> poly_calls{0};

void CountCall(TreeKernelKind kind) {
  switch (kind) {
    case TreeKernelKind::kSst:
      sst_calls.fetch_add(1, std::memory_order_relaxed);
      break;
    case TreeKernelKind::kPtk:
      ptk_calls.fetch_add(1, std::memory_order_relaxed);
      break;
    case TreeKernelKind::kSptk:
      sptk_calls.fetch_add(1, std::memory_order_relaxed);
      break;
  }
}

// Separator that cannot occur inside a hashed label sequence.
constexpr char kSep = '\x1f';

}  // namespace

std::string ToString(TreeKernelKind kind) {
  switch (kind) {
    case TreeKernelKind::kSst:
      return "SST";
    case TreeKernelKind::kPtk:
      return "PTK";
    case TreeKernelKind::kSptk:
      return "SPTK";
  }
  return "?";
}

TreeKernelKind ParseTreeKernelKind(std::string_view name) {
  std::string lower = AsciiLower(name);
  if (lower == "sst") return TreeKernelKind::kSst;
  if (lower == "ptk") return TreeKernelKind::kPtk;
  if (lower == "sptk") return TreeKernelKind::kSptk;
  throw ConfigError("unknown tree kernel '" + std::string(name) +
                    "' (expected SST, PTK or SPTK)");
}

void TreeKernelParams::Validate() const {
  if (!(lambda > 0 && lambda <= 1)) {
    throw ConfigError("lambda must be in (0, 1], got " + FormatDouble(lambda));
  }
  if (!(mu > 0 && mu <= 1)) {
    throw ConfigError("mu must be in (0, 1], got " + FormatDouble(mu));
  }
  if (kind == TreeKernelKind::kSptk && !sigma.has_value()) {
    throw ConfigError("SPTK needs a sigma configuration");
  }
}

// CompiledTree.

CompiledTree CompiledTree::Compile(const LabeledTree &tree,
                                   const NodeSimilarity *similarity,
                                   std::string_view language) {
  CompiledTree out;
  out.language_ = std::string(language);
  out.has_vectors_ = similarity != nullptr;
  out.nodes_.reserve(tree.NodeCount());
  out.Flatten(tree, similarity);
  out.fingerprint_ = Fnv1a(out.language_, Fnv1a(ToBracketed(tree, true)));
  return out;
}

int CompiledTree::Intern(const std::string &s) {
  for (size_t i = 0; i < strings_.size(); ++i) {
    if (strings_[i] == s) return static_cast<int>(i);
  }
  strings_.push_back(s);
  return static_cast<int>(strings_.size()) - 1;
}

int CompiledTree::Flatten(const LabeledTree &tree,
                          const NodeSimilarity *similarity) {
  std::vector<int> kids;
  kids.reserve(tree.children.size());
  for (const LabeledTree &c : tree.children) {
    kids.push_back(Flatten(c, similarity));
  }
  Node node;
  node.label = Intern(tree.label);
  node.pos = Intern(tree.pos_tag);
  node.kind = tree.kind;
  node.label_hash = Fnv1a(tree.label);
  std::string production = tree.label;
  for (const LabeledTree &c : tree.children) {
    production += kSep;
    production += c.label;
  }
  node.production_hash = Fnv1a(production);
  node.child_begin = static_cast<int>(children_.size());
  node.child_count = static_cast<int>(kids.size());
  children_.insert(children_.end(), kids.begin(), kids.end());
  if (similarity != nullptr && tree.kind == NodeKind::kLexical) {
    std::vector<double> unit = similarity->ResolveUnitVector(tree, language_);
    if (!unit.empty()) {
      if (dimension_ == 0) dimension_ = static_cast<int>(unit.size());
      node.vector_offset = static_cast<int>(vectors_.size());
      vectors_.insert(vectors_.end(), unit.begin(), unit.end());
    }
  }
  nodes_.push_back(node);
  return static_cast<int>(nodes_.size()) - 1;
}

std::span<const double> CompiledTree::unit_vector(int i) const {
  const Node &n = nodes_[i];
  if (n.vector_offset < 0) return {};
  return std::span<const double>(vectors_.data() + n.vector_offset,
                                 dimension_);
}

// TreeKernelEvaluator.

TreeKernelEvaluator::TreeKernelEvaluator(TreeKernelParams params)
    : params_(std::move(params)) {
  params_.Validate();
}

bool TreeKernelEvaluator::SameLabel(const CompiledTree &a, int i,
                                    const CompiledTree &b, int j) const {
  return a.node(i).label_hash == b.node(j).label_hash &&
         a.label(i) == b.label(j);
}

bool TreeKernelEvaluator::SameProduction(const CompiledTree &a, int i,
                                         const CompiledTree &b, int j) const {
  const CompiledTree::Node &x = a.node(i);
  const CompiledTree::Node &y = b.node(j);
  if (x.production_hash != y.production_hash ||
      x.child_count != y.child_count || a.label(i) != b.label(j)) {
    return false;
  }
  std::span<const int> cx = a.children(i);
  std::span<const int> cy = b.children(j);
  for (size_t k = 0; k < cx.size(); ++k) {
    if (a.label(cx[k]) != b.label(cy[k])) return false;
  }
  return true;
}

double TreeKernelEvaluator::Sigma(const CompiledTree &a, int i,
                                  const CompiledTree &b, int j) const {
  SigmaNode x{a.label(i), a.node(i).kind, a.pos(i), a.unit_vector(i)};
  SigmaNode y{b.label(j), b.node(j).kind, b.pos(j), b.unit_vector(j)};
  return SigmaValue(*params_.sigma, x, y);
}

// Sum over equal-length child subsequences of the gap-decayed products of
// child Deltas. Child Deltas are already in delta_ (post-order).
double TreeKernelEvaluator::ChildSubsequences(const CompiledTree &a, int i,
                                              const CompiledTree &b, int j) {
  std::span<const int> c1 = a.children(i);
  std::span<const int> c2 = b.children(j);
  const int n = static_cast<int>(c1.size());
  const int m = static_cast<int>(c2.size());
  const int stride = m + 1;
  const double lambda = params_.lambda;
  const double lambda2 = lambda * lambda;
  dps_.assign((n + 1) * stride, 0.0);
  dp_.assign((n + 1) * stride, 0.0);
  auto child_delta = [&](int r, int c) {
    return delta_[c1[r - 1] * cols_ + c2[c - 1]];
  };

  double sum = 0;
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= m; ++c) {
      double d = child_delta(r, c);
      dps_[r * stride + c] = d;
      sum += d;
    }
  }
  const int max_length = std::min(n, m);
  for (int l = 1; l < max_length; ++l) {
    for (int c = 0; c <= m; ++c) dp_[(l - 1) * stride + c] = 0;
    for (int r = 0; r <= n; ++r) dp_[r * stride + (l - 1)] = 0;
    for (int r = l; r <= n; ++r) {
      for (int c = l; c <= m; ++c) {
        double v = dps_[r * stride + c] + lambda * dp_[(r - 1) * stride + c] +
                   lambda * dp_[r * stride + c - 1] -
                   lambda2 * dp_[(r - 1) * stride + c - 1];
        // Exact value is a sum of non-negative terms; clear rounding noise.
        dp_[r * stride + c] = v > 0 ? v : 0;
        double d = child_delta(r, c);
        double next = d == 0 ? 0 : d * dp_[(r - 1) * stride + c - 1];
        dps_[r * stride + c] = next;
        sum += next;
      }
    }
  }
  return sum;
}

double TreeKernelEvaluator::Delta(const CompiledTree &a, int i,
                                  const CompiledTree &b, int j) {
  const double lambda = params_.lambda;
  const double lambda2 = lambda * lambda;
  switch (params_.kind) {
    case TreeKernelKind::kSst: {
      if (a.node(i).child_count == 0 || b.node(j).child_count == 0) return 0;
      if (!SameProduction(a, i, b, j)) return 0;
      double prod = lambda;
      std::span<const int> c1 = a.children(i);
      std::span<const int> c2 = b.children(j);
      for (size_t k = 0; k < c1.size(); ++k) {
        prod *= 1.0 + delta_[c1[k] * cols_ + c2[k]];
      }
      return prod;
    }
    case TreeKernelKind::kPtk: {
      if (!SameLabel(a, i, b, j)) return 0;
      if (a.node(i).child_count == 0 || b.node(j).child_count == 0) {
        return params_.mu * lambda2;
      }
      return params_.mu * (lambda2 + ChildSubsequences(a, i, b, j));
    }
    case TreeKernelKind::kSptk: {
      double s = Sigma(a, i, b, j);
      if (s == 0) return 0;
      if (a.node(i).child_count == 0 || b.node(j).child_count == 0) {
        return params_.mu * s * lambda2;
      }
      return params_.mu * s * (lambda2 + ChildSubsequences(a, i, b, j));
    }
  }
  return 0;
}

double TreeKernelEvaluator::Raw(const CompiledTree &a, const CompiledTree &b) {
  if (params_.kind == TreeKernelKind::kSptk &&
      params_.sigma->mode != SigmaMode::kLabelIndicator &&
      (!a.has_vectors() || !b.has_vectors())) {
    throw ConfigError(
        "embeddings: SPTK trees must be compiled with a node similarity");
  }
  CountCall(params_.kind);
  rows_ = a.size();
  cols_ = b.size();
  delta_.assign(static_cast<size_t>(rows_) * cols_, 0.0);
  double total = 0;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      double d = Delta(a, i, b, j);
      delta_[i * cols_ + j] = d;
      total += d;
    }
  }
  if (!std::isfinite(total)) {
    throw NumericError(ToString(params_.kind) +
                       " kernel value is not finite; lower lambda/mu or "
                       "shrink the trees");
  }
  return total;
}

double TreeKernelEvaluator::Normalized(double raw, double self_a,
                                       double self_b) const {
  if (!params_.normalize) return raw;
  if (self_a <= 0 || self_b <= 0) return 0;
  double v = raw / std::sqrt(self_a * self_b);
  if (!std::isfinite(v)) {
    throw NumericError("normalized kernel value is not finite");
  }
  return v;
}

double TreeKernelEvaluator::Evaluate(const CompiledTree &a,
                                     const CompiledTree &b) {
  if (!params_.normalize) return Raw(a, b);
  double self_a = Raw(a, a);
  double self_b = Raw(b, b);
  return Normalized(Raw(a, b), self_a, self_b);
}

DeltaMatrix TreeKernelEvaluator::LastDelta() const {
  DeltaMatrix out;
  out.rows = rows_;
  out.cols = cols_;
  out.values = delta_;
  return out;
}

// Free functions.

double TreeKernel(const LabeledTree &t1, const LabeledTree &t2,
                  const TreeKernelParams &params,
                  const NodeSimilarity *similarity, std::string_view language1,
                  std::string_view language2) {
  TreeKernelEvaluator eval(params);
  CompiledTree a = CompiledTree::Compile(t1, similarity, language1);
  CompiledTree b = CompiledTree::Compile(t2, similarity, language2);
  // Fixed argument order keeps K(t1, t2) and K(t2, t1) bit-identical.
  if (b.fingerprint() < a.fingerprint()) return eval.Evaluate(b, a);
  return eval.Evaluate(a, b);
}

DeltaMatrix ComputeDeltaMatrix(const LabeledTree &t1, const LabeledTree &t2,
                               const TreeKernelParams &params,
                               const NodeSimilarity *similarity,
                               std::string_view language1,
                               std::string_view language2) {
  TreeKernelEvaluator eval(params);
  CompiledTree a = CompiledTree::Compile(t1, similarity, language1);
  CompiledTree b = CompiledTree::Compile(t2, similarity, language2);
  eval.Raw(a, b);
  return eval.LastDelta();
}

std::vector<std::string> PostOrderLabels(const LabeledTree &tree) {
  CompiledTree c = CompiledTree::Compile(tree);
  std::vector<std::string> out;
  out.reserve(c.size());
  for (int i = 0; i < c.size(); ++i) out.push_back(c.label(i));
  return out;
}

double PolyKernel(std::span<const double> u, std::span<const double> v,
                  int degree, double coef0) {
  if (u.size() != v.size()) {
    throw ArgumentError("polynomial kernel: dimensions " +
                        std::to_string(u.size()) + " and " +
                        std::to_string(v.size()) + " differ");
  }
  if (degree < 1) {
    throw ArgumentError("polynomial kernel: degree must be >= 1, got " +
                        std::to_string(degree));
  }
  poly_calls.fetch_add(1, std::memory_order_relaxed);
  double dot = coef0;
  for (size_t i = 0; i < u.size(); ++i) dot += u[i] * v[i];
  double out = 1;
  for (int k = 0; k < degree; ++k) out *= dot;
  if (!std::isfinite(out)) {
    throw NumericError("polynomial kernel value is not finite");
  }
  return out;
}

KernelCallCounts GetKernelCallCounts() {
  KernelCallCounts c;
  c.sst = sst_calls.load();
  c.ptk = ptk_calls.load();
  c.sptk = sptk_calls.load();
  c.poly = poly_calls.load();
  return c;
}

void ResetKernelCallCounts() {
  sst_calls = 0;
  ptk_calls = 0;
  sptk_calls = 0;
  poly_calls = 0;
}

}  // namespace udtk
