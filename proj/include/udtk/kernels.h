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

// Convolution tree kernels over LabeledTree pairs.
//
// K(T1, T2) = sum over node pairs (n1, n2) of Delta(n1, n2), where Delta
// counts the decayed common fragments rooted at n1 and n2:
//
//   SST  (subset trees)  Delta = 0 for leaves or different productions,
//                        otherwise lambda * prod_i (1 + Delta(c1_i, c2_i)).
//   PTK  (partial trees) Delta = 0 for different labels, otherwise
//                        mu * (lambda^2 + sum over equal-length child index
//                        subsequences J1, J2 of
//                        lambda^(gaps(J1) + gaps(J2)) * prod Delta(...)),
//                        gaps(J) = J_last - J_first + 1 - |J| (the siblings
//                        skipped inside the subsequence window).
//   SPTK (smoothed PTK)  PTK with the label test replaced by a factor
//                        sigma(n1, n2) in [0, 1].
//
// Trees are flattened in post-order so the Delta table can be filled in a
// single pass with every node pair evaluated exactly once.

#ifndef UDTK_KERNELS_H_
#define UDTK_KERNELS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "udtk/lexsim.h"
#include "udtk/trees.h"

namespace udtk {

enum class TreeKernelKind { kSst, kPtk, kSptk };

std::string ToString(TreeKernelKind kind);
// Accepts "SST", "PTK", "SPTK" (case-insensitive). Throws ConfigError.
TreeKernelKind ParseTreeKernelKind(std::string_view name);

struct TreeKernelParams {
  TreeKernelKind kind = TreeKernelKind::kPtk;
  double lambda = 0.4;
  double mu = 0.4;
  std::optional<SigmaConfig> sigma;
  bool normalize = true;

  // Defaults with the given kind.
  static TreeKernelParams Of(TreeKernelKind kind) {
    TreeKernelParams p;
    p.kind = kind;
    return p;
  }

  // Throws ConfigError for out-of-range decays or SPTK without sigma.
  void Validate() const;

  bool operator==(const TreeKernelParams &other) const = default;
};

// Flattened, immutable view of a LabeledTree ready for kernel evaluation.
// Lexical nodes may carry resolved unit word vectors for SPTK.
class CompiledTree {
 public:
  struct Node {
    uint64_t label_hash = 0;
    uint64_t production_hash = 0;
    int label = 0;  // index into labels()
    int pos = 0;    // index into labels()
    int child_begin = 0;
    int child_count = 0;
    NodeKind kind = NodeKind::kSyntactic;
    int vector_offset = -1;
  };

  CompiledTree() = default;

  // Without a similarity, no word vectors are attached.
  static CompiledTree Compile(const LabeledTree &tree,
                              const NodeSimilarity *similarity = nullptr,
                              std::string_view language = "");

  int size() const { return static_cast<int>(nodes_.size()); }
  const Node &node(int i) const { return nodes_[i]; }
  std::span<const int> children(int i) const {
    return std::span<const int>(children_.data() + nodes_[i].child_begin,
                                nodes_[i].child_count);
  }
  const std::string &label(int i) const { return strings_[nodes_[i].label]; }
  const std::string &pos(int i) const { return strings_[nodes_[i].pos]; }
  std::span<const double> unit_vector(int i) const;
  bool has_vectors() const { return has_vectors_; }
  const std::string &language() const { return language_; }

  // Hash of the annotated tree and its language; equal trees share it.
  uint64_t fingerprint() const { return fingerprint_; }

 private:
  int Flatten(const LabeledTree &tree, const NodeSimilarity *similarity);
  int Intern(const std::string &s);

  std::vector<Node> nodes_;
  std::vector<int> children_;
  std::vector<std::string> strings_;
  std::vector<double> vectors_;
  int dimension_ = 0;
  bool has_vectors_ = false;
  std::string language_;
  uint64_t fingerprint_ = 0;
};

// Dense |N1| x |N2| table of Delta values, rows and columns in post-order.
struct DeltaMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> values;

  double at(int i, int j) const { return values[i * cols + j]; }
};

// Evaluates one kernel configuration. Holds per-call scratch, so one
// instance must not be shared across threads; create one per worker.
class TreeKernelEvaluator {
 public:
  explicit TreeKernelEvaluator(TreeKernelParams params);

  const TreeKernelParams &params() const { return params_; }

  // Unnormalized kernel. Throws NumericError on overflow.
  double Raw(const CompiledTree &a, const CompiledTree &b);

  // Applies params().normalize with the given self-kernel values.
  double Normalized(double raw, double self_a, double self_b) const;

  // Kernel honoring params().normalize.
  double Evaluate(const CompiledTree &a, const CompiledTree &b);

  // Delta table of the most recent Raw call.
  DeltaMatrix LastDelta() const;

 private:
  double Delta(const CompiledTree &a, int i, const CompiledTree &b, int j);
  double ChildSubsequences(const CompiledTree &a, int i, const CompiledTree &b,
                           int j);
  bool SameLabel(const CompiledTree &a, int i, const CompiledTree &b,
                 int j) const;
  bool SameProduction(const CompiledTree &a, int i, const CompiledTree &b,
                      int j) const;
  double Sigma(const CompiledTree &a, int i, const CompiledTree &b,
               int j) const;

  TreeKernelParams params_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> delta_;
  std::vector<double> dps_;
  std::vector<double> dp_;
};

// One-shot convenience: compiles both trees and evaluates the kernel. For
// SPTK, `similarity` resolves word vectors (may be null for the label
// indicator).
double TreeKernel(const LabeledTree &t1, const LabeledTree &t2,
                  const TreeKernelParams &params,
                  const NodeSimilarity *similarity = nullptr,
                  std::string_view language1 = "",
                  std::string_view language2 = "");

DeltaMatrix ComputeDeltaMatrix(const LabeledTree &t1, const LabeledTree &t2,
                               const TreeKernelParams &params,
                               const NodeSimilarity *similarity = nullptr,
                               std::string_view language1 = "",
                               std::string_view language2 = "");

// Labels of a tree's nodes in the post-order used by DeltaMatrix.
std::vector<std::string> PostOrderLabels(const LabeledTree &tree);

// (u . v + coef0)^degree. Throws ArgumentError on dimension mismatch or
// degree < 1.
double PolyKernel(std::span<const double> u, std::span<const double> v,
                  int degree, double coef0);

// Largest tree accepted by BruteForceKernel.
inline constexpr int kBruteForceMaxNodes = 6;

// Reference implementation that enumerates every fragment embedding rooted
// at every node of both trees and sums the decayed matches. Exponential;
// intended for testing. Supports SST and PTK. Throws ArgumentError for
// trees larger than kBruteForceMaxNodes.
double BruteForceKernel(const LabeledTree &t1, const LabeledTree &t2,
                        TreeKernelKind kind, double lambda, double mu);

// Process-wide instrumentation of raw kernel evaluations.
struct KernelCallCounts {
  uint64_t sst = 0;
  uint64_t ptk = 0;
  uint64_t sptk = 0;
  uint64_t poly = 0;
};
KernelCallCounts GetKernelCallCounts();
void ResetKernelCallCounts();

}  // namespace udtk

#endif  // UDTK_KERNELS_H_
