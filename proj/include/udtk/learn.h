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

// Kernel machines over precomputed kernel values: Gram matrices, a C-SVM
// dual solver, one-vs-rest multiclass models and their persistence.

#ifndef UDTK_LEARN_H_
#define UDTK_LEARN_H_

#include <map>
#include <string>
#include <vector>

#include "udtk/combine.h"

namespace udtk {

// Dense row-major kernel matrix between two instance lists. Square and
// symmetric when both lists are the same.
struct GramMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> values;
  std::vector<std::string> row_ids;
  std::vector<std::string> col_ids;
  std::string fingerprint;

  double at(int i, int j) const {
    return values[static_cast<size_t>(i) * cols + j];
  }
  // Builds a square matrix from row-major values (tests and tools).
  static GramMatrix Square(int n, std::vector<double> values);
};

// Resolves a thread count; 0 means the hardware concurrency.
int ResolveThreads(int threads);

// Computes self-kernel values of every instance, in parallel.
void ComputeSelfKernels(const KernelSpec &spec,
                        std::vector<PreparedInstance> *instances, int threads);

// Upper triangle by independent evaluations, mirrored. Cells are handed out
// row by row to `threads` workers; results do not depend on the schedule.
// Errors name the offending instance pair.
GramMatrix ComputeGram(const KernelSpec &spec,
                       const std::vector<PreparedInstance> &instances,
                       int threads = 1, TreeKernelCache *cache = nullptr);

// K(rows[i], cols[j]) for every pair.
GramMatrix ComputeCross(const KernelSpec &spec,
                        const std::vector<PreparedInstance> &rows,
                        const std::vector<PreparedInstance> &cols,
                        int threads = 1, TreeKernelCache *cache = nullptr);

// Text form: one row per line, tab-separated, 17 significant digits.
std::string GramToTsv(const GramMatrix &gram);
// Binary form: "UDTKGRAM", int32 rows, int32 cols, little-endian doubles.
std::string GramToBinary(const GramMatrix &gram);
// Throws FormatError.
GramMatrix GramFromTsv(std::string_view text);
GramMatrix GramFromBinary(std::string_view bytes);

// Manifest JSON accompanying a written matrix.
std::string GramManifest(const GramMatrix &gram, const KernelSpec &spec,
                         const std::string &format);

struct SvmOptions {
  double C = 1.0;
  double tol = 1e-3;
  // Stop after this many consecutive sweeps without dual improvement.
  int max_passes = 10;
  // Hard cap on pair updates; 0 means max(10^6, 100 n).
  long max_iterations = 0;
  // Multipliers of C per class label (absent classes use 1).
  std::map<std::string, double> class_weights;
};

struct BinaryModel {
  // Per training instance: alpha_i and alpha_i * y_i.
  std::vector<double> alpha;
  std::vector<double> coeffs;
  double bias = 0;
  // Dual objective after each sweep of n pair updates, starting with the
  // value at alpha = 0.
  std::vector<double> objective_trace;
  long iterations = 0;
  bool converged = false;
  // Largest KKT violation m(alpha) - M(alpha) at exit.
  double gap = 0;

  // Sum of coeffs[i] * row[i] + bias.
  double Decision(const std::vector<double> &row) const;
};

// Soft-margin C-SVM dual by maximal-violating-pair updates. `labels` are
// +1/-1; `costs` are per-instance upper bounds (empty: all C). Throws
// TrainingError for a single class and NumericError for non-finite
// entries.
BinaryModel TrainBinary(const GramMatrix &gram, const std::vector<int> &labels,
                        const SvmOptions &options,
                        const std::vector<double> &costs = {});

// Decision values of a trained model on the training instances.
std::vector<double> TrainingDecisions(const GramMatrix &gram,
                                      const BinaryModel &model);

// Dual objective sum(alpha) - 1/2 sum alpha_i alpha_j y_i y_j K_ij.
double DualObjective(const GramMatrix &gram, const std::vector<int> &labels,
                     const std::vector<double> &alpha);

// One decision function over the model's support instances.
struct ClassModel {
  std::string label;
  double bias = 0;
  std::vector<double> coeffs;  // aligned with `support`
  std::vector<int> support;    // indices into SvmModel::support_inputs
};

struct Prediction {
  std::string label;
  // Binary: one value, > 0 means the positive label. One-vs-rest: one per
  // class in SvmModel::labels order.
  std::vector<double> decisions;
};

struct SvmModel {
  std::string task;
  KernelSpec spec;
  // Sorted class labels.
  std::vector<std::string> labels;
  // Binary models hold one ClassModel for labels[positive_index].
  bool binary = false;
  int positive_index = 1;
  std::vector<ClassModel> classes;
  // Union of support instances of all classes.
  std::vector<KernelInput> support_inputs;
  std::optional<EntityVocabulary> entity_vocabulary;
  std::map<std::string, std::string> training_meta;

  // `row[i]` = K(x, support_inputs[i]). Ties go to the smallest label.
  // Throws ArgumentError on a length mismatch.
  Prediction Predict(const std::vector<double> &row) const;
};

// Trains one-vs-rest models (or one binary model when `binary` and exactly
// two labels). `inputs` are the training instances in Gram order.
SvmModel TrainModel(const GramMatrix &gram,
                    const std::vector<std::string> &labels,
                    const std::vector<KernelInput> &inputs,
                    const SvmOptions &options, bool binary,
                    const std::string &positive_label = "");

// Versioned JSON. Throws LoadError on a missing/unknown version or a
// malformed document.
std::string ModelToJson(const SvmModel &model);
SvmModel ModelFromJson(std::string_view json);
void SaveModel(const SvmModel &model, const std::string &path);
SvmModel LoadModel(const std::string &path);

inline constexpr const char *kModelVersion = "udtk-model/1";

}  // namespace udtk

#endif  // UDTK_LEARN_H_
