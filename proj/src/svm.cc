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

// Dual solver. Works on the minimization form
//   f(a) = 1/2 a'Qa - e'a,  Q_ij = y_i y_j K_ij,  0 <= a_i <= C_i,  y'a = 0
// keeping the gradient G = Qa - e. Each step picks the maximal violating
// pair (i, j) over the index sets
//   I_up  = {t : a_t < C_t, y_t = +1  or  a_t > 0, y_t = -1}
//   I_low = {t : a_t < C_t, y_t = -1  or  a_t > 0, y_t = +1}
// as i = argmax_{I_up} -y_t G_t and j = argmax_{I_low} y_t G_t, and solves
// the two-variable subproblem exactly.

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "udtk/error.h"
#include "udtk/learn.h"
#include "udtk/util.h"

namespace udtk {

namespace {

constexpr double kTau = 1e-12;

}  // namespace

double BinaryModel::Decision(const std::vector<double> &row) const {
  if (row.size() != coeffs.size()) {
    throw ArgumentError("kernel row has " + std::to_string(row.size()) +
                        " entries, model expects " +
                        std::to_string(coeffs.size()));
  }
  double f = bias;
  for (size_t i = 0; i < row.size(); ++i) f += coeffs[i] * row[i];
  return f;
}

double DualObjective(const GramMatrix &gram, const std::vector<int> &labels,
                     const std::vector<double> &alpha) {
  const int n = gram.rows;
  double linear = 0, quad = 0;
  for (int i = 0; i < n; ++i) {
    if (alpha[i] == 0) continue;
    linear += alpha[i];
    for (int j = 0; j < n; ++j) {
      if (alpha[j] == 0) continue;
      quad += alpha[i] * alpha[j] * labels[i] * labels[j] * gram.at(i, j);
    }
  }
  return linear - 0.5 * quad;
}

BinaryModel TrainBinary(const GramMatrix &gram, const std::vector<int> &labels,
                        const SvmOptions &options,
                        const std::vector<double> &costs) {
  const int n = gram.rows;
  if (gram.cols != n) throw ArgumentError("training Gram matrix must be square");
  if (static_cast<int>(labels.size()) != n) {
    throw ArgumentError("got " + std::to_string(labels.size()) +
                        " labels for a Gram matrix of order " +
                        std::to_string(n));
  }
  if (!costs.empty() && static_cast<int>(costs.size()) != n) {
    throw ArgumentError("per-instance costs must match the Gram order");
  }
  if (!(options.C > 0)) throw ConfigError("svm.C must be > 0");
  if (!(options.tol > 0)) throw ConfigError("svm.tol must be > 0");
  bool has_pos = false, has_neg = false;
  for (int y : labels) {
    if (y == 1) {
      has_pos = true;
    } else if (y == -1) {
      has_neg = true;
    } else {
      throw ArgumentError("binary labels must be +1 or -1");
    }
  }
  if (!has_pos || !has_neg) {
    throw TrainingError("binary training needs both classes; got only " +
                        std::string(has_pos ? "positive" : "negative") +
                        " instances");
  }
  for (double v : gram.values) {
    if (!std::isfinite(v)) {
      throw NumericError("Gram matrix has non-finite entries");
    }
  }

  std::vector<double> C(n, options.C);
  if (!costs.empty()) C = costs;
  std::vector<double> alpha(n, 0.0);
  std::vector<double> G(n, -1.0);
  auto Q = [&](int i, int j) { return labels[i] * labels[j] * gram.at(i, j); };
  auto objective = [&] {
    // f = 1/2 sum a_i (G_i - 1); the dual objective is -f.
    double f = 0;
    for (int i = 0; i < n; ++i) f += alpha[i] * (G[i] - 1.0);
    return -0.5 * f;
  };
  auto in_up = [&](int t) {
    return labels[t] == 1 ? alpha[t] < C[t] : alpha[t] > 0;
  };
  auto in_low = [&](int t) {
    return labels[t] == 1 ? alpha[t] > 0 : alpha[t] < C[t];
  };

  BinaryModel model;
  model.objective_trace.push_back(objective());
  const long max_iterations =
      options.max_iterations > 0
          ? options.max_iterations
          : std::max<long>(1000000, 100L * static_cast<long>(n));
  double best = model.objective_trace.back();
  int stagnant = 0;
  long iter = 0;
  double gap = 0;
  while (true) {
    int i = -1, j = -1;
    double gmax = -std::numeric_limits<double>::infinity();
    double gmax2 = -std::numeric_limits<double>::infinity();
    for (int t = 0; t < n; ++t) {
      if (in_up(t) && -labels[t] * G[t] > gmax) {
        gmax = -labels[t] * G[t];
        i = t;
      }
      if (in_low(t) && labels[t] * G[t] > gmax2) {
        gmax2 = labels[t] * G[t];
        j = t;
      }
    }
    gap = gmax + gmax2;
    if (i < 0 || j < 0 || gap <= options.tol) {
      model.converged = true;
      break;
    }
    if (iter >= max_iterations) break;

    const double old_i = alpha[i], old_j = alpha[j];
    const double Ci = C[i], Cj = C[j];
    const double Kii = gram.at(i, i), Kjj = gram.at(j, j);
    if (labels[i] != labels[j]) {
      double quad = Kii + Kjj + 2 * Q(i, j);
      if (quad <= 0) quad = kTau;
      double delta = (-G[i] - G[j]) / quad;
      double diff = alpha[i] - alpha[j];
      alpha[i] += delta;
      alpha[j] += delta;
      if (diff > 0) {
        if (alpha[j] < 0) {
          alpha[j] = 0;
          alpha[i] = diff;
        }
      } else if (alpha[i] < 0) {
        alpha[i] = 0;
        alpha[j] = -diff;
      }
      if (diff > Ci - Cj) {
        if (alpha[i] > Ci) {
          alpha[i] = Ci;
          alpha[j] = Ci - diff;
        }
      } else if (alpha[j] > Cj) {
        alpha[j] = Cj;
        alpha[i] = Cj + diff;
      }
    } else {
      double quad = Kii + Kjj - 2 * Q(i, j);
      if (quad <= 0) quad = kTau;
      double delta = (G[i] - G[j]) / quad;
      double sum = alpha[i] + alpha[j];
      alpha[i] -= delta;
      alpha[j] += delta;
      if (sum > Ci) {
        if (alpha[i] > Ci) {
          alpha[i] = Ci;
          alpha[j] = sum - Ci;
        }
      } else if (alpha[j] < 0) {
        alpha[j] = 0;
        alpha[i] = sum;
      }
      if (sum > Cj) {
        if (alpha[j] > Cj) {
          alpha[j] = Cj;
          alpha[i] = sum - Cj;
        }
      } else if (alpha[i] < 0) {
        alpha[i] = 0;
        alpha[j] = sum;
      }
    }
    const double di = alpha[i] - old_i, dj = alpha[j] - old_j;
    for (int t = 0; t < n; ++t) G[t] += Q(t, i) * di + Q(t, j) * dj;
    ++iter;

    if (iter % n == 0) {
      double obj = objective();
      model.objective_trace.push_back(obj);
      if (obj > best) {
        best = obj;
        stagnant = 0;
      } else if (++stagnant >= options.max_passes) {
        break;
      }
    }
  }
  if (iter % n != 0 || model.objective_trace.size() == 1) {
    model.objective_trace.push_back(objective());
  }
  model.iterations = iter;
  model.gap = gap;

  // Bias: mean of F_t = -y_t G_t over free vectors, else the midpoint of the
  // interval allowed by the bounded ones.
  double free_sum = 0;
  int free_count = 0;
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  for (int t = 0; t < n; ++t) {
    const double F = -labels[t] * G[t];
    if (alpha[t] > 0 && alpha[t] < C[t]) {
      free_sum += F;
      ++free_count;
    } else if ((alpha[t] == 0) == (labels[t] == 1)) {
      lower = std::max(lower, F);
    } else {
      upper = std::min(upper, F);
    }
  }
  if (free_count > 0) {
    model.bias = free_sum / free_count;
  } else if (std::isfinite(lower) && std::isfinite(upper)) {
    model.bias = 0.5 * (lower + upper);
  } else {
    model.bias = std::isfinite(lower) ? lower : upper;
  }
  model.alpha = alpha;
  model.coeffs.resize(n);
  for (int t = 0; t < n; ++t) model.coeffs[t] = alpha[t] * labels[t];
  return model;
}

std::vector<double> TrainingDecisions(const GramMatrix &gram,
                                      const BinaryModel &model) {
  std::vector<double> out(gram.rows);
  for (int i = 0; i < gram.rows; ++i) {
    double f = model.bias;
    for (int j = 0; j < gram.cols; ++j) f += model.coeffs[j] * gram.at(i, j);
    out[i] = f;
  }
  return out;
}

Prediction SvmModel::Predict(const std::vector<double> &row) const {
  if (row.size() != support_inputs.size()) {
    throw ArgumentError("kernel row has " + std::to_string(row.size()) +
                        " entries, model has " +
                        std::to_string(support_inputs.size()) +
                        " support instances");
  }
  Prediction p;
  for (const ClassModel &c : classes) {
    double f = c.bias;
    for (size_t k = 0; k < c.support.size(); ++k) {
      f += c.coeffs[k] * row[c.support[k]];
    }
    p.decisions.push_back(f);
  }
  if (binary) {
    p.label = p.decisions[0] > 0 ? labels[positive_index]
                                 : labels[1 - positive_index];
    return p;
  }
  size_t best = 0;
  for (size_t c = 1; c < p.decisions.size(); ++c) {
    if (p.decisions[c] > p.decisions[best]) best = c;
  }
  p.label = classes[best].label;
  return p;
}

SvmModel TrainModel(const GramMatrix &gram,
                    const std::vector<std::string> &labels,
                    const std::vector<KernelInput> &inputs,
                    const SvmOptions &options, bool binary,
                    const std::string &positive_label) {
  const int n = gram.rows;
  if (static_cast<int>(labels.size()) != n ||
      static_cast<int>(inputs.size()) != n) {
    throw ArgumentError("labels and inputs must match the Gram order");
  }
  std::set<std::string> distinct(labels.begin(), labels.end());
  if (distinct.size() < 2) {
    throw TrainingError("training needs at least two classes, got " +
                        std::to_string(distinct.size()));
  }
  SvmModel model;
  model.labels.assign(distinct.begin(), distinct.end());
  model.binary = binary;
  if (binary) {
    if (model.labels.size() != 2) {
      throw TrainingError("binary training needs exactly two classes, got " +
                          std::to_string(model.labels.size()));
    }
    auto it = std::find(model.labels.begin(), model.labels.end(),
                        positive_label.empty() ? model.labels[1]
                                               : positive_label);
    if (it == model.labels.end()) {
      throw TrainingError("positive label '" + positive_label +
                          "' does not occur in the training data");
    }
    model.positive_index = static_cast<int>(it - model.labels.begin());
  }
  std::vector<double> costs(n);
  for (int i = 0; i < n; ++i) {
    auto w = options.class_weights.find(labels[i]);
    costs[i] = options.C * (w == options.class_weights.end() ? 1.0 : w->second);
    if (!(costs[i] > 0)) {
      throw ConfigError("class weight for '" + labels[i] + "' must be > 0");
    }
  }

  std::vector<std::string> targets;
  if (binary) {
    targets.push_back(model.labels[model.positive_index]);
  } else {
    targets = model.labels;
  }
  std::vector<BinaryModel> fitted;
  std::vector<char> used(n, 0);
  long total_iterations = 0;
  bool all_converged = true;
  for (const std::string &target : targets) {
    std::vector<int> y(n);
    for (int i = 0; i < n; ++i) y[i] = labels[i] == target ? 1 : -1;
    BinaryModel m;
    try {
      m = TrainBinary(gram, y, options, costs);
    } catch (const Error &e) {
      RethrowWithContext(e, "class '" + target + "': ");
    }
    for (int i = 0; i < n; ++i) {
      if (m.alpha[i] > 0) used[i] = 1;
    }
    total_iterations += m.iterations;
    all_converged = all_converged && m.converged;
    fitted.push_back(std::move(m));
  }
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) {
    if (!used[i]) continue;
    position[i] = static_cast<int>(model.support_inputs.size());
    model.support_inputs.push_back(inputs[i]);
  }
  for (size_t c = 0; c < targets.size(); ++c) {
    ClassModel cm;
    cm.label = targets[c];
    cm.bias = fitted[c].bias;
    for (int i = 0; i < n; ++i) {
      if (fitted[c].alpha[i] > 0) {
        cm.support.push_back(position[i]);
        cm.coeffs.push_back(fitted[c].coeffs[i]);
      }
    }
    model.classes.push_back(std::move(cm));
  }
  model.training_meta["instances"] = std::to_string(n);
  model.training_meta["C"] = FormatDouble(options.C);
  model.training_meta["tol"] = FormatDouble(options.tol);
  model.training_meta["max_passes"] = std::to_string(options.max_passes);
  model.training_meta["iterations"] = std::to_string(total_iterations);
  model.training_meta["converged"] = all_converged ? "true" : "false";
  return model;
}

}  // namespace udtk
