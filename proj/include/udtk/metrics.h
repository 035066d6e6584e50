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

// Classification metrics: accuracy, per-class precision/recall/F1, macro
// and micro averages and the confusion matrix.

#ifndef UDTK_METRICS_H_
#define UDTK_METRICS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace udtk {

struct EvalOptions {
  // Leave `other_label` out of the macro and micro averages.
  bool exclude_other = false;
  // Score "R(e1,e2)" and "R(e2,e1)" as one class "R".
  bool merge_directions = false;
  std::string other_label = "Other";
  // Binary tasks: report the F1 of this class.
  std::optional<std::string> positive_label;
};

struct ClassMetrics {
  std::string label;
  int support = 0;    // gold count
  int predicted = 0;  // predicted count
  int true_positives = 0;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

struct EvalReport {
  int total = 0;
  double accuracy = 0;
  std::vector<ClassMetrics> per_class;  // sorted by label
  double macro_f1 = 0;
  double micro_f1 = 0;
  std::optional<double> positive_f1;
  // confusion[g][p]: gold labels[g] predicted as labels[p].
  std::vector<std::string> labels;
  std::vector<std::vector<int>> confusion;
  EvalOptions options;
};

// Drops a trailing "(e1,e2)" or "(e2,e1)".
std::string MergeDirection(std::string_view label);

// Zero-division cases score 0. Throws ArgumentError when the lists differ
// in length or are empty.
EvalReport Evaluate(const std::vector<std::string> &gold,
                    const std::vector<std::string> &predicted,
                    const EvalOptions &options = {});

// Aligned table with percentages to one decimal place.
std::string RenderReport(const EvalReport &report);
std::string ReportToJson(const EvalReport &report);

}  // namespace udtk

#endif  // UDTK_METRICS_H_
