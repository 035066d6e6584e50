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

#include "udtk/metrics.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "json_util.h"
#include "udtk/error.h"

namespace udtk {

namespace {

double Ratio(double num, double den) { return den == 0 ? 0 : num / den; }

double F1(double p, double r) {
  if (p + r == 0) return 0;
  if (p == r) return p;
  return 2 * p * r / (p + r);
}

std::string Percent(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", 100 * x);
  return buf;
}

std::string Pad(const std::string &s, size_t width, bool left = true) {
  if (s.size() >= width) return s;
  std::string fill(width - s.size(), ' ');
  return left ? s + fill : fill + s;
}

}  // namespace

std::string MergeDirection(std::string_view label) {
  for (std::string_view suffix : {"(e1,e2)", "(e2,e1)"}) {
    if (label.size() > suffix.size() &&
        label.substr(label.size() - suffix.size()) == suffix) {
      return std::string(label.substr(0, label.size() - suffix.size()));
    }
  }
  return std::string(label);
}

EvalReport Evaluate(const std::vector<std::string> &gold_in,
                    const std::vector<std::string> &predicted_in,
                    const EvalOptions &options) {
  if (gold_in.size() != predicted_in.size()) {
    throw ArgumentError("gold and predicted label lists differ in length (" +
                        std::to_string(gold_in.size()) + " vs " +
                        std::to_string(predicted_in.size()) + ")");
  }
  if (gold_in.empty()) throw ArgumentError("nothing to evaluate");
  std::vector<std::string> gold = gold_in, predicted = predicted_in;
  if (options.merge_directions) {
    for (auto &g : gold) g = MergeDirection(g);
    for (auto &p : predicted) p = MergeDirection(p);
  }
  EvalReport report;
  report.options = options;
  report.total = static_cast<int>(gold.size());
  std::set<std::string> all(gold.begin(), gold.end());
  all.insert(predicted.begin(), predicted.end());
  report.labels.assign(all.begin(), all.end());
  std::map<std::string, int> index;
  for (size_t i = 0; i < report.labels.size(); ++i) {
    index[report.labels[i]] = static_cast<int>(i);
  }
  const size_t k = report.labels.size();
  report.confusion.assign(k, std::vector<int>(k, 0));
  int correct = 0;
  for (size_t i = 0; i < gold.size(); ++i) {
    ++report.confusion[index[gold[i]]][index[predicted[i]]];
    if (gold[i] == predicted[i]) ++correct;
  }
  report.accuracy = Ratio(correct, report.total);

  double macro_sum = 0;
  int macro_count = 0;
  long tp_sum = 0, pred_sum = 0, gold_sum = 0;
  for (size_t c = 0; c < k; ++c) {
    ClassMetrics m;
    m.label = report.labels[c];
    m.true_positives = report.confusion[c][c];
    for (size_t o = 0; o < k; ++o) {
      m.support += report.confusion[c][o];
      m.predicted += report.confusion[o][c];
    }
    m.precision = Ratio(m.true_positives, m.predicted);
    m.recall = Ratio(m.true_positives, m.support);
    m.f1 = F1(m.precision, m.recall);
    const bool scored = !(options.exclude_other && m.label == options.other_label);
    if (scored) {
      macro_sum += m.f1;
      ++macro_count;
      tp_sum += m.true_positives;
      pred_sum += m.predicted;
      gold_sum += m.support;
    }
    if (options.positive_label && m.label == *options.positive_label) {
      report.positive_f1 = m.f1;
    }
    report.per_class.push_back(m);
  }
  if (options.positive_label && !report.positive_f1) report.positive_f1 = 0.0;
  report.macro_f1 = Ratio(macro_sum, macro_count);
  report.micro_f1 = F1(Ratio(tp_sum, pred_sum), Ratio(tp_sum, gold_sum));
  return report;
}

std::string RenderReport(const EvalReport &r) {
  std::string out;
  out += "instances    " + std::to_string(r.total) + "\n";
  out += "accuracy     " + Percent(r.accuracy) + "\n";
  if (r.positive_f1) {
    out += "F1(" + *r.options.positive_label + ")" +
           std::string(std::max<int>(1, 8 - static_cast<int>(
                                                r.options.positive_label->size())),
                       ' ') +
           Percent(*r.positive_f1) + "\n";
  }
  out += "macro-F1     " + Percent(r.macro_f1);
  if (r.options.exclude_other) out += "  (excluding " + r.options.other_label + ")";
  out += "\n";
  out += "micro-F1     " + Percent(r.micro_f1) + "\n\n";

  size_t width = 5;
  for (const std::string &l : r.labels) width = std::max(width, l.size());
  width += 2;
  out += Pad("class", width) + Pad("P", 7, false) + Pad("R", 7, false) +
         Pad("F1", 7, false) + Pad("support", 9, false) + "\n";
  for (const ClassMetrics &m : r.per_class) {
    out += Pad(m.label, width) + Pad(Percent(m.precision), 7, false) +
           Pad(Percent(m.recall), 7, false) + Pad(Percent(m.f1), 7, false) +
           Pad(std::to_string(m.support), 9, false) + "\n";
  }
  out += "\nconfusion (rows gold, columns predicted)\n";
  size_t cell = 3;
  for (const auto &row : r.confusion) {
    for (int v : row) cell = std::max(cell, std::to_string(v).size());
  }
  cell += 1;
  size_t row_width = width;
  for (size_t g = 0; g < r.labels.size(); ++g) {
    row_width = std::max(
        row_width, std::to_string(g).size() + r.labels[g].size() + 4);
  }
  out += Pad("", row_width);
  for (size_t c = 0; c < r.labels.size(); ++c) {
    out += Pad("c" + std::to_string(c), cell + 1, false);
  }
  out += "\n";
  for (size_t g = 0; g < r.labels.size(); ++g) {
    out += Pad("c" + std::to_string(g) + " " + r.labels[g], row_width);
    for (int v : r.confusion[g]) out += Pad(std::to_string(v), cell + 1, false);
    out += "\n";
  }
  return out;
}

std::string ReportToJson(const EvalReport &r) {
  Json j;
  j["instances"] = r.total;
  j["accuracy"] = r.accuracy;
  j["macro_f1"] = r.macro_f1;
  j["micro_f1"] = r.micro_f1;
  if (r.positive_f1) {
    j["positive_label"] = *r.options.positive_label;
    j["positive_f1"] = *r.positive_f1;
  }
  Json classes = Json::array();
  for (const ClassMetrics &m : r.per_class) {
    classes.push_back({{"label", m.label},
                       {"support", m.support},
                       {"predicted", m.predicted},
                       {"true_positives", m.true_positives},
                       {"precision", m.precision},
                       {"recall", m.recall},
                       {"f1", m.f1}});
  }
  j["per_class"] = classes;
  j["labels"] = r.labels;
  j["confusion"] = r.confusion;
  j["flags"] = {{"exclude_other", r.options.exclude_other},
                {"merge_directions", r.options.merge_directions},
                {"other_label", r.options.other_label}};
  return j.dump(2) + "\n";
}

}  // namespace udtk
