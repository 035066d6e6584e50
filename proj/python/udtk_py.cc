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

// Python bindings: treebank reading, tree encodings, kernels, Gram
// matrices, the SVM solver, metrics and the config-driven commands.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "udtk/commands.h"
#include "udtk/error.h"
#include "udtk/kernels.h"
#include "udtk/learn.h"
#include "udtk/metrics.h"
#include "udtk/synthetic.h"
#include "udtk/treebank.h"
#include "udtk/treeform.h"
#include "udtk/trees.h"

namespace py = pybind11;

namespace {

udtk::TreeKernelParams Params(const std::string &kind, double lambda,
                              double mu, bool normalize) {
  udtk::TreeKernelParams p =
      udtk::TreeKernelParams::Of(udtk::ParseTreeKernelKind(kind));
  p.lambda = lambda;
  p.mu = mu;
  p.normalize = normalize;
  // Without word vectors SPTK compares labels exactly.
  if (p.kind == udtk::TreeKernelKind::kSptk) {
    udtk::SigmaConfig s;
    s.mode = udtk::SigmaMode::kLabelIndicator;
    p.sigma = s;
  }
  return p;
}

py::array_t<double> ToArray(const udtk::GramMatrix &g) {
  py::array_t<double> out({g.rows, g.cols});
  std::copy(g.values.begin(), g.values.end(), out.mutable_data());
  return out;
}

udtk::GramMatrix FromArray(const py::array_t<double, py::array::c_style |
                                                        py::array::forcecast>
                               &a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) {
    throw udtk::ArgumentError("expected a square matrix");
  }
  const int n = static_cast<int>(a.shape(0));
  return udtk::GramMatrix::Square(
      n, std::vector<double>(a.data(), a.data() + a.size()));
}

py::dict ReportDict(const udtk::EvalReport &r) {
  py::dict d;
  d["total"] = r.total;
  d["accuracy"] = r.accuracy;
  d["macro_f1"] = r.macro_f1;
  d["micro_f1"] = r.micro_f1;
  d["positive_f1"] = r.positive_f1;
  d["labels"] = r.labels;
  d["confusion"] = r.confusion;
  py::dict per_class;
  for (const udtk::ClassMetrics &c : r.per_class) {
    py::dict m;
    m["precision"] = c.precision;
    m["recall"] = c.recall;
    m["f1"] = c.f1;
    m["support"] = c.support;
    per_class[py::str(c.label)] = m;
  }
  d["per_class"] = per_class;
  return d;
}

}  // namespace

PYBIND11_MODULE(_udtk, m) {
  m.doc() = "Tree kernels over Universal Dependencies";

  static py::exception<udtk::Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const udtk::Error &e) {
      py::object type = py::reinterpret_borrow<py::object>(error.ptr());
      py::object exc = type(py::str(e.category() + ": " + e.what()));
      exc.attr("category") = e.category();
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<udtk::Token>(m, "Token")
      .def_readonly("id", &udtk::Token::id)
      .def_readonly("form", &udtk::Token::form)
      .def_readonly("lemma", &udtk::Token::lemma)
      .def_readonly("upos", &udtk::Token::upos)
      .def_readonly("head", &udtk::Token::head)
      .def_readonly("deprel", &udtk::Token::deprel)
      .def("__repr__", [](const udtk::Token &t) {
        return "<Token " + std::to_string(t.id) + " " + t.form + ">";
      });

  py::class_<udtk::DepTree>(m, "DepTree")
      .def_property_readonly("sent_id", &udtk::DepTree::sent_id)
      .def_property_readonly("text", &udtk::DepTree::text)
      .def_property_readonly("metadata", &udtk::DepTree::metadata)
      .def_property_readonly("tokens", &udtk::DepTree::tokens)
      .def_property_readonly("root", &udtk::DepTree::Root)
      .def("token", &udtk::DepTree::token, py::arg("id"))
      .def("children", &udtk::DepTree::Children, py::arg("id"))
      .def("__len__", &udtk::DepTree::size)
      .def("__eq__", &udtk::DepTree::operator==);

  py::class_<udtk::LabeledTree>(m, "LabeledTree")
      .def_readonly("label", &udtk::LabeledTree::label)
      .def_readonly("pos", &udtk::LabeledTree::pos_tag)
      .def_readonly("children", &udtk::LabeledTree::children)
      .def_property_readonly("is_lexical",
                             [](const udtk::LabeledTree &t) {
                               return t.kind == udtk::NodeKind::kLexical;
                             })
      .def_property_readonly("node_count", &udtk::LabeledTree::NodeCount)
      .def("to_bracketed",
           [](const udtk::LabeledTree &t, bool annotate) {
             return udtk::ToBracketed(t, annotate);
           },
           py::arg("annotate") = false)
      .def("__eq__", &udtk::LabeledTree::operator==)
      .def("__repr__", [](const udtk::LabeledTree &t) {
        return udtk::ToBracketed(t, true);
      });

  m.def("parse_conllu", &udtk::ParseConllu, py::arg("text"),
        py::arg("source") = "<input>");
  m.def("write_conllu",
        py::overload_cast<const std::vector<udtk::DepTree> &>(
            &udtk::WriteConllu),
        py::arg("trees"));
  m.def("validate", &udtk::Validate, py::arg("tree"),
        "Violation reports of one tree; empty when valid.");
  m.def("subtree_tokens", &udtk::SubtreeTokens, py::arg("tree"),
        py::arg("node"));

  m.def("to_lct",
        [](const udtk::DepTree &t, bool use_lemma) {
          return udtk::ToLct(t, udtk::LctOptions{use_lemma});
        },
        py::arg("tree"), py::arg("use_lemma") = true);
  m.def("shortest_path", &udtk::ShortestPath, py::arg("tree"), py::arg("e1"),
        py::arg("e2"));
  m.def("dependents", &udtk::Dependents, py::arg("tree"), py::arg("e"));
  m.def("parse_tree", &udtk::ParseLabeledTree, py::arg("text"),
        "Parses an annotated bracketed tree.");
  m.def("parse_constituency",
        [](const std::string &text) {
          std::vector<udtk::LabeledTree> out;
          for (const udtk::ConstTree &t : udtk::ParseBracketed(text)) {
            out.push_back(udtk::ToLabeledTree(t));
          }
          return out;
        },
        py::arg("text"));

  m.def("tree_kernel",
        [](const udtk::LabeledTree &a, const udtk::LabeledTree &b,
           const std::string &kind, double lambda, double mu,
           bool normalize) {
          return udtk::TreeKernel(a, b, Params(kind, lambda, mu, normalize));
        },
        py::arg("a"), py::arg("b"), py::arg("kind") = "PTK",
        py::arg("lam") = 0.4, py::arg("mu") = 0.4, py::arg("normalize") = true);
  m.def("brute_force_kernel",
        [](const udtk::LabeledTree &a, const udtk::LabeledTree &b,
           const std::string &kind, double lambda, double mu) {
          return udtk::BruteForceKernel(a, b, udtk::ParseTreeKernelKind(kind),
                                        lambda, mu);
        },
        py::arg("a"), py::arg("b"), py::arg("kind") = "PTK",
        py::arg("lam") = 0.4, py::arg("mu") = 0.4);
  m.def("softmax2", &udtk::Softmax2, py::arg("x1"), py::arg("x2"),
        py::arg("m") = 100.0);

  m.def("gram",
        [](const std::vector<udtk::LabeledTree> &trees,
           const std::string &spec_json, int threads) {
          udtk::KernelSpec spec = udtk::KernelSpecFromJson(spec_json);
          std::vector<udtk::PreparedInstance> prepared;
          for (size_t i = 0; i < trees.size(); ++i) {
            udtk::KernelInput in;
            in.id = std::to_string(i);
            in.trees = {trees[i]};
            in.languages = {""};
            prepared.push_back(udtk::Compile(in, nullptr));
          }
          py::gil_scoped_release release;
          udtk::ComputeSelfKernels(spec, &prepared, threads);
          udtk::GramMatrix g = udtk::ComputeGram(spec, prepared, threads);
          py::gil_scoped_acquire acquire;
          return ToArray(g);
        },
        py::arg("trees"), py::arg("spec") = "{\"type\": \"tree\"}",
        py::arg("threads") = 1,
        "Gram matrix of single trees under a kernel spec (JSON).");

  m.def("train_binary",
        [](const py::array_t<double, py::array::c_style |
                                         py::array::forcecast> &gram,
           const std::vector<int> &labels, double c, double tol) {
          udtk::SvmOptions opt;
          opt.C = c;
          opt.tol = tol;
          udtk::BinaryModel model =
              udtk::TrainBinary(FromArray(gram), labels, opt);
          py::dict d;
          d["alpha"] = model.alpha;
          d["bias"] = model.bias;
          d["converged"] = model.converged;
          d["objective_trace"] = model.objective_trace;
          return d;
        },
        py::arg("gram"), py::arg("labels"), py::arg("C") = 1.0,
        py::arg("tol") = 1e-3, "C-SVM dual on a precomputed kernel matrix.");

  m.def("evaluate",
        [](const std::vector<std::string> &gold,
           const std::vector<std::string> &predicted, bool exclude_other,
           bool merge_directions, std::optional<std::string> positive_label) {
          udtk::EvalOptions o;
          o.exclude_other = exclude_other;
          o.merge_directions = merge_directions;
          o.positive_label = positive_label;
          return ReportDict(udtk::Evaluate(gold, predicted, o));
        },
        py::arg("gold"), py::arg("predicted"), py::arg("exclude_other") = false,
        py::arg("merge_directions") = false,
        py::arg("positive_label") = py::none());

  m.def("synth",
        [](const std::string &task, const std::string &out, uint64_t seed,
           int train, int test) {
          if (task == "pi") {
            udtk::WriteCorpus(udtk::SyntheticPi(seed, train, test), out);
          } else if (task == "re") {
            udtk::WriteCorpus(udtk::SyntheticRe(seed, train, test), out);
          } else {
            throw udtk::UsageError("unknown task '" + task +
                                   "' (expected pi or re)");
          }
        },
        py::arg("task"), py::arg("out"), py::arg("seed") = 0,
        py::arg("train") = 40, py::arg("test") = 40,
        "Writes a synthetic corpus and its config.json.");
  m.def("train",
        [](const std::string &config, int threads) {
          udtk::CommandOptions o;
          o.threads = threads;
          udtk::SvmModel model =
              udtk::RunTrain(udtk::LoadRunConfig(config), std::nullopt, o);
          return model.labels;
        },
        py::arg("config"), py::arg("threads") = 1,
        "Trains from a config file and writes the model; returns the labels.");
  m.def("run_eval",
        [](const std::string &config, int threads) {
          udtk::CommandOptions o;
          o.threads = threads;
          return ReportDict(udtk::RunEval(udtk::LoadRunConfig(config),
                                          std::nullopt, std::nullopt,
                                          std::nullopt, o));
        },
        py::arg("config"), py::arg("threads") = 1,
        "Predicts the test split with the saved model and scores it.");
}
