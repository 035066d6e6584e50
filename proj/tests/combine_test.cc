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

#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "support.h"
#include "udtk/combine.h"
#include "udtk/error.h"
#include "udtk/learn.h"

namespace udtk {
namespace {

using testing::Rng;

LabeledTree T(const std::string &annotated) {
  return ParseLabeledTree(annotated);
}

PreparedInstance Prepare(const KernelInput &in) {
  return Compile(in, nullptr);
}

KernelInput Relation(const std::string &lct, const std::string &pet,
                     std::vector<double> features) {
  KernelInput in;
  in.id = lct;
  in.trees.push_back(T(lct));
  in.languages.push_back("en");
  in.pet = T(pet);
  in.features = std::move(features);
  return in;
}

double NormalizedPoly(const std::vector<double> &u,
                      const std::vector<double> &v) {
  return PolyKernel(u, v, 2, 1) /
         std::sqrt(PolyKernel(u, u, 2, 1) * PolyKernel(v, v, 2, 1));
}

CompositeParams Variant(CompositeVariant v, double alpha) {
  CompositeParams p;
  p.variant = v;
  p.alpha = alpha;
  p.feature_mode = BoundFeatureMode(v);
  return p;
}

TEST_SUITE("combine") {

TEST_CASE("softmax examples") {
  CHECK(Softmax2(0, 0, 100) == doctest::Approx(std::log(2.0) / 100));
  CHECK(std::abs(Softmax2(0, 0, 100) - 0.0069315) < 1e-7);
  double s = Softmax2(1, 0, 100);
  CHECK(s >= 1.0);
  CHECK(s <= 1.0 + 1e-12);
  CHECK(Softmax2(-3, 5, 2) >= 5.0);
}

TEST_CASE("property: softmax envelope") {
  Rng rng(43);
  std::uniform_real_distribution<double> x(-50, 50);
  for (int trial = 0; trial < 20000; ++trial) {
    double a = x(rng), b = x(rng);
    double m = trial % 2 ? 100.0 : 0.5 + (trial % 7);
    double s = Softmax2(a, b, m);
    CHECK(s >= std::max(a, b));
    CHECK(s <= std::max(a, b) + std::log(2.0) / m + 1e-12);
  }
}

TEST_CASE("pair kernel examples") {
  PairKernelParams p;
  LabeledTree t = T("(a (b) (c))");
  CHECK(SmTk({t, t}, {t, t}, p) ==
        doctest::Approx(1 + std::log(2.0) / p.m).epsilon(1e-14));

  LabeledTree u = T("(a (b))");
  LabeledTree v = T("(c (d) (a))");
  LabeledTree w = T("(b (b (c)))");
  double k = SmTk({t, u}, {v, w}, p);
  CHECK(k == SmTk({t, u}, {w, v}, p));
  CHECK(k == SmTk({v, w}, {t, u}, p));
  CHECK(k == SmTk({u, t}, {w, v}, p));

  PairKernelParams exact;
  exact.base.normalize = false;
  CHECK(SmTk({T("(a)"), T("(b)")}, {T("(c)"), T("(d)")}, exact) ==
        doctest::Approx(std::log(2.0) / exact.m).epsilon(1e-14));
}

TEST_CASE("composite examples") {
  KernelInput a = Relation("(x|NOUN (nsubj) (NOUN))", "(NP (NN (x|NN)))",
                           {0.1, 0.7, -0.2});
  KernelInput b = Relation("(y|NOUN (nsubj) (NOUN) (z|VERB (obj) (VERB)))",
                           "(S (NP (NN (y|NN))) (VP (VB (z|VB))))", {0.4, -0.1, 0.3});

  SUBCASE("identical instances under CK2") {
    CHECK(CompositeKernel(Prepare(a), Prepare(a),
                          Variant(CompositeVariant::kCk2, 0.23)) ==
          doctest::Approx(4.0).epsilon(1e-14));
  }
  SUBCASE("CK3 at alpha one is the constituency kernel") {
    TreeKernelParams sst = TreeKernelParams::Of(TreeKernelKind::kSst);
    CHECK(CompositeKernel(Prepare(a), Prepare(b),
                          Variant(CompositeVariant::kCk3, 1.0)) ==
          doctest::Approx(TreeKernel(*a.pet, *b.pet, sst)).epsilon(1e-14));
  }
  SUBCASE("CK1 term by term") {
    double k_sst = TreeKernel(*a.pet, *b.pet,
                              TreeKernelParams::Of(TreeKernelKind::kSst));
    double k_pt = TreeKernel(a.trees[0], b.trees[0],
                             TreeKernelParams::Of(TreeKernelKind::kPtk));
    double k_p = NormalizedPoly(*a.features, *b.features);
    double expected = 0.23 * k_sst + 0.77 * (k_p + k_pt) * (k_p + k_pt);
    CHECK(k_sst > 0);
    CHECK(k_pt > 0);
    CHECK(CompositeKernel(Prepare(a), Prepare(b),
                          Variant(CompositeVariant::kCk1, 0.23)) ==
          doctest::Approx(expected).epsilon(1e-12));
  }
  SUBCASE("CK2 never evaluates the constituency kernel") {
    ResetKernelCallCounts();
    CompositeKernel(Prepare(a), Prepare(b),
                    Variant(CompositeVariant::kCk2, 0.23));
    KernelCallCounts c = GetKernelCallCounts();
    CHECK(c.sst == 0);
    CHECK(c.ptk > 0);
    ResetKernelCallCounts();
    CompositeKernel(Prepare(a), Prepare(b),
                    Variant(CompositeVariant::kCk3, 0.23));
    CHECK(GetKernelCallCounts().sst > 0);
  }
  SUBCASE("missing parts are configuration errors") {
    KernelInput bare = a;
    bare.pet.reset();
    CHECK_THROWS_AS(CompositeKernel(Prepare(bare), Prepare(b),
                                    Variant(CompositeVariant::kCk1, 0.23)),
                    ConfigError);
    CHECK_NOTHROW(CompositeKernel(Prepare(bare), Prepare(b),
                                  Variant(CompositeVariant::kCk2, 0.23)));
  }
}

TEST_CASE("composite parameter validation") {
  CompositeParams p = Variant(CompositeVariant::kCk1, 1.5);
  CHECK_THROWS_AS(p.Validate(), ConfigError);
  p = Variant(CompositeVariant::kCk1, 0.23);
  p.feature_mode = FeatureMode::kVud;
  CHECK_THROWS_AS(p.Validate(), ConfigError);
  CHECK(BoundFeatureMode(CompositeVariant::kCk) == FeatureMode::kEntity);
  CHECK(BoundFeatureMode(CompositeVariant::kCk2) == FeatureMode::kVud);
  CHECK(ParseCompositeVariant("CK3") == CompositeVariant::kCk3);
  CHECK_THROWS_AS(ParseCompositeVariant("CK4"), ConfigError);
}

TEST_CASE("kernel spec JSON") {
  KernelSpec ck2 = KernelSpecFromJson(
      R"({"type": "composite", "composite": {"variant": "CK2"}})");
  CHECK(ck2.type == KernelType::kComposite);
  CHECK(ck2.composite.variant == CompositeVariant::kCk2);
  CHECK(ck2.composite.alpha == 0.23);

  KernelSpec sm = KernelSpecFromJson(
      R"({"type": "sm_tk", "m": 50, "tree": {"kind": "PTK", "lambda": 0.3}})");
  CHECK(sm.type == KernelType::kSmTk);
  CHECK(sm.m == 50);
  CHECK(sm.tree.lambda == 0.3);

  for (const KernelSpec &spec : {ck2, sm, KernelSpec{}}) {
    KernelSpec again = KernelSpecFromJson(CanonicalJson(spec));
    CHECK(again == spec);
    CHECK(Fingerprint(again) == Fingerprint(spec));
  }
  KernelSpec changed = sm;
  changed.tree.mu = 0.5;
  CHECK(Fingerprint(changed) != Fingerprint(sm));

  CHECK_THROWS_AS(KernelSpecFromJson(R"({"type": "tree", "lamda": 0.4})"),
                  ConfigError);
  CHECK_THROWS_AS(KernelSpecFromJson(R"({"type": "forest"})"), ConfigError);
  CHECK_THROWS_AS(KernelSpecFromJson("{"), ConfigError);
}

TEST_CASE("property: combined kernels are symmetric") {
  Rng rng(47);
  KernelSpec sm;
  sm.type = KernelType::kSmTk;
  KernelWorker pair_worker(sm);
  for (int trial = 0; trial < 100; ++trial) {
    KernelInput x = testing::RandomPairInput(rng, 8);
    KernelInput y = testing::RandomPairInput(rng, 8);
    PreparedInstance px = Prepare(x), py = Prepare(y);
    pair_worker.ComputeSelf(&px);
    pair_worker.ComputeSelf(&py);
    double k = pair_worker.Evaluate(px, py);
    CHECK(k == pair_worker.Evaluate(py, px));
    std::swap(x.trees[0], x.trees[1]);
    std::swap(y.trees[0], y.trees[1]);
    PreparedInstance sx = Prepare(x), sy = Prepare(y);
    pair_worker.ComputeSelf(&sx);
    pair_worker.ComputeSelf(&sy);
    CHECK(pair_worker.Evaluate(sx, sy) == doctest::Approx(k).epsilon(1e-14));
  }
  for (CompositeVariant v :
       {CompositeVariant::kCk, CompositeVariant::kCk1, CompositeVariant::kCk2,
        CompositeVariant::kCk3}) {
    for (int trial = 0; trial < 50; ++trial) {
      KernelInput x = testing::RandomRelationInput(rng, 8, 6);
      KernelInput y = testing::RandomRelationInput(rng, 8, 6);
      CompositeParams p = Variant(v, 0.23);
      CHECK(CompositeKernel(Prepare(x), Prepare(y), p) ==
            CompositeKernel(Prepare(y), Prepare(x), p));
    }
  }
}

TEST_CASE("property: combined Gram matrices are positive semidefinite") {
  Rng rng(53);
  std::vector<KernelSpec> specs;
  KernelSpec sm;
  sm.type = KernelType::kSmTk;
  specs.push_back(sm);
  for (CompositeVariant v :
       {CompositeVariant::kCk, CompositeVariant::kCk1, CompositeVariant::kCk2,
        CompositeVariant::kCk3}) {
    KernelSpec ck;
    ck.type = KernelType::kComposite;
    ck.composite = Variant(v, 0.23);
    specs.push_back(ck);
  }
  for (const KernelSpec &spec : specs) {
    std::vector<PreparedInstance> inst;
    for (int i = 0; i < 20; ++i) {
      inst.push_back(Prepare(spec.type == KernelType::kSmTk
                                 ? testing::RandomPairInput(rng, 8)
                                 : testing::RandomRelationInput(rng, 8, 6)));
    }
    ComputeSelfKernels(spec, &inst, 1);
    std::vector<double> ev = testing::Eigenvalues(ComputeGram(spec, inst));
    CAPTURE(CanonicalJson(spec));
    CHECK(ev.front() >= -1e-8 * ev.back());
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace udtk
