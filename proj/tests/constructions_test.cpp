// Copyright 2026 The fracrev Authors.
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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "fracrev/constructions.hpp"
#include "fracrev/error.hpp"
#include "fracrev/oracle.hpp"
#include "test_util.hpp"

namespace fracrev {
namespace {

std::set<GroupElement> SetOf(const CayleyGraph& graph) {
  const auto& e = graph.connection_set().elements();
  return {e.begin(), e.end()};
}

std::vector<GroupElement> Z9Units() { return {{1}, {2}, {4}, {5}, {7}, {8}}; }

// Confirms a construction with the engine (exact) and the oracle (numeric).
void ExpectConfirmed(const Construction& c) {
  const auto decided = DecideFR(c.graph, c.predicted.a);
  ASSERT_TRUE(decided.has_value());
  EXPECT_TRUE(PredictionConfirmed(c.predicted, *decided))
      << "predicted " << c.predicted.k << "/" << c.predicted.modulus << ", engine N=" << decided->modulus;
  const auto report = VerifyFR(c.graph, c.predicted);
  EXPECT_TRUE(report.pass) << report.max_deviation;
}

template <typename F>
void ExpectHypothesisError(F&& build) {
  try {
    build();
    FAIL() << "expected a hypothesis violation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kHypothesis) << e.what();
  }
}

TEST(NumberTheory, IsPrime) {
  EXPECT_FALSE(IsPrime(1));
  EXPECT_TRUE(IsPrime(2));
  EXPECT_TRUE(IsPrime(97));
  EXPECT_FALSE(IsPrime(91));
}

TEST(NumberTheory, PAdicValuation) {
  EXPECT_EQ(PAdicValuation(12, 2), 2);
  EXPECT_EQ(PAdicValuation(-24, 2), 3);
  EXPECT_EQ(PAdicValuation(81, 3), 4);
  EXPECT_EQ(PAdicValuation(7, 3), 0);
  try {
    PAdicValuation(0, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroInput);
  }
}

TEST(RamanujanSum, Examples) {
  EXPECT_EQ(RamanujanSum(0, 3, 2), 6);
  EXPECT_EQ(RamanujanSum(3, 3, 2), -3);
  EXPECT_EQ(RamanujanSum(1, 3, 2), 0);
  EXPECT_EQ(RamanujanSum(1, 2, 1), -1);
  EXPECT_EQ(RamanujanSum(2, 2, 2), -2);
}

TEST(RamanujanSum, MatchesPrimitiveRootSum) {
  for (auto [p, r] : std::vector<std::pair<Int, int>>{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}}) {
    Int q = 1;
    for (int i = 0; i < r; ++i) q *= p;
    for (Int y = 0; y < q; ++y) {
      RootOfUnitySum s(q);
      for (Int l : UnitsMod(q)) s.AddPower(l * y);
      EXPECT_EQ(AsInteger(s), RamanujanSum(y, p, r)) << "y=" << y << " q=" << q;
    }
  }
}

TEST(RamanujanFamily, ReproducesUnitsGraph) {
  const auto c = BuildRamanujanFamily(3, 2, {});
  EXPECT_EQ(SetOf(c.graph), SetOf(testing::UnitsGraph()));
  EXPECT_EQ(c.predicted.modulus, 3);
  EXPECT_NEAR(c.predicted.Time(), 2.0 * std::numbers::pi / 3.0, 1e-15);
  ExpectConfirmed(c);
}

TEST(RamanujanFamily, Rejections) {
  ExpectHypothesisError([] { BuildRamanujanFamily(3, 1, {}); });
  ExpectHypothesisError([] { BuildRamanujanFamily(2, 3, {}); });
  ExpectHypothesisError([] { BuildRamanujanFamily(9, 1, std::vector<Int>{5}); });
  ExpectHypothesisError([] { BuildRamanujanFamily(5, 1, std::vector<Int>{2, 2}); });
}

TEST(RamanujanFamily, WithComplement) {
  const std::vector<Int> h{5};
  const auto c = BuildRamanujanFamily(3, 1, h);
  EXPECT_EQ(c.graph.group().orders().size(), 3u);
  EXPECT_EQ(c.graph.order(), 30);
  EXPECT_EQ(c.predicted.modulus, 5);
  ExpectConfirmed(c);
}

TEST(RamanujanFamily, SpectrumClosedForm) {
  for (auto [p, r, h] : std::vector<std::tuple<Int, int, std::vector<Int>>>{{3, 2, {}}, {5, 1, {3}}, {3, 1, {5}}, {7, 1, {3}}, {3, 1, {2, 3}}}) {
    const auto c = BuildRamanujanFamily(p, r, h);
    Int m = 1;
    for (Int o : h) m *= o;
    const Spectrum s = ComputeSpectrum(c.graph);
    for (const auto& g : c.graph.group().Elements()) {
      bool tail_zero = true;
      for (std::size_t i = 2; i < g.size(); ++i) tail_zero = tail_zero && g[i] == 0;
      const Int expected = (g[0] == 0 ? 1 : -1) + (tail_zero ? RamanujanSum(g[1], p, r) * m : 0);
      EXPECT_EQ(s.IntegerAt(g), expected);
    }
  }
}

TEST(MultiPrimeFamily, Examples) {
  const std::vector<std::pair<Int, int>> pp{{2, 2}, {3, 2}};
  const auto c = BuildMultiPrimeFamily(pp);
  EXPECT_EQ(c.graph.order(), 36);
  EXPECT_EQ(c.predicted.a, (GroupElement{2, 0}));
  EXPECT_EQ(c.predicted.modulus, 6);
  ExpectConfirmed(c);

  ExpectHypothesisError([] { BuildMultiPrimeFamily(std::vector<std::pair<Int, int>>{{2, 1}, {3, 1}}); });
  ExpectHypothesisError([] { BuildMultiPrimeFamily(std::vector<std::pair<Int, int>>{{2, 3}, {3, 1}}); });
  ExpectHypothesisError([] { BuildMultiPrimeFamily(std::vector<std::pair<Int, int>>{{3, 2}, {2, 1}}); });
  ExpectHypothesisError([] { BuildMultiPrimeFamily(std::vector<std::pair<Int, int>>{{2, 1}, {3, 1}, {3, 2}}); });
}

TEST(MultiPrimeFamily, Sweep) {
  for (const auto& pp : std::vector<std::vector<std::pair<Int, int>>>{
           {{2, 1}, {3, 2}}, {{2, 1}, {5, 2}}, {{2, 2}, {3, 2}}, {{2, 1}, {3, 2}, {5, 1}}}) {
    SCOPED_TRACE(pp.size());
    ExpectConfirmed(BuildMultiPrimeFamily(pp));
  }
}

TEST(PlateauedFamily, NineUnitsExample) {
  const std::vector<Int> h{9};
  const auto c = BuildPlateauedFamily(h, Z9Units());
  EXPECT_EQ(SetOf(c.graph), SetOf(testing::PlateauedGraph()));
  EXPECT_EQ(c.graph.degree(), 13);
  EXPECT_EQ(c.predicted.modulus, 6);
  EXPECT_NEAR(c.predicted.Time(), std::numbers::pi / 3.0, 1e-15);
  ExpectConfirmed(c);
  EXPECT_NO_THROW(BuildPlateauedFamily(h, Z9Units(), 3));
}

TEST(PlateauedFamily, Rejections) {
  const std::vector<Int> h33{3, 3};
  const std::vector<GroupElement> axes{{1, 0}, {2, 0}, {0, 1}, {0, 2}};
  ExpectHypothesisError([&] { BuildPlateauedFamily(h33, axes); });
  ExpectHypothesisError([&] { BuildPlateauedFamily(h33, axes, 3); });
  const std::vector<Int> h9{9};
  ExpectHypothesisError([&] { BuildPlateauedFamily(h9, std::vector<GroupElement>{{3}, {6}}); });
  ExpectHypothesisError([&] { BuildPlateauedFamily(h9, std::vector<GroupElement>{{1}, {8}}); });
  ExpectHypothesisError([&] { BuildPlateauedFamily(h9, Z9Units(), 4); });
}

// The multiset of Fourier values of {3, 6} in Z_9 is {2, -1, ...}: not
// plateaued for p = 2, the only prime dividing |S1|.
TEST(PlateauedFamily, ThreeSixSubsetIsNotPlateauedAtTwo) {
  const auto z9 = FiniteAbelianGroup::Make({9});
  const auto f = GroupFunction::Indicator(z9, std::vector<GroupElement>{{3}, {6}});
  std::vector<Int> fourier;
  for (const auto& v : GroupFourier(f)) fourier.push_back(*AsInteger(v));
  EXPECT_EQ(fourier, (std::vector<Int>{2, -1, -1, 2, -1, -1, 2, -1, -1}));
  EXPECT_FALSE(PlateauedLevel(f, 2).has_value());
}

// With p = 2 and r0 = 1 the two phases at t = pi/2 are opposite, so the
// hypotheses hold but the pair is a PST pair rather than an FR pair.
TEST(PlateauedFamily, PrimeTwoLevelOneGivesPST) {
  const std::vector<Int> h{4};
  const auto c = BuildPlateauedFamily(h, std::vector<GroupElement>{{1}, {3}});
  EXPECT_EQ(c.predicted.modulus, 4);
  EXPECT_EQ(FRWitness::Classify(c.predicted.rho0, c.predicted.rho1, c.predicted.modulus),
            RevivalKind::kPerfectStateTransfer);
  const auto decided = DecideFR(c.graph, c.predicted.a);
  ASSERT_TRUE(decided.has_value());
  EXPECT_EQ(decided->kind, RevivalKind::kPerfectStateTransfer);
  EXPECT_FALSE(PredictionConfirmed(c.predicted, *decided));
}

TEST(BentFamily, ReproducesInnerProductGraph) {
  const auto c = BuildBentFamily(testing::X1X2PlusX3X4());
  EXPECT_EQ(SetOf(c.graph), testing::InnerProductSet());
  EXPECT_EQ(c.predicted.modulus, 8);
  EXPECT_NEAR(c.predicted.Time(), std::numbers::pi / 4.0, 1e-15);
  ExpectConfirmed(c);
  const auto m = ComputeModuli(ComputeSpectrum(c.graph), SplitByInvolution(c.graph.group(), c.predicted.a));
  EXPECT_EQ(m.m, 8);
  EXPECT_EQ(m.delta, 14);
}

TEST(BentFamily, EigenvalueShape) {
  for (int n : {4, 6, 8}) {
    const auto f = MaioranaMcFarlandBent(n);
    const auto c = BuildBentFamily(f);
    const auto walsh = WalshTransform(f);
    const Spectrum s = ComputeSpectrum(c.graph);
    const Int d = c.graph.degree();
    for (const auto& g : c.graph.group().Elements()) {
      const std::vector<Int> tail(g.coords.begin() + 1, g.coords.end());
      const std::size_t x = BitsToIndex(tail);
      Int expected;
      if (g[0] == 1) {
        expected = -1;
      } else {
        expected = x == 0 ? d : 1 - walsh[x];
      }
      EXPECT_EQ(s.IntegerAt(g), expected);
    }
  }
}

TEST(BentFamily, SixVariableInnerProduct) {
  const auto c = BuildBentFamily(MaioranaMcFarlandBent(6));
  EXPECT_EQ(c.predicted.modulus, 16);
  EXPECT_NEAR(c.predicted.Time(), std::numbers::pi / 8.0, 1e-15);
  ExpectConfirmed(c);
}

TEST(BentFamily, RandomBentsConfirm) {
  std::mt19937 rng(6);
  int built = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const int n = trial % 2 ? 6 : 4;
    auto f = testing::RandomBent(n, rng);
    if (f(0)) f = f.Complement();
    ExpectConfirmed(BuildBentFamily(f));
    ++built;
  }
  EXPECT_EQ(built, 12);
}

TEST(BentFamily, Rejections) {
  ExpectHypothesisError([] { BuildBentFamily(BooleanFunction(4)); });
  ExpectHypothesisError([] { BuildBentFamily(MaioranaMcFarlandBent(2)); });
  ExpectHypothesisError([] { BuildBentFamily(MaioranaMcFarlandBent(4).Complement()); });
}

// Semi-bent functions pass the builder's hypotheses, but the predicted
// time pi / 2^{k+1} lies off the lattice (2 pi / M) Z that every revival
// time must lie on, so the engine refutes the prediction.
TEST(BentFamily, SemiBentPredictionIsRefuted) {
  std::vector<std::uint8_t> t(16);
  for (std::size_t i = 0; i < 16; ++i) t[i] = static_cast<std::uint8_t>((((i >> 3) & (i >> 2)) ^ (i >> 1)) & 1);
  const BooleanFunction f(4, t);
  ASSERT_EQ(Classify(f), BooleanClass::kSemiBent);
  const auto c = BuildBentFamily(f);
  EXPECT_EQ(c.predicted.modulus, 16);
  const auto decided = DecideFR(c.graph, c.predicted.a);
  ASSERT_TRUE(decided.has_value());
  EXPECT_FALSE(PredictionConfirmed(c.predicted, *decided));
  EXPECT_FALSE(VerifyFR(c.graph, c.predicted).pass);
}

TEST(CublikeFamily, LiteralValuationGate) {
  std::vector<std::vector<Int>> supp;
  for (std::size_t x : Support(testing::X1X2PlusX3X4())) supp.push_back(IndexToBits(x, 4));
  ExpectHypothesisError([&] { BuildCublikeFamily(supp, supp); });
}

TEST(CublikeFamily, SixVariableBentSupport) {
  std::vector<std::vector<Int>> supp;
  for (std::size_t x : Support(MaioranaMcFarlandBent(6))) supp.push_back(IndexToBits(x, 6));
  ASSERT_EQ(supp.size(), 28u);
  // Build the same graph directly to read off M independently of the builder.
  const auto group = FiniteAbelianGroup::Make(std::vector<Int>(7, 2));
  std::vector<GroupElement> s{{1, 0, 0, 0, 0, 0, 0}};
  for (const auto& v : supp) {
    for (Int head : {0, 1}) {
      std::vector<Int> c{head};
      c.insert(c.end(), v.begin(), v.end());
      s.emplace_back(c);
    }
  }
  const auto graph = CayleyGraph::Make(group, s);
  const Int m = ComputeModuli(ComputeSpectrum(graph), SplitByInvolution(group, {1, 0, 0, 0, 0, 0, 0})).m;
  if (m >= 8) {
    const auto c = BuildCublikeFamily(supp, supp);
    EXPECT_EQ(SetOf(c.graph), SetOf(graph));
    ExpectConfirmed(c);
  } else {
    ExpectHypothesisError([&] { BuildCublikeFamily(supp, supp); });
  }
}

TEST(CublikeFamily, Rejections) {
  ExpectHypothesisError([] { BuildCublikeFamily({}, {}); });
  const std::vector<std::vector<Int>> zero{{0, 0}};
  ExpectHypothesisError([&] { BuildCublikeFamily(zero, {}); });
  const std::vector<std::vector<Int>> ragged{{1, 0}, {1}};
  ExpectHypothesisError([&] { BuildCublikeFamily(ragged, {}); });
}

TEST(Build, DispatchesOnVariant) {
  const FamilySpec spec{RamanujanParams{3, 2, {}}};
  EXPECT_EQ(spec.variant(), FamilyVariant::kRamanujanA);
  EXPECT_STREQ(ToString(spec.variant()), "RAMANUJAN_A");
  EXPECT_EQ(Build(spec).predicted.modulus, 3);
  const FamilySpec bent{BentParams{testing::X1X2PlusX3X4()}};
  EXPECT_EQ(bent.variant(), FamilyVariant::kBentE);
  EXPECT_EQ(SetOf(Build(bent).graph), testing::InnerProductSet());
}

TEST(PredictionConfirmed, MapsTimesAcrossModuli) {
  FRWitness predicted;
  predicted.a = {1, 0};
  predicted.k = 1;
  predicted.modulus = 3;
  FRWitness decided = predicted;
  decided.kind = RevivalKind::kFractionalRevival;
  decided.modulus = 6;
  decided.valid_k = {1, 2, 4, 5};
  EXPECT_TRUE(PredictionConfirmed(predicted, decided));
  decided.valid_k = {1, 5};
  EXPECT_FALSE(PredictionConfirmed(predicted, decided));
  decided.modulus = 4;
  decided.valid_k = {1, 2, 3};
  EXPECT_FALSE(PredictionConfirmed(predicted, decided));
}

}  // namespace
}  // namespace fracrev
