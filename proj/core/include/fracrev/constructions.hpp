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

// Generators for the known families of abelian Cayley graphs with
// fractional revival. Each builder checks its hypotheses, returns the graph
// and the predicted certificate; it never asserts FR itself. Confirm a
// prediction with DecideFR and VerifyFR.

#ifndef FRACREV_CONSTRUCTIONS_HPP_
#define FRACREV_CONSTRUCTIONS_HPP_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fracrev/abelian_group.hpp"
#include "fracrev/boolean.hpp"
#include "fracrev/cayley.hpp"
#include "fracrev/fr_engine.hpp"

namespace fracrev {

bool IsPrime(Int p);

/// Largest v with p^v | x. Throws Error(kZeroInput) for x = 0.
int PAdicValuation(Int x, Int p);

/// c(y, p^r) = sum over units l of Z_{p^r} of omega_{p^r}^{l y}, 0 <= y < p^r.
Int RamanujanSum(Int y, Int p, int r);

struct Construction {
  CayleyGraph graph;
  FRWitness predicted;
};

/// Z_2 x Z_{p^r} x H with S = {(0, l, h) : l a unit, h in H} + {(1, 0, 0)}.
/// Predicts t = 2 pi / (p^{r-1} m), m = |H|. Rejects p^{r-1} m in {1, 2, 4}.
Construction BuildRamanujanFamily(Int p, int r, std::span<const Int> h_orders);

/// prod Z_{p_i^{r_i}} with p_0 = 2, S = {all-unit tuples} + {(2^{r_0-1}, 0, ..)}.
/// Predicts t = 2 pi / N with N = prod p_i^{r_i - 1} not in {1, 2, 4}.
Construction BuildMultiPrimeFamily(std::span<const std::pair<Int, int>> prime_powers);

/// Z_2 x H with S = (1, S1) + (0, S1) + {(1, 0)} where the indicator of S1
/// is p^r-plateaued and p | |S1|. Predicts t = pi / p^{r0},
/// r0 = min(r, v_p(|S1|)). When `p` is absent the smallest prime that
/// satisfies the hypotheses is used.
Construction BuildPlateauedFamily(std::span<const Int> h_orders, std::span<const GroupElement> s1,
                                  std::optional<Int> p = std::nullopt);

/// F_2^n with S = (0, S0) + (1, S1) + {(1, 0)}, S0 and S1 given as bit
/// vectors of length n - 1. Requires min(v_2(d0 + d1), v_2(d0 - d1)) >= 3
/// (v_2(0) = infinity) and, after computing the moduli, M >= 8. Predicts
/// t = 2 pi / 2^kappa, kappa = min(log2 M, v_2(d0 + d1), v_2(d0 - d1)).
Construction BuildCublikeFamily(std::span<const std::vector<Int>> s0, std::span<const std::vector<Int>> s1);

/// F_2^{n+1} with S = {(1, 0)} + (0, supp f) + (1, supp f) for a bent or
/// semi-bent f on F_2^n, n = 2k >= 4. Predicts t = pi / 2^k (bent) or
/// pi / 2^{k+1} (semi-bent).
Construction BuildBentFamily(const BooleanFunction& f);

enum class FamilyVariant { kRamanujanA, kMultiPrimeB, kPlateauedC, kCublikeD, kBentE };
const char* ToString(FamilyVariant v);

struct RamanujanParams {
  Int p;
  int r;
  std::vector<Int> h_orders;
};
struct MultiPrimeParams {
  std::vector<std::pair<Int, int>> prime_powers;
};
struct PlateauedParams {
  std::vector<Int> h_orders;
  std::vector<GroupElement> s1;
  std::optional<Int> p;
};
struct CublikeParams {
  std::vector<std::vector<Int>> s0;
  std::vector<std::vector<Int>> s1;
};
struct BentParams {
  BooleanFunction f;
};

struct FamilySpec {
  std::variant<RamanujanParams, MultiPrimeParams, PlateauedParams, CublikeParams, BentParams> params;

  FamilyVariant variant() const { return static_cast<FamilyVariant>(params.index()); }
};

Construction Build(const FamilySpec& spec);

/// Whether the predicted time lies among the engine's FR times: some valid
/// k' with k'/N' = k/N (mod 1).
bool PredictionConfirmed(const FRWitness& predicted, const FRWitness& decided);

}  // namespace fracrev

#endif  // FRACREV_CONSTRUCTIONS_HPP_
