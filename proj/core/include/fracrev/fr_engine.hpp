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

// Exact decision procedure for fractional revival on abelian Cayley graphs.
//
// FR from x to x + a needs a to be an involution, an integral spectrum, and
// a time t with exp(i t lambda_g) constant on each half of the split
// G_0 = {g : chi_a(g) = 1}, G_1 = {g : chi_a(g) = -1}. With integral
// eigenvalues those times are t = 2 pi k / M, where M is the gcd of the
// eigenvalue differences inside each half, so the search is finite.

#ifndef FRACREV_FR_ENGINE_HPP_
#define FRACREV_FR_ENGINE_HPP_

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "fracrev/abelian_group.hpp"
#include "fracrev/cayley.hpp"

namespace fracrev {

struct InvolutionSplit {
  GroupElement a;
  std::vector<GroupElement> g0;  // chi_a = +1, lexicographic
  std::vector<GroupElement> g1;  // chi_a = -1, lexicographic
};

/// Throws Error(kNotAnInvolution) unless a has order exactly two.
InvolutionSplit SplitByInvolution(const FiniteAbelianGroup& group, const GroupElement& a);

struct Moduli {
  Int m0 = 0;
  Int m1 = 0;
  Int m = 0;
  GroupElement g1;  // reference element of G_1
  Int delta = 0;    // d - lambda_{g1}
};

/// gcd of an empty or all-zero set is 0. Uses the lexicographically
/// smallest element of G_1 as reference. Throws Error(kNonIntegralSpectrum).
/// Throws std::logic_error if M > 0 and M does not divide n.
Moduli ComputeModuli(const Spectrum& spectrum, const InvolutionSplit& split);
Moduli ComputeModuli(const Spectrum& spectrum, const InvolutionSplit& split,
                     const GroupElement& reference);

enum class RevivalKind { kFractionalRevival, kPerfectStateTransfer, kPeriodic };
const char* ToString(RevivalKind kind);

/// Certificate for H(t) = alpha I + beta Q at t = 2 pi k / N, where
/// alpha +- beta are the exact phases omega_N^rho0 (on G_0) and
/// omega_N^rho1 (on G_1).
struct FRWitness {
  GroupElement a;
  Int k = 1;
  Int modulus = 1;  // N
  Int rho0 = 0;
  Int rho1 = 0;
  RevivalKind kind = RevivalKind::kPeriodic;
  // Every k in [1, N) giving kind FR at t = 2 pi k / N.
  std::vector<Int> valid_k;

  double Time() const;
  std::complex<double> Alpha() const;
  std::complex<double> Beta() const;

  /// kind implied by (rho0 - rho1) mod N.
  static RevivalKind Classify(Int rho0, Int rho1, Int modulus);
};

/// Smallest-k certificate for the pair (x, x + a), or empty when the
/// graph cannot revive there at all (odd order, a not an involution,
/// non-integral spectrum, or a constant spectrum). Only kind FR is
/// fractional revival with alpha beta != 0.
std::optional<FRWitness> DecideFR(const CayleyGraph& graph, const GroupElement& a);
std::optional<FRWitness> DecideFR(const CayleyGraph& graph, const Spectrum& spectrum,
                                  const GroupElement& a);

/// DecideFR for every involution, in lexicographic order of a. Each witness
/// holds for every pair (x, x + a) by translation invariance.
std::vector<std::pair<GroupElement, FRWitness>> SearchAll(const CayleyGraph& graph);

}  // namespace fracrev

#endif  // FRACREV_FR_ENGINE_HPP_
