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

#include "fracrev/fr_engine.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "fracrev/error.hpp"

namespace fracrev {

namespace {

Int Mod(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

std::complex<double> RootOfUnity(Int rho, Int modulus) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(rho) / static_cast<double>(modulus);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

InvolutionSplit SplitByInvolution(const FiniteAbelianGroup& group, const GroupElement& a) {
  group.Check(a);
  if (ElementOrder(group, a) != 2) {
    throw Error(ErrorCode::kNotAnInvolution, ToString(a) + " does not have order two");
  }
  InvolutionSplit split{a, {}, {}};
  for (const GroupElement& g : group.Elements()) {
    (CharacterExponent(group, a, g) == 0 ? split.g0 : split.g1).push_back(g);
  }
  return split;
}

Moduli ComputeModuli(const Spectrum& spectrum, const InvolutionSplit& split) {
  return ComputeModuli(spectrum, split, split.g1.front());
}

Moduli ComputeModuli(const Spectrum& spectrum, const InvolutionSplit& split,
                     const GroupElement& reference) {
  if (!spectrum.integral()) {
    throw Error(ErrorCode::kNonIntegralSpectrum, "moduli need an integral spectrum");
  }
  const FiniteAbelianGroup& group = spectrum.group();
  const Int d = spectrum.IntegerAt(group.Zero());
  const Int ref = spectrum.IntegerAt(reference);

  Moduli out;
  out.g1 = reference;
  out.delta = checked::Sub(d, ref);
  for (const GroupElement& g : split.g0) out.m0 = std::gcd(out.m0, checked::Sub(d, spectrum.IntegerAt(g)));
  for (const GroupElement& g : split.g1) out.m1 = std::gcd(out.m1, checked::Sub(ref, spectrum.IntegerAt(g)));
  out.m = std::gcd(out.m0, out.m1);
  if (out.m > 0 && group.order() % out.m != 0) {
    throw std::logic_error("modulus " + std::to_string(out.m) + " does not divide the group order");
  }
  return out;
}

const char* ToString(RevivalKind kind) {
  switch (kind) {
    case RevivalKind::kFractionalRevival: return "FR";
    case RevivalKind::kPerfectStateTransfer: return "PST";
    case RevivalKind::kPeriodic: return "PERIODIC";
  }
  return "PERIODIC";
}

double FRWitness::Time() const {
  return 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(modulus);
}

std::complex<double> FRWitness::Alpha() const {
  return (RootOfUnity(rho0, modulus) + RootOfUnity(rho1, modulus)) / 2.0;
}

std::complex<double> FRWitness::Beta() const {
  return (RootOfUnity(rho0, modulus) - RootOfUnity(rho1, modulus)) / 2.0;
}

RevivalKind FRWitness::Classify(Int rho0, Int rho1, Int modulus) {
  const Int gap = Mod(rho0 - rho1, modulus);
  if (gap == 0) return RevivalKind::kPeriodic;
  if (2 * gap == modulus) return RevivalKind::kPerfectStateTransfer;
  return RevivalKind::kFractionalRevival;
}

std::optional<FRWitness> DecideFR(const CayleyGraph& graph, const GroupElement& a) {
  const FiniteAbelianGroup& group = graph.group();
  if (group.order() % 2 != 0 || !group.Contains(a) || ElementOrder(group, a) != 2) return std::nullopt;
  return DecideFR(graph, ComputeSpectrum(graph), a);
}

std::optional<FRWitness> DecideFR(const CayleyGraph& graph, const Spectrum& spectrum,
                                  const GroupElement& a) {
  const FiniteAbelianGroup& group = graph.group();
  if (group.order() % 2 != 0 || !group.Contains(a) || ElementOrder(group, a) != 2) return std::nullopt;
  if (!spectrum.integral()) return std::nullopt;

  const InvolutionSplit split = SplitByInvolution(group, a);
  const Moduli moduli = ComputeModuli(spectrum, split);

  Int modulus = moduli.m;
  if (modulus == 0) {
    // Both halves are constant: every t works for the split, and t = pi/(2|delta|)
    // puts the two phases a quarter turn apart.
    if (moduli.delta == 0) return std::nullopt;
    modulus = checked::Mul(4, moduli.delta < 0 ? -moduli.delta : moduli.delta);
  }

  const Int d = graph.degree();
  const Int lambda1 = spectrum.IntegerAt(moduli.g1);
  auto certificate = [&](Int k) {
    FRWitness w;
    w.a = a;
    w.k = k;
    w.modulus = modulus;
    w.rho0 = Mod(checked::Mul(k, d), modulus);
    w.rho1 = Mod(checked::Mul(k, lambda1), modulus);
    w.kind = FRWitness::Classify(w.rho0, w.rho1, modulus);
    return w;
  };

  std::vector<Int> valid;
  Int first_pst = 0;
  for (Int k = 1; k < modulus; ++k) {
    const RevivalKind kind = FRWitness::Classify(Mod(k * d, modulus), Mod(k * lambda1, modulus), modulus);
    if (kind == RevivalKind::kFractionalRevival) valid.push_back(k);
    if (kind == RevivalKind::kPerfectStateTransfer && first_pst == 0) first_pst = k;
  }

  FRWitness w;
  if (!valid.empty()) {
    w = certificate(valid.front());
  } else if (first_pst != 0) {
    w = certificate(first_pst);
  } else {
    Int k = 1;
    while (k < modulus && Mod(checked::Mul(k, moduli.delta), modulus) != 0) ++k;
    w = certificate(k);
  }
  w.valid_k = std::move(valid);
  return w;
}

std::vector<std::pair<GroupElement, FRWitness>> SearchAll(const CayleyGraph& graph) {
  std::vector<std::pair<GroupElement, FRWitness>> out;
  const auto involutions = Involutions(graph.group());
  if (involutions.empty()) return out;
  const Spectrum spectrum = ComputeSpectrum(graph);
  for (const GroupElement& a : involutions) {
    if (auto w = DecideFR(graph, spectrum, a)) out.emplace_back(a, std::move(*w));
  }
  return out;
}

}  // namespace fracrev
