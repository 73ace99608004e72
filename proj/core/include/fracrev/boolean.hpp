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

// Boolean functions on F_2^n and integer-valued functions on finite abelian
// groups: Walsh-Hadamard and Fourier spectra, bent/semi-bent and plateaued
// classification.
//
// Bit conventions: a vector x = (x_1, ..., x_n) is stored at table index
// sum_i x_i 2^(n-i), i.e. x_1 is the most significant bit. This matches the
// rank order of the group [2, 2, ..., 2].

#ifndef FRACREV_BOOLEAN_HPP_
#define FRACREV_BOOLEAN_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fracrev/abelian_group.hpp"
#include "fracrev/cyclotomic.hpp"

namespace fracrev {

/// In-place unnormalized Walsh-Hadamard butterfly; size must be a power of 2.
void WalshHadamardInPlace(std::span<Int> values);

class BooleanFunction {
 public:
  /// The zero function of arity n.
  explicit BooleanFunction(int n);
  BooleanFunction(int n, std::vector<std::uint8_t> table);

  /// Hex truth table, little-endian: character j carries f(4j) .. f(4j+3)
  /// in its bits 0..3. When `n` is absent it is inferred from the length
  /// (which then must be a power of two characters, giving n >= 2).
  static BooleanFunction FromHex(std::string_view hex, std::optional<int> n = std::nullopt);
  static BooleanFunction FromSupport(int n, std::span<const std::size_t> support);

  std::string ToHex() const;

  int arity() const { return n_; }
  std::size_t size() const { return table_.size(); }
  bool operator()(std::size_t x) const { return table_[x] != 0; }
  const std::vector<std::uint8_t>& table() const { return table_; }

  BooleanFunction Complement() const;

  bool operator==(const BooleanFunction&) const = default;

 private:
  int n_;
  std::vector<std::uint8_t> table_;
};

/// Bit vector of an index, x_1 first.
std::vector<Int> IndexToBits(std::size_t index, int n);
std::size_t BitsToIndex(std::span<const Int> bits);
std::string BitString(std::size_t index, int n);

/// w(a) = sum_x (-1)^(f(x) + a.x). Parseval: sum w(a)^2 = 4^n.
std::vector<Int> WalshTransform(const BooleanFunction& f);

/// Indices x with f(x) = 1, increasing (= lexicographic on bit vectors).
std::vector<std::size_t> Support(const BooleanFunction& f);

enum class BooleanClass { kBent, kSemiBent, kNeither };
const char* ToString(BooleanClass c);

BooleanClass Classify(const BooleanFunction& f);

/// |supp f| for a bent f, checked against 2^(n-1) +- 2^(n/2-1). Throws
/// std::logic_error if f is not bent or the count is off.
Int SupportSizeCheck(const BooleanFunction& f);

/// Spectrum of Cay(F_2^n, supp f) in rank order: lambda_0 = |supp f| and
/// lambda_x = -w(x)/2 otherwise.
std::vector<Int> EigenvaluesFromWalsh(const BooleanFunction& f);

/// Inner-product bent function x_1 x_2 + x_3 x_4 + ... + x_{n-1} x_n.
BooleanFunction MaioranaMcFarlandBent(int n);

/// Integer-valued function on a finite abelian group, indexed by rank.
struct GroupFunction {
  FiniteAbelianGroup group;
  std::vector<Int> values;

  GroupFunction(FiniteAbelianGroup g, std::vector<Int> v);
  static GroupFunction Indicator(const FiniteAbelianGroup& g, std::span<const GroupElement> set);

  Int at(const GroupElement& x) const { return values[group.Rank(x)]; }
};

/// fhat(chi_z) = sum_x f(x) conj(chi_z(x)), exact, indexed by z's rank.
std::vector<RootOfUnitySum> GroupFourier(const GroupFunction& f);

/// Integer-valued and f(l x) = f(x) for every unit l of Z_e.
bool IsClassFunction(const GroupFunction& f);

struct PlateauLevel {
  Int residue;  // k in [0, p^r)
  int r;        // maximal exponent, >= 1

  bool operator==(const PlateauLevel&) const = default;
};

/// Largest r >= 1 such that every Fourier value is congruent to one fixed
/// residue mod p^r. Empty when no r >= 1 works or when the Fourier spectrum
/// is constant (r would be unbounded). Throws Error(kNotClassFunction).
std::optional<PlateauLevel> PlateauedLevel(const GroupFunction& f, Int p);

}  // namespace fracrev

#endif  // FRACREV_BOOLEAN_HPP_
