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

// Exact arithmetic in Z[omega_e]. Every Cayley graph eigenvalue lives here
// until it is shown to be a rational integer.

#ifndef FRACREV_CYCLOTOMIC_HPP_
#define FRACREV_CYCLOTOMIC_HPP_

#include <complex>
#include <optional>
#include <vector>

#include "fracrev/abelian_group.hpp"

namespace fracrev {

// Overflow-checked 64-bit arithmetic; throws Error(kOverflow).
namespace checked {
Int Add(Int a, Int b);
Int Sub(Int a, Int b);
Int Mul(Int a, Int b);
}  // namespace checked

Int EulerPhi(Int e);

/// Integer polynomial, little-endian coefficients. Canonical form has no
/// trailing zeros; the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);

  static IntPolynomial Monomial(std::size_t degree, Int coeff = 1);

  const std::vector<Int>& coeffs() const { return coeffs_; }
  bool IsZero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  long Degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Int Leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  Int operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  IntPolynomial operator+(const IntPolynomial& other) const;
  IntPolynomial operator-(const IntPolynomial& other) const;
  IntPolynomial operator*(const IntPolynomial& other) const;
  bool operator==(const IntPolynomial& other) const = default;

  // Quotient and remainder by a monic divisor.
  struct DivMod;
  DivMod DivideByMonic(const IntPolynomial& divisor) const;

 private:
  void Trim();
  std::vector<Int> coeffs_;
};

struct IntPolynomial::DivMod {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// The e-th cyclotomic polynomial, by exact division of x^e - 1 by the
/// cyclotomic polynomials of the proper divisors of e. Results are memoized.
const IntPolynomial& CyclotomicPolynomial(Int e);

/// Sum_k counts[k] * omega_e^k with omega_e = exp(2 pi i / e).
class RootOfUnitySum {
 public:
  explicit RootOfUnitySum(Int e);
  RootOfUnitySum(Int e, std::vector<Int> counts);

  static RootOfUnitySum Integer(Int e, Int value);

  Int modulus() const { return static_cast<Int>(counts_.size()); }
  const std::vector<Int>& counts() const { return counts_; }

  /// Adds coeff * omega_e^k (k taken mod e).
  void AddPower(Int k, Int coeff = 1);

  RootOfUnitySum& operator+=(const RootOfUnitySum& other);
  RootOfUnitySum& operator-=(const RootOfUnitySum& other);
  friend RootOfUnitySum operator+(RootOfUnitySum a, const RootOfUnitySum& b) { return a += b; }
  friend RootOfUnitySum operator-(RootOfUnitySum a, const RootOfUnitySum& b) { return a -= b; }

  // Raw equality of the multiplicity vectors. Use Equivalent() to compare
  // represented values.
  bool operator==(const RootOfUnitySum& other) const = default;

 private:
  std::vector<Int> counts_;
};

/// Canonical representative modulo Phi_e: degree below phi(e), all higher
/// entries zero. The represented complex number is unchanged.
RootOfUnitySum Reduce(const RootOfUnitySum& v);
RootOfUnitySum Reduce(const RootOfUnitySum& v, const IntPolynomial& phi);

/// The integer value if v is a rational integer.
std::optional<Int> AsInteger(const RootOfUnitySum& v);
std::optional<Int> AsInteger(const RootOfUnitySum& v, const IntPolynomial& phi);

bool Equivalent(const RootOfUnitySum& a, const RootOfUnitySum& b);

std::complex<double> Approx(const RootOfUnitySum& v);

}  // namespace fracrev

#endif  // FRACREV_CYCLOTOMIC_HPP_
