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

#include "fracrev/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "fracrev/error.hpp"

namespace fracrev {

namespace checked {

Int Add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::kOverflow, "integer overflow in addition");
  return r;
}

Int Sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::kOverflow, "integer overflow in subtraction");
  return r;
}

Int Mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::kOverflow, "integer overflow in multiplication");
  return r;
}

}  // namespace checked

Int EulerPhi(Int e) {
  Int result = e;
  Int m = e;
  for (Int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { Trim(); }

IntPolynomial IntPolynomial::Monomial(std::size_t degree, Int coeff) {
  std::vector<Int> c(degree + 1, 0);
  c[degree] = coeff;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
  std::vector<Int> c(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked::Add((*this)[i], other[i]);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
  std::vector<Int> c(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked::Sub((*this)[i], other[i]);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  if (IsZero() || other.IsZero()) return {};
  std::vector<Int> c(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      c[i + j] = checked::Add(c[i + j], checked::Mul(coeffs_[i], other.coeffs_[j]));
    }
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial::DivMod IntPolynomial::DivideByMonic(const IntPolynomial& divisor) const {
  if (divisor.IsZero() || divisor.Leading() != 1) {
    throw std::invalid_argument("DivideByMonic: divisor must be monic");
  }
  const std::size_t dd = divisor.coeffs_.size() - 1;
  std::vector<Int> rem = coeffs_;
  if (rem.size() <= dd) return {IntPolynomial{}, IntPolynomial(std::move(rem))};
  std::vector<Int> quot(rem.size() - dd, 0);
  for (std::size_t i = rem.size(); i-- > dd;) {
    const Int c = rem[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) {
      rem[i - dd + j] = checked::Sub(rem[i - dd + j], checked::Mul(c, divisor.coeffs_[j]));
    }
  }
  rem.resize(dd);
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

// Cyclotomic polynomials

namespace {

std::mutex& CacheMutex() {
  static std::mutex m;
  return m;
}

std::map<Int, IntPolynomial>& Cache() {
  static std::map<Int, IntPolynomial> cache;
  return cache;
}

}  // namespace

const IntPolynomial& CyclotomicPolynomial(Int e) {
  if (e < 1) throw std::invalid_argument("CyclotomicPolynomial: e must be >= 1");
  {
    std::lock_guard<std::mutex> lock(CacheMutex());
    auto it = Cache().find(e);
    if (it != Cache().end()) return it->second;
  }
  // x^e - 1 = prod_{d | e} Phi_d
  IntPolynomial numerator = IntPolynomial::Monomial(static_cast<std::size_t>(e)) -
                            IntPolynomial(std::vector<Int>{1});
  IntPolynomial denominator(std::vector<Int>{1});
  for (Int d = 1; d < e; ++d) {
    if (e % d == 0) denominator = denominator * CyclotomicPolynomial(d);
  }
  auto [phi, rem] = numerator.DivideByMonic(denominator);
  if (!rem.IsZero()) throw std::logic_error("cyclotomic division left a remainder");

  std::lock_guard<std::mutex> lock(CacheMutex());
  return Cache().emplace(e, std::move(phi)).first->second;
}

// RootOfUnitySum

RootOfUnitySum::RootOfUnitySum(Int e) {
  if (e < 1) throw std::invalid_argument("RootOfUnitySum: modulus must be >= 1");
  counts_.assign(static_cast<std::size_t>(e), 0);
}

RootOfUnitySum::RootOfUnitySum(Int e, std::vector<Int> counts) : counts_(std::move(counts)) {
  if (e < 1 || counts_.size() != static_cast<std::size_t>(e)) {
    throw std::invalid_argument("RootOfUnitySum: counts must have length e");
  }
}

RootOfUnitySum RootOfUnitySum::Integer(Int e, Int value) {
  RootOfUnitySum v(e);
  v.counts_[0] = value;
  return v;
}

void RootOfUnitySum::AddPower(Int k, Int coeff) {
  const Int e = modulus();
  Int idx = k % e;
  if (idx < 0) idx += e;
  auto& slot = counts_[static_cast<std::size_t>(idx)];
  slot = checked::Add(slot, coeff);
}

RootOfUnitySum& RootOfUnitySum::operator+=(const RootOfUnitySum& other) {
  if (other.modulus() != modulus()) throw std::invalid_argument("RootOfUnitySum: modulus mismatch");
  for (std::size_t k = 0; k < counts_.size(); ++k) counts_[k] = checked::Add(counts_[k], other.counts_[k]);
  return *this;
}

RootOfUnitySum& RootOfUnitySum::operator-=(const RootOfUnitySum& other) {
  if (other.modulus() != modulus()) throw std::invalid_argument("RootOfUnitySum: modulus mismatch");
  for (std::size_t k = 0; k < counts_.size(); ++k) counts_[k] = checked::Sub(counts_[k], other.counts_[k]);
  return *this;
}

RootOfUnitySum Reduce(const RootOfUnitySum& v, const IntPolynomial& phi) {
  const Int e = v.modulus();
  if (phi.Degree() < 0 || phi.Degree() > e) throw std::invalid_argument("Reduce: wrong cyclotomic polynomial");
  auto rem = IntPolynomial(v.counts()).DivideByMonic(phi).remainder;
  std::vector<Int> counts(static_cast<std::size_t>(e), 0);
  std::copy(rem.coeffs().begin(), rem.coeffs().end(), counts.begin());
  return RootOfUnitySum(e, std::move(counts));
}

RootOfUnitySum Reduce(const RootOfUnitySum& v) {
  return Reduce(v, CyclotomicPolynomial(v.modulus()));
}

std::optional<Int> AsInteger(const RootOfUnitySum& v, const IntPolynomial& phi) {
  const RootOfUnitySum r = Reduce(v, phi);
  const auto& c = r.counts();
  if (std::any_of(c.begin() + 1, c.end(), [](Int x) { return x != 0; })) return std::nullopt;
  return c[0];
}

std::optional<Int> AsInteger(const RootOfUnitySum& v) {
  return AsInteger(v, CyclotomicPolynomial(v.modulus()));
}

bool Equivalent(const RootOfUnitySum& a, const RootOfUnitySum& b) {
  return Reduce(a - b).counts() == RootOfUnitySum(a.modulus()).counts();
}

std::complex<double> Approx(const RootOfUnitySum& v) {
  const auto e = static_cast<double>(v.modulus());
  std::complex<double> z{0.0, 0.0};
  const auto& c = v.counts();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / e;
    z += static_cast<double>(c[k]) * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return z;
}

}  // namespace fracrev
