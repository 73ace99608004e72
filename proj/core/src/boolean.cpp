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

#include "fracrev/boolean.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "fracrev/error.hpp"

namespace fracrev {

namespace {

constexpr int kMaxArity = 30;

std::size_t TableSize(int n) {
  if (n < 0 || n > kMaxArity) {
    throw Error(ErrorCode::kParse, "Boolean arity " + std::to_string(n) + " out of range");
  }
  return std::size_t{1} << n;
}

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

// p-adic valuation of a nonzero integer.
int Valuation(Int x, Int p) {
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

}  // namespace

void WalshHadamardInPlace(std::span<Int> values) {
  const std::size_t n = values.size();
  if (!std::has_single_bit(n)) throw std::invalid_argument("Walsh-Hadamard size must be a power of 2");
  for (std::size_t half = 1; half < n; half <<= 1) {
    for (std::size_t i = 0; i < n; i += 2 * half) {
      for (std::size_t j = i; j < i + half; ++j) {
        const Int u = values[j];
        const Int v = values[j + half];
        values[j] = checked::Add(u, v);
        values[j + half] = checked::Sub(u, v);
      }
    }
  }
}

BooleanFunction::BooleanFunction(int n) : n_(n), table_(TableSize(n), 0) {}

BooleanFunction::BooleanFunction(int n, std::vector<std::uint8_t> table) : n_(n), table_(std::move(table)) {
  if (table_.size() != TableSize(n)) {
    throw Error(ErrorCode::kParse, "truth table length must be 2^n");
  }
  for (auto& b : table_) b = b ? 1 : 0;
}

BooleanFunction BooleanFunction::FromHex(std::string_view hex, std::optional<int> n) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.empty()) throw Error(ErrorCode::kParse, "empty truth table");
  int arity;
  if (n) {
    arity = *n;
    const std::size_t want = std::max<std::size_t>(1, TableSize(arity) / 4);
    if (hex.size() != want) {
      throw Error(ErrorCode::kParse, "truth table of arity " + std::to_string(arity) + " needs " +
                                         std::to_string(want) + " hex digits");
    }
  } else {
    const std::size_t bits = hex.size() * 4;
    if (!std::has_single_bit(bits)) {
      throw Error(ErrorCode::kParse, "hex truth table length is not a power of two bits");
    }
    arity = std::countr_zero(bits);
  }
  const std::size_t size = TableSize(arity);
  std::vector<std::uint8_t> table(size, 0);
  for (std::size_t j = 0; j < hex.size(); ++j) {
    const int digit = HexValue(hex[j]);
    if (digit < 0) throw Error(ErrorCode::kParse, std::string("bad hex digit '") + hex[j] + "'");
    for (int b = 0; b < 4; ++b) {
      const std::size_t x = 4 * j + static_cast<std::size_t>(b);
      const bool bit = (digit >> b) & 1;
      if (x < size) {
        table[x] = bit;
      } else if (bit) {
        throw Error(ErrorCode::kParse, "truth table has bits beyond 2^n");
      }
    }
  }
  return BooleanFunction(arity, std::move(table));
}

BooleanFunction BooleanFunction::FromSupport(int n, std::span<const std::size_t> support) {
  BooleanFunction f(n);
  for (std::size_t x : support) {
    if (x >= f.size()) throw Error(ErrorCode::kParse, "support index out of range");
    f.table_[x] = 1;
  }
  return f;
}

std::string BooleanFunction::ToHex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t chars = std::max<std::size_t>(1, table_.size() / 4);
  std::string out(chars, '0');
  for (std::size_t j = 0; j < chars; ++j) {
    int digit = 0;
    for (int b = 0; b < 4; ++b) {
      const std::size_t x = 4 * j + static_cast<std::size_t>(b);
      if (x < table_.size() && table_[x]) digit |= 1 << b;
    }
    out[j] = kDigits[digit];
  }
  return out;
}

BooleanFunction BooleanFunction::Complement() const {
  std::vector<std::uint8_t> t(table_.size());
  std::transform(table_.begin(), table_.end(), t.begin(), [](std::uint8_t b) { return b ? 0 : 1; });
  return BooleanFunction(n_, std::move(t));
}

std::vector<Int> IndexToBits(std::size_t index, int n) {
  std::vector<Int> bits(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = (index >> (n - 1 - i)) & 1;
  return bits;
}

std::size_t BitsToIndex(std::span<const Int> bits) {
  std::size_t index = 0;
  for (Int b : bits) index = (index << 1) | static_cast<std::size_t>(b & 1);
  return index;
}

std::string BitString(std::size_t index, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((index >> (n - 1 - i)) & 1) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

std::vector<Int> WalshTransform(const BooleanFunction& f) {
  std::vector<Int> w(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) w[x] = f(x) ? -1 : 1;
  WalshHadamardInPlace(w);
  return w;
}

std::vector<std::size_t> Support(const BooleanFunction& f) {
  std::vector<std::size_t> s;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f(x)) s.push_back(x);
  }
  return s;
}

const char* ToString(BooleanClass c) {
  switch (c) {
    case BooleanClass::kBent: return "BENT";
    case BooleanClass::kSemiBent: return "SEMI_BENT";
    case BooleanClass::kNeither: return "NEITHER";
  }
  return "NEITHER";
}

BooleanClass Classify(const BooleanFunction& f) {
  const int n = f.arity();
  if (n == 0 || n % 2 != 0) return BooleanClass::kNeither;
  const Int bent = Int{1} << (n / 2);
  const Int semi = bent << 1;
  const auto w = WalshTransform(f);
  if (std::all_of(w.begin(), w.end(), [&](Int v) { return v == bent || v == -bent; })) {
    return BooleanClass::kBent;
  }
  bool zero = false;
  bool nonzero = false;
  for (Int v : w) {
    if (v == 0) {
      zero = true;
    } else if (v == semi || v == -semi) {
      nonzero = true;
    } else {
      return BooleanClass::kNeither;
    }
  }
  return zero && nonzero ? BooleanClass::kSemiBent : BooleanClass::kNeither;
}

Int SupportSizeCheck(const BooleanFunction& f) {
  if (Classify(f) != BooleanClass::kBent) throw std::logic_error("SupportSizeCheck: f is not bent");
  const int n = f.arity();
  const Int size = static_cast<Int>(Support(f).size());
  const Int base = Int{1} << (n - 1);
  const Int shift = Int{1} << (n / 2 - 1);
  if (size != base + shift && size != base - shift) {
    throw std::logic_error("bent support size " + std::to_string(size) + " is not 2^(n-1) +- 2^(n/2-1)");
  }
  return size;
}

std::vector<Int> EigenvaluesFromWalsh(const BooleanFunction& f) {
  auto lambda = WalshTransform(f);
  for (std::size_t x = 1; x < lambda.size(); ++x) lambda[x] = -lambda[x] / 2;
  lambda[0] = static_cast<Int>(Support(f).size());
  return lambda;
}

BooleanFunction MaioranaMcFarlandBent(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("MaioranaMcFarlandBent: n must be even and >= 2");
  BooleanFunction f(n);
  std::vector<std::uint8_t> table(f.size(), 0);
  for (std::size_t x = 0; x < f.size(); ++x) {
    const auto bits = IndexToBits(x, n);
    Int acc = 0;
    for (int i = 0; i < n; i += 2) acc ^= bits[static_cast<std::size_t>(i)] & bits[static_cast<std::size_t>(i) + 1];
    table[x] = static_cast<std::uint8_t>(acc);
  }
  return BooleanFunction(n, std::move(table));
}

GroupFunction::GroupFunction(FiniteAbelianGroup g, std::vector<Int> v) : group(std::move(g)), values(std::move(v)) {
  if (values.size() != static_cast<std::size_t>(group.order())) {
    throw Error(ErrorCode::kParse, "group function needs one value per element (" +
                                       std::to_string(group.order()) + ")");
  }
}

GroupFunction GroupFunction::Indicator(const FiniteAbelianGroup& g, std::span<const GroupElement> set) {
  std::vector<Int> v(static_cast<std::size_t>(g.order()), 0);
  for (const GroupElement& x : set) {
    g.Check(x);
    v[g.Rank(x)] = 1;
  }
  return GroupFunction(g, std::move(v));
}

std::vector<RootOfUnitySum> GroupFourier(const GroupFunction& f) {
  const FiniteAbelianGroup& g = f.group;
  const Int e = g.exponent();
  const auto elements = g.Elements();
  std::vector<RootOfUnitySum> out;
  out.reserve(elements.size());
  for (const GroupElement& z : elements) {
    RootOfUnitySum v(e);
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (f.values[i] != 0) v.AddPower(-CharacterExponent(g, z, elements[i]), f.values[i]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool IsClassFunction(const GroupFunction& f) {
  const FiniteAbelianGroup& g = f.group;
  const auto units = UnitsMod(g.exponent());
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const GroupElement x = g.Unrank(i);
    for (Int l : units) {
      if (f.values[g.Rank(g.Scale(x, l))] != f.values[i]) return false;
    }
  }
  return true;
}

std::optional<PlateauLevel> PlateauedLevel(const GroupFunction& f, Int p) {
  if (!IsClassFunction(f)) {
    throw Error(ErrorCode::kNotClassFunction, "function is not invariant under the units of Z_e");
  }
  const IntPolynomial& phi = CyclotomicPolynomial(f.group.exponent());
  std::vector<Int> fourier;
  for (const RootOfUnitySum& v : GroupFourier(f)) {
    auto x = AsInteger(v, phi);
    if (!x) throw std::logic_error("class function has a non-integral Fourier coefficient");
    fourier.push_back(*x);
  }
  Int spread = 0;
  for (Int x : fourier) spread = std::gcd(spread, checked::Sub(x, fourier[0]));
  if (spread == 0) return std::nullopt;
  const int r = Valuation(spread, p);
  if (r == 0) return std::nullopt;
  Int pr = 1;
  for (int i = 0; i < r; ++i) pr = checked::Mul(pr, p);
  Int k = fourier[0] % pr;
  if (k < 0) k += pr;
  return PlateauLevel{k, r};
}

}  // namespace fracrev
