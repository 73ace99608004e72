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

#include "fracrev/constructions.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "fracrev/error.hpp"

namespace fracrev {

namespace {

constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

Int Mod(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

Int Power(Int base, int exp) {
  Int out = 1;
  for (int i = 0; i < exp; ++i) out = checked::Mul(out, base);
  return out;
}

int ValuationOrInfinity(Int x, Int p) { return x == 0 ? kInfiniteValuation : PAdicValuation(x, p); }

[[noreturn]] void Violation(const std::string& what) { throw Error(ErrorCode::kHypothesis, what); }

// Every family predicts alpha + beta = omega_N^rho0 on G_0 and
// alpha - beta = omega_N^rho1 on G_1 with the phases read off from d and
// the closed-form eigenvalue on G_1.
FRWitness Predict(GroupElement a, Int k, Int modulus, Int d, Int lambda_g1) {
  FRWitness w;
  w.a = std::move(a);
  w.k = k;
  w.modulus = modulus;
  w.rho0 = Mod(checked::Mul(k, d), modulus);
  w.rho1 = Mod(checked::Mul(k, lambda_g1), modulus);
  w.kind = RevivalKind::kFractionalRevival;
  w.valid_k = {k};
  return w;
}

GroupElement Prepend(Int head, const GroupElement& tail) {
  std::vector<Int> c{head};
  c.insert(c.end(), tail.coords.begin(), tail.coords.end());
  return GroupElement(std::move(c));
}

std::vector<Int> Prepend(Int head, std::span<const Int> tail) {
  std::vector<Int> c{head};
  c.insert(c.end(), tail.begin(), tail.end());
  return c;
}

}  // namespace

bool IsPrime(Int p) {
  if (p < 2) return false;
  for (Int q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

int PAdicValuation(Int x, Int p) {
  if (x == 0) throw Error(ErrorCode::kZeroInput, "p-adic valuation of 0 is undefined");
  if (p < 2) throw std::invalid_argument("PAdicValuation: p must be >= 2");
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

Int RamanujanSum(Int y, Int p, int r) {
  const Int q = Power(p, r);
  if (y < 0 || y >= q) throw std::invalid_argument("RamanujanSum: y must lie in [0, p^r)");
  const Int lower = Power(p, r - 1);
  if (y == 0) return lower * (p - 1);
  return PAdicValuation(y, p) == r - 1 ? -lower : 0;
}

Construction BuildRamanujanFamily(Int p, int r, std::span<const Int> h_orders) {
  if (!IsPrime(p) || p == 2) Violation("p must be an odd prime");
  if (r < 1) Violation("r must be at least 1");
  Int m = 1;
  for (Int o : h_orders) m = checked::Mul(m, o);
  const Int pr = Power(p, r);
  const Int modulus = checked::Mul(Power(p, r - 1), m);
  if (modulus == 1 || modulus == 2 || modulus == 4) {
    Violation("p^(r-1) m = " + std::to_string(modulus) + " must not be 1, 2 or 4");
  }

  std::vector<Int> orders{2, pr};
  orders.insert(orders.end(), h_orders.begin(), h_orders.end());
  FiniteAbelianGroup group = FiniteAbelianGroup::Make(orders);

  std::vector<GroupElement> set;
  const auto units = UnitsMod(pr);
  if (h_orders.empty()) {
    for (Int l : units) set.push_back(GroupElement{0, l});
  } else {
    const auto h_elements = FiniteAbelianGroup::Make({h_orders.begin(), h_orders.end()}).Elements();
    for (Int l : units) {
      for (const GroupElement& h : h_elements) {
        std::vector<Int> c{0, l};
        c.insert(c.end(), h.coords.begin(), h.coords.end());
        set.emplace_back(std::move(c));
      }
    }
  }
  GroupElement a = group.Zero();
  a.coords[0] = 1;
  set.push_back(a);

  // lambda_{x,y,z} = (-1)^x + c(y, p^r) m [z = 0]; g1 = (1, 0, 0).
  const Int phi = checked::Mul(EulerPhi(pr), m);
  const Int d = phi + 1;
  const Int lambda_g1 = phi - 1;
  CayleyGraph graph = CayleyGraph::Make(group, set);
  return {std::move(graph), Predict(std::move(a), 1, modulus, d, lambda_g1)};
}

Construction BuildMultiPrimeFamily(std::span<const std::pair<Int, int>> prime_powers) {
  if (prime_powers.size() < 2) Violation("need p_0 = 2 and at least one odd prime power");
  if (prime_powers.front().first != 2) Violation("the first prime must be p_0 = 2");
  std::set<Int> seen;
  Int modulus = 1;
  Int units_product = 1;  // prod over odd i of phi(p_i^{r_i})
  std::vector<Int> orders;
  for (std::size_t i = 0; i < prime_powers.size(); ++i) {
    const auto [p, r] = prime_powers[i];
    if (!IsPrime(p)) Violation(std::to_string(p) + " is not prime");
    if (r < 1) Violation("exponents r_i must be at least 1");
    if (!seen.insert(p).second) Violation("primes must be distinct");
    orders.push_back(Power(p, r));
    modulus = checked::Mul(modulus, Power(p, r - 1));
    if (i > 0) units_product = checked::Mul(units_product, EulerPhi(orders.back()));
  }
  if (modulus == 1 || modulus == 2 || modulus == 4) {
    Violation("prod p_i^(r_i-1) = " + std::to_string(modulus) + " must not be 1, 2 or 4");
  }
  FiniteAbelianGroup group = FiniteAbelianGroup::Make(orders);

  std::vector<std::vector<Int>> unit_lists;
  for (Int q : orders) unit_lists.push_back(UnitsMod(q));
  std::vector<GroupElement> set;
  std::vector<std::size_t> cursor(orders.size(), 0);
  while (true) {
    std::vector<Int> c(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) c[i] = unit_lists[i][cursor[i]];
    set.emplace_back(std::move(c));
    std::size_t i = orders.size();
    while (i-- > 0) {
      if (++cursor[i] < unit_lists[i].size()) break;
      cursor[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  const int r0 = prime_powers.front().second;
  GroupElement a = group.Zero();
  a.coords[0] = Power(2, r0 - 1);
  set.push_back(a);

  // lambda_g = prod_i c(g_i, p_i^{r_i}) + (-1)^{g_0}; g1 = (1, 0, ..., 0).
  const Int d = checked::Add(checked::Mul(EulerPhi(orders.front()), units_product), 1);
  const Int lambda_g1 = checked::Sub(checked::Mul(RamanujanSum(1, 2, r0), units_product), 1);
  CayleyGraph graph = CayleyGraph::Make(group, set);
  return {std::move(graph), Predict(std::move(a), 1, modulus, d, lambda_g1)};
}

Construction BuildPlateauedFamily(std::span<const Int> h_orders, std::span<const GroupElement> s1,
                                  std::optional<Int> p) {
  const FiniteAbelianGroup h = FiniteAbelianGroup::Make({h_orders.begin(), h_orders.end()});
  std::vector<GroupElement> s1_sorted;
  for (const GroupElement& x : s1) {
    h.Check(x);
    s1_sorted.push_back(x);
  }
  std::sort(s1_sorted.begin(), s1_sorted.end());
  s1_sorted.erase(std::unique(s1_sorted.begin(), s1_sorted.end()), s1_sorted.end());
  if (std::binary_search(s1_sorted.begin(), s1_sorted.end(), h.Zero())) Violation("0 must not lie in S1");
  const Int d = static_cast<Int>(s1_sorted.size());
  if (d == 0) Violation("S1 must be nonempty");

  const GroupFunction indicator = GroupFunction::Indicator(h, s1_sorted);
  if (!IsClassFunction(indicator)) Violation("S1 must satisfy l S1 = S1 for every unit l of Z_e");

  std::optional<PlateauLevel> level;
  Int prime = 0;
  if (p) {
    if (!IsPrime(*p)) Violation(std::to_string(*p) + " is not prime");
    level = PlateauedLevel(indicator, *p);
    if (!level) Violation("indicator of S1 is not " + std::to_string(*p) + "^r-plateaued with r >= 1");
    if (d % *p != 0) Violation("p = " + std::to_string(*p) + " must divide |S1| = " + std::to_string(d));
    prime = *p;
  } else {
    for (Int q = 2; q <= d; ++q) {
      if (d % q != 0 || !IsPrime(q)) continue;
      if (auto l = PlateauedLevel(indicator, q)) {
        level = l;
        prime = q;
        break;
      }
    }
    if (!level) {
      Violation("no prime p divides |S1| = " + std::to_string(d) +
                " with the indicator of S1 p^r-plateaued, r >= 1");
    }
  }

  const int r0 = std::min(level->r, PAdicValuation(d, prime));
  std::vector<Int> orders = Prepend(2, h_orders);
  FiniteAbelianGroup group = FiniteAbelianGroup::Make(orders);
  std::vector<GroupElement> set;
  for (const GroupElement& x : s1_sorted) {
    set.push_back(Prepend(0, x));
    set.push_back(Prepend(1, x));
  }
  GroupElement a = group.Zero();
  a.coords[0] = 1;
  set.push_back(a);

  // t = pi / p^r0 = 2 pi / (2 p^r0); lambda = 1 + 2 fhat on G_0, -1 on G_1.
  const Int modulus = checked::Mul(2, Power(prime, r0));
  CayleyGraph graph = CayleyGraph::Make(group, set);
  return {std::move(graph), Predict(std::move(a), 1, modulus, 2 * d + 1, -1)};
}

Construction BuildCublikeFamily(std::span<const std::vector<Int>> s0, std::span<const std::vector<Int>> s1) {
  if (s0.empty() && s1.empty()) Violation("S0 and S1 cannot both be empty");
  const std::size_t width = (s0.empty() ? s1 : s0).front().size();
  if (width < 1) Violation("vectors of S0/S1 must have length n - 1 >= 1");
  auto normalize = [&](std::span<const std::vector<Int>> raw, const char* name) {
    std::set<std::vector<Int>> out;
    for (const auto& v : raw) {
      if (v.size() != width) Violation(std::string(name) + " vectors must all have length " + std::to_string(width));
      for (Int b : v) {
        if (b != 0 && b != 1) Violation(std::string(name) + " entries must be bits");
      }
      out.insert(v);
    }
    return out;
  };
  const auto set0 = normalize(s0, "S0");
  const auto set1 = normalize(s1, "S1");
  const std::vector<Int> zero(width, 0);
  if (set1.count(zero)) Violation("the zero vector must not lie in S1");
  if (set0.count(zero)) Violation("the zero vector must not lie in S0");

  const auto d0 = static_cast<Int>(set0.size());
  const auto d1 = static_cast<Int>(set1.size());
  const int v_sum = ValuationOrInfinity(d0 + d1, 2);
  const int v_diff = ValuationOrInfinity(d0 - d1, 2);
  if (std::min(v_sum, v_diff) < 3) {
    Violation("min(v_2(d0 + d1), v_2(d0 - d1)) >= 3 fails for d0 = " + std::to_string(d0) +
              ", d1 = " + std::to_string(d1));
  }

  FiniteAbelianGroup group = FiniteAbelianGroup::Make(std::vector<Int>(width + 1, 2));
  std::vector<GroupElement> set;
  for (const auto& v : set0) set.emplace_back(Prepend(0, v));
  for (const auto& v : set1) set.emplace_back(Prepend(1, v));
  GroupElement a = group.Zero();
  a.coords[0] = 1;
  set.push_back(a);
  CayleyGraph graph = CayleyGraph::Make(group, set);

  const Spectrum spectrum = ComputeSpectrum(graph);
  const Moduli moduli = ComputeModuli(spectrum, SplitByInvolution(group, a));
  if (moduli.m < 8) Violation("M >= 8 fails: computed M = " + std::to_string(moduli.m));
  const int kappa = std::min({PAdicValuation(moduli.m, 2), v_sum, v_diff});

  // lambda_{(0,0)} = d0 + d1 + 1 and lambda_{(1,0)} = d0 - d1 - 1.
  return {std::move(graph), Predict(std::move(a), 1, Power(2, kappa), d0 + d1 + 1, d0 - d1 - 1)};
}

Construction BuildBentFamily(const BooleanFunction& f) {
  const int n = f.arity();
  if (n < 4 || n % 2 != 0) Violation("f must have even arity n = 2k >= 4");
  const BooleanClass cls = Classify(f);
  if (cls == BooleanClass::kNeither) Violation("f must be bent or semi-bent");
  if (f(0)) Violation("f(0) must be 0 (the zero vector cannot lie in the connection set)");

  FiniteAbelianGroup group = FiniteAbelianGroup::Make(std::vector<Int>(static_cast<std::size_t>(n) + 1, 2));
  const auto support = Support(f);
  std::vector<GroupElement> set;
  for (std::size_t x : support) {
    set.emplace_back(Prepend(0, IndexToBits(x, n)));
    set.emplace_back(Prepend(1, IndexToBits(x, n)));
  }
  GroupElement a = group.Zero();
  a.coords[0] = 1;
  set.push_back(a);

  const int k = n / 2;
  // t = pi / 2^k = 2 pi / 2^{k+1} (bent), pi / 2^{k+1} (semi-bent).
  const Int modulus = Power(2, cls == BooleanClass::kBent ? k + 1 : k + 2);
  const Int d = 2 * static_cast<Int>(support.size()) + 1;
  CayleyGraph graph = CayleyGraph::Make(group, set);
  return {std::move(graph), Predict(std::move(a), 1, modulus, d, -1)};
}

const char* ToString(FamilyVariant v) {
  switch (v) {
    case FamilyVariant::kRamanujanA: return "RAMANUJAN_A";
    case FamilyVariant::kMultiPrimeB: return "MULTI_PRIME_B";
    case FamilyVariant::kPlateauedC: return "PLATEAUED_C";
    case FamilyVariant::kCublikeD: return "CUBLIKE_D";
    case FamilyVariant::kBentE: return "BENT_E";
  }
  return "UNKNOWN";
}

Construction Build(const FamilySpec& spec) {
  struct Visitor {
    Construction operator()(const RamanujanParams& p) const { return BuildRamanujanFamily(p.p, p.r, p.h_orders); }
    Construction operator()(const MultiPrimeParams& p) const { return BuildMultiPrimeFamily(p.prime_powers); }
    Construction operator()(const PlateauedParams& p) const { return BuildPlateauedFamily(p.h_orders, p.s1, p.p); }
    Construction operator()(const CublikeParams& p) const { return BuildCublikeFamily(p.s0, p.s1); }
    Construction operator()(const BentParams& p) const { return BuildBentFamily(p.f); }
  };
  return std::visit(Visitor{}, spec.params);
}

bool PredictionConfirmed(const FRWitness& predicted, const FRWitness& decided) {
  if (predicted.a != decided.a || decided.kind != RevivalKind::kFractionalRevival) return false;
  // k/N = k'/N' mod 1  <=>  k' = k N' / N (mod N'), requiring N | k N'.
  const Int scaled = checked::Mul(predicted.k, decided.modulus);
  if (scaled % predicted.modulus != 0) return false;
  const Int k_engine = Mod(scaled / predicted.modulus, decided.modulus);
  return std::binary_search(decided.valid_k.begin(), decided.valid_k.end(), k_engine);
}

}  // namespace fracrev
