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

#include "fracrev/abelian_group.hpp"

#include <deque>
#include <limits>
#include <numeric>
#include <sstream>

#include "fracrev/error.hpp"

namespace fracrev {

namespace {

Int Mod(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

const char* ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidGroup: return "invalid-group";
    case ErrorCode::kInvalidElement: return "invalid-element";
    case ErrorCode::kZeroInSet: return "zero-in-set";
    case ErrorCode::kAsymmetricSet: return "asymmetric-set";
    case ErrorCode::kNotAnInvolution: return "not-an-involution";
    case ErrorCode::kNonIntegralSpectrum: return "non-integral-spectrum";
    case ErrorCode::kNotClassFunction: return "not-a-class-function";
    case ErrorCode::kZeroInput: return "zero-input";
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kDimensionGuard: return "dimension-guard";
    case ErrorCode::kHypothesis: return "hypothesis-violation";
    case ErrorCode::kParse: return "parse";
  }
  return "unknown";
}

std::string ToString(const GroupElement& g) {
  std::ostringstream out;
  out << '(';
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (s) out << ',';
    out << g[s];
  }
  out << ')';
  return out.str();
}

FiniteAbelianGroup FiniteAbelianGroup::Make(std::vector<Int> orders) {
  if (orders.empty()) {
    throw Error(ErrorCode::kInvalidGroup, "group needs at least one cyclic factor");
  }
  FiniteAbelianGroup group;
  for (Int n : orders) {
    if (n < 2) {
      throw Error(ErrorCode::kInvalidGroup,
                  "cyclic order " + std::to_string(n) + " is below 2");
    }
    if (group.order_ > std::numeric_limits<Int>::max() / n) {
      throw Error(ErrorCode::kOverflow, "group order overflows 64 bits");
    }
    group.order_ *= n;
    group.exponent_ = std::lcm(group.exponent_, n);
  }
  group.orders_ = std::move(orders);
  return group;
}

GroupElement FiniteAbelianGroup::Zero() const {
  return GroupElement(std::vector<Int>(orders_.size(), 0));
}

bool FiniteAbelianGroup::Contains(const GroupElement& g) const {
  if (g.size() != orders_.size()) return false;
  for (std::size_t s = 0; s < orders_.size(); ++s) {
    if (g[s] < 0 || g[s] >= orders_[s]) return false;
  }
  return true;
}

GroupElement FiniteAbelianGroup::Normalize(std::vector<Int> coords) const {
  if (coords.size() != orders_.size()) {
    throw Error(ErrorCode::kInvalidElement,
                "element has " + std::to_string(coords.size()) +
                    " coordinates, group has rank " + std::to_string(orders_.size()));
  }
  for (std::size_t s = 0; s < coords.size(); ++s) coords[s] = Mod(coords[s], orders_[s]);
  return GroupElement(std::move(coords));
}

void FiniteAbelianGroup::Check(const GroupElement& g) const {
  if (!Contains(g)) {
    throw Error(ErrorCode::kInvalidElement, "element " + ToString(g) + " is not in the group");
  }
}

GroupElement FiniteAbelianGroup::Add(const GroupElement& g, const GroupElement& h) const {
  std::vector<Int> c(orders_.size());
  for (std::size_t s = 0; s < c.size(); ++s) c[s] = (g[s] + h[s]) % orders_[s];
  return GroupElement(std::move(c));
}

GroupElement FiniteAbelianGroup::Subtract(const GroupElement& g, const GroupElement& h) const {
  std::vector<Int> c(orders_.size());
  for (std::size_t s = 0; s < c.size(); ++s) c[s] = Mod(g[s] - h[s], orders_[s]);
  return GroupElement(std::move(c));
}

GroupElement FiniteAbelianGroup::Negate(const GroupElement& g) const {
  std::vector<Int> c(orders_.size());
  for (std::size_t s = 0; s < c.size(); ++s) c[s] = Mod(-g[s], orders_[s]);
  return GroupElement(std::move(c));
}

GroupElement FiniteAbelianGroup::Scale(const GroupElement& g, Int factor) const {
  std::vector<Int> c(orders_.size());
  for (std::size_t s = 0; s < c.size(); ++s) {
    c[s] = Mod(Mod(factor, orders_[s]) * g[s], orders_[s]);
  }
  return GroupElement(std::move(c));
}

std::size_t FiniteAbelianGroup::Rank(const GroupElement& g) const {
  std::size_t index = 0;
  for (std::size_t s = 0; s < orders_.size(); ++s) {
    index = index * static_cast<std::size_t>(orders_[s]) + static_cast<std::size_t>(g[s]);
  }
  return index;
}

GroupElement FiniteAbelianGroup::Unrank(std::size_t index) const {
  std::vector<Int> c(orders_.size());
  for (std::size_t s = orders_.size(); s-- > 0;) {
    const auto n = static_cast<std::size_t>(orders_[s]);
    c[s] = static_cast<Int>(index % n);
    index /= n;
  }
  return GroupElement(std::move(c));
}

std::vector<GroupElement> FiniteAbelianGroup::Elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (std::size_t i = 0; i < static_cast<std::size_t>(order_); ++i) out.push_back(Unrank(i));
  return out;
}

Int CharacterExponent(const FiniteAbelianGroup& group, const GroupElement& g,
                      const GroupElement& h) {
  const Int e = group.exponent();
  const auto orders = group.orders();
  Int k = 0;
  for (std::size_t s = 0; s < orders.size(); ++s) {
    const Int n = orders[s];
    // g_s, h_s < n, so the product fits comfortably for any realistic group.
    k = (k + (e / n) * ((g[s] * h[s]) % n)) % e;
  }
  return k;
}

Int ElementOrder(const FiniteAbelianGroup& group, const GroupElement& g) {
  const auto orders = group.orders();
  Int m = 1;
  for (std::size_t s = 0; s < orders.size(); ++s) {
    m = std::lcm(m, orders[s] / std::gcd(orders[s], g[s]));
  }
  return m;
}

std::vector<GroupElement> Involutions(const FiniteAbelianGroup& group) {
  // Elements of order two have every coordinate in {0, n_s/2}.
  std::vector<GroupElement> out;
  for (const GroupElement& g : group.Elements()) {
    if (ElementOrder(group, g) == 2) out.push_back(g);
  }
  return out;
}

std::vector<Int> UnitsMod(Int e) {
  std::vector<Int> units;
  for (Int l = 1; l < e; ++l) {
    if (std::gcd(l, e) == 1) units.push_back(l);
  }
  return units;
}

std::set<GroupElement> SubgroupGenerated(const FiniteAbelianGroup& group,
                                         std::span<const GroupElement> generators) {
  std::set<GroupElement> seen{group.Zero()};
  std::deque<GroupElement> frontier{group.Zero()};
  while (!frontier.empty()) {
    GroupElement g = std::move(frontier.front());
    frontier.pop_front();
    for (const GroupElement& s : generators) {
      GroupElement next = group.Add(g, s);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return seen;
}

}  // namespace fracrev
