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

#ifndef FRACREV_ABELIAN_GROUP_HPP_
#define FRACREV_ABELIAN_GROUP_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace fracrev {

using Int = std::int64_t;

/// An element of Z_{n_1} + ... + Z_{n_r}, stored as its coordinate vector.
/// Ordering is lexicographic on coordinates, which is also the order used
/// for element ranks and matrix indices.
struct GroupElement {
  std::vector<Int> coords;

  GroupElement() = default;
  explicit GroupElement(std::vector<Int> c) : coords(std::move(c)) {}
  GroupElement(std::initializer_list<Int> c) : coords(c) {}

  std::size_t size() const { return coords.size(); }
  Int operator[](std::size_t s) const { return coords[s]; }

  auto operator<=>(const GroupElement&) const = default;
  bool operator==(const GroupElement&) const = default;
};

std::string ToString(const GroupElement& g);

/// Finite abelian group given as a direct sum of cyclic groups.
///
/// Immutable after construction. Elements are enumerated in lexicographic
/// order of their coordinate vectors; Rank()/Unrank() implement that order
/// as a mixed-radix number with the first coordinate most significant.
class FiniteAbelianGroup {
 public:
  /// Throws Error(kInvalidGroup) if `orders` is empty or some order < 2.
  static FiniteAbelianGroup Make(std::vector<Int> orders);

  std::span<const Int> orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  Int order() const { return order_; }
  Int exponent() const { return exponent_; }

  bool IsElementaryTwoGroup() const { return exponent_ == 2; }

  GroupElement Zero() const;
  bool Contains(const GroupElement& g) const;
  // Reduces arbitrary integers coordinate-wise; throws kInvalidElement on a
  // length mismatch.
  GroupElement Normalize(std::vector<Int> coords) const;
  // Throws kInvalidElement unless Contains(g).
  void Check(const GroupElement& g) const;

  GroupElement Add(const GroupElement& g, const GroupElement& h) const;
  GroupElement Subtract(const GroupElement& g, const GroupElement& h) const;
  GroupElement Negate(const GroupElement& g) const;
  GroupElement Scale(const GroupElement& g, Int factor) const;

  std::size_t Rank(const GroupElement& g) const;
  GroupElement Unrank(std::size_t index) const;
  std::vector<GroupElement> Elements() const;

  bool operator==(const FiniteAbelianGroup& other) const {
    return orders_ == other.orders_;
  }

 private:
  FiniteAbelianGroup() = default;

  std::vector<Int> orders_;
  Int order_ = 1;
  Int exponent_ = 1;
};

/// Exponent k with chi_g(h) = omega_e^k, where e is the group exponent.
/// Symmetric in g and h.
Int CharacterExponent(const FiniteAbelianGroup& group, const GroupElement& g,
                      const GroupElement& h);

/// Least m >= 1 with m*g = 0.
Int ElementOrder(const FiniteAbelianGroup& group, const GroupElement& g);

/// All elements of order exactly two, in lexicographic order.
std::vector<GroupElement> Involutions(const FiniteAbelianGroup& group);

/// Units of Z_e in increasing order. UnitsMod(1) is empty.
std::vector<Int> UnitsMod(Int e);

/// The subgroup generated by `generators` (always contains zero).
std::set<GroupElement> SubgroupGenerated(
    const FiniteAbelianGroup& group, std::span<const GroupElement> generators);

}  // namespace fracrev

#endif  // FRACREV_ABELIAN_GROUP_HPP_
