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

#ifndef FRACREV_CAYLEY_HPP_
#define FRACREV_CAYLEY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fracrev/abelian_group.hpp"
#include "fracrev/cyclotomic.hpp"

namespace fracrev {

/// Symmetric connection set: 0 not in S and S = -S. Elements are kept
/// sorted and deduplicated.
class ConnectionSet {
 public:
  ConnectionSet() = default;

  /// Throws Error(kZeroInSet) or Error(kAsymmetricSet); the latter names the
  /// missing negation.
  static ConnectionSet Validate(std::span<const GroupElement> raw, const FiniteAbelianGroup& group);

  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool Contains(const GroupElement& g) const;

  bool operator==(const ConnectionSet&) const = default;

 private:
  std::vector<GroupElement> elements_;
};

class CayleyGraph {
 public:
  CayleyGraph(FiniteAbelianGroup group, ConnectionSet set);

  /// Validates `raw` and builds the graph.
  static CayleyGraph Make(FiniteAbelianGroup group, std::span<const GroupElement> raw);

  const FiniteAbelianGroup& group() const { return group_; }
  const ConnectionSet& connection_set() const { return set_; }
  Int degree() const { return static_cast<Int>(set_.size()); }
  Int order() const { return group_.order(); }
  bool connected() const { return connected_; }

 private:
  FiniteAbelianGroup group_;
  ConnectionSet set_;
  bool connected_ = false;
};

/// Eigenvalues lambda_g = sum_{s in S} chi_g(s), indexed by element rank.
class Spectrum {
 public:
  Spectrum(FiniteAbelianGroup group, std::vector<RootOfUnitySum> values);

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<RootOfUnitySum>& values() const { return values_; }
  const RootOfUnitySum& at(const GroupElement& g) const { return values_[group_.Rank(g)]; }

  bool integral() const { return integral_.has_value(); }
  // Empty unless every eigenvalue is a rational integer.
  const std::optional<std::vector<Int>>& integral_values() const { return integral_; }
  // Throws Error(kNonIntegralSpectrum) when the spectrum is not integral.
  Int IntegerAt(const GroupElement& g) const;

  std::vector<std::complex<double>> Approximate() const;

 private:
  FiniteAbelianGroup group_;
  std::vector<RootOfUnitySum> values_;
  std::optional<std::vector<Int>> integral_;
};

enum class SpectrumMethod {
  kAuto,     // Walsh-Hadamard when the group exponent is 2, otherwise generic
  kGeneric,  // direct character sums
  kWalsh,    // elementary 2-groups only
};

Spectrum ComputeSpectrum(const CayleyGraph& graph, SpectrumMethod method = SpectrumMethod::kAuto);

bool IsIntegral(const CayleyGraph& graph);

/// True iff l*S = S for every unit l of Z_e.
bool UnitClosed(const ConnectionSet& set, const FiniteAbelianGroup& group);

/// Dense 0/1 adjacency matrix in element-rank order.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}

  std::size_t size() const { return n_; }
  std::uint8_t operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::uint8_t& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> entries_;
};

AdjacencyMatrix BuildAdjacencyMatrix(const CayleyGraph& graph);

}  // namespace fracrev

#endif  // FRACREV_CAYLEY_HPP_
