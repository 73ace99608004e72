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

#include "fracrev/cayley.hpp"

#include <algorithm>
#include <stdexcept>

#include "fracrev/boolean.hpp"
#include "fracrev/error.hpp"

namespace fracrev {

ConnectionSet ConnectionSet::Validate(std::span<const GroupElement> raw,
                                      const FiniteAbelianGroup& group) {
  ConnectionSet set;
  set.elements_.assign(raw.begin(), raw.end());
  for (const GroupElement& s : set.elements_) group.Check(s);
  std::sort(set.elements_.begin(), set.elements_.end());
  set.elements_.erase(std::unique(set.elements_.begin(), set.elements_.end()), set.elements_.end());

  const GroupElement zero = group.Zero();
  if (set.Contains(zero)) {
    throw Error(ErrorCode::kZeroInSet, "connection set contains the identity " + ToString(zero));
  }
  for (const GroupElement& s : set.elements_) {
    GroupElement neg = group.Negate(s);
    if (!set.Contains(neg)) {
      throw Error(ErrorCode::kAsymmetricSet, "connection set contains " + ToString(s) +
                                                 " but not its negation " + ToString(neg));
    }
  }
  return set;
}

bool ConnectionSet::Contains(const GroupElement& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

CayleyGraph::CayleyGraph(FiniteAbelianGroup group, ConnectionSet set)
    : group_(std::move(group)), set_(std::move(set)) {
  connected_ = static_cast<Int>(SubgroupGenerated(group_, set_.elements()).size()) == group_.order();
}

CayleyGraph CayleyGraph::Make(FiniteAbelianGroup group, std::span<const GroupElement> raw) {
  ConnectionSet set = ConnectionSet::Validate(raw, group);
  return CayleyGraph(std::move(group), std::move(set));
}

Spectrum::Spectrum(FiniteAbelianGroup group, std::vector<RootOfUnitySum> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(group_.order())) {
    throw std::invalid_argument("Spectrum: one eigenvalue per group element required");
  }
  const IntPolynomial& phi = CyclotomicPolynomial(group_.exponent());
  std::vector<Int> ints;
  ints.reserve(values_.size());
  for (const RootOfUnitySum& v : values_) {
    auto x = AsInteger(v, phi);
    if (!x) return;
    ints.push_back(*x);
  }
  integral_ = std::move(ints);
}

Int Spectrum::IntegerAt(const GroupElement& g) const {
  if (!integral_) throw Error(ErrorCode::kNonIntegralSpectrum, "spectrum is not integral");
  return (*integral_)[group_.Rank(g)];
}

std::vector<std::complex<double>> Spectrum::Approximate() const {
  std::vector<std::complex<double>> out;
  out.reserve(values_.size());
  if (integral_) {
    for (Int x : *integral_) out.emplace_back(static_cast<double>(x), 0.0);
  } else {
    for (const RootOfUnitySum& v : values_) out.push_back(Approx(v));
  }
  return out;
}

namespace {

std::vector<RootOfUnitySum> GenericEigenvalues(const CayleyGraph& graph) {
  const FiniteAbelianGroup& group = graph.group();
  const Int e = group.exponent();
  std::vector<RootOfUnitySum> values;
  values.reserve(static_cast<std::size_t>(group.order()));
  for (const GroupElement& g : group.Elements()) {
    RootOfUnitySum v(e);
    for (const GroupElement& s : graph.connection_set().elements()) {
      v.AddPower(CharacterExponent(group, g, s));
    }
    values.push_back(std::move(v));
  }
  return values;
}

// Over F_2^n, lambda_x = sum_s (-1)^{s.x} is the Walsh-Hadamard transform of
// the indicator of S. Stored as counts (#{s.x = 0}, #{s.x = 1}) so that the
// result is identical to the generic accumulation.
std::vector<RootOfUnitySum> WalshEigenvalues(const CayleyGraph& graph) {
  const FiniteAbelianGroup& group = graph.group();
  if (!group.IsElementaryTwoGroup()) {
    throw std::invalid_argument("Walsh spectrum requires an elementary abelian 2-group");
  }
  std::vector<Int> lambda(static_cast<std::size_t>(group.order()), 0);
  for (const GroupElement& s : graph.connection_set().elements()) lambda[group.Rank(s)] = 1;
  WalshHadamardInPlace(lambda);
  const Int d = graph.degree();
  std::vector<RootOfUnitySum> values;
  values.reserve(lambda.size());
  for (Int l : lambda) values.emplace_back(2, std::vector<Int>{(d + l) / 2, (d - l) / 2});
  return values;
}

}  // namespace

Spectrum ComputeSpectrum(const CayleyGraph& graph, SpectrumMethod method) {
  if (method == SpectrumMethod::kAuto) {
    method = graph.group().IsElementaryTwoGroup() ? SpectrumMethod::kWalsh : SpectrumMethod::kGeneric;
  }
  auto values = method == SpectrumMethod::kWalsh ? WalshEigenvalues(graph) : GenericEigenvalues(graph);
  return Spectrum(graph.group(), std::move(values));
}

bool IsIntegral(const CayleyGraph& graph) { return ComputeSpectrum(graph).integral(); }

bool UnitClosed(const ConnectionSet& set, const FiniteAbelianGroup& group) {
  for (Int l : UnitsMod(group.exponent())) {
    for (const GroupElement& s : set.elements()) {
      if (!set.Contains(group.Scale(s, l))) return false;
    }
  }
  return true;
}

AdjacencyMatrix BuildAdjacencyMatrix(const CayleyGraph& graph) {
  const FiniteAbelianGroup& group = graph.group();
  const auto n = static_cast<std::size_t>(group.order());
  AdjacencyMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    const GroupElement g = group.Unrank(i);
    for (const GroupElement& s : graph.connection_set().elements()) {
      a(i, group.Rank(group.Add(g, s))) = 1;
    }
  }
  return a;
}

}  // namespace fracrev
