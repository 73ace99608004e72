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

#include "fracrev/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "fracrev/error.hpp"

namespace fracrev {

namespace {

constexpr std::size_t kExpmMaxDimension = 256;
constexpr int kSeriesTerms = 30;

// Character table chi_z(h) as exponents of omega_e, [rank z][rank h].
class CharacterTable {
 public:
  explicit CharacterTable(const FiniteAbelianGroup& group)
      : n_(static_cast<std::size_t>(group.order())), exponents_(n_ * n_) {
    const Int e = group.exponent();
    roots_.resize(static_cast<std::size_t>(e));
    for (Int k = 0; k < e; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(e);
      roots_[static_cast<std::size_t>(k)] = {std::cos(angle), -std::sin(angle)};  // conjugated
    }
    const auto elements = group.Elements();
    for (std::size_t z = 0; z < n_; ++z) {
      for (std::size_t h = 0; h < n_; ++h) {
        exponents_[z * n_ + h] = static_cast<std::uint32_t>(CharacterExponent(group, elements[z], elements[h]));
      }
    }
  }

  // (1/n) sum_z phases[z] conj(chi_z(h)) for every h.
  std::vector<Complex> InverseTransform(const std::vector<Complex>& phases) const {
    std::vector<Complex> row(n_, Complex{0.0, 0.0});
    for (std::size_t z = 0; z < n_; ++z) {
      const Complex p = phases[z];
      const std::uint32_t* ex = &exponents_[z * n_];
      for (std::size_t h = 0; h < n_; ++h) row[h] += p * roots_[ex[h]];
    }
    const double scale = 1.0 / static_cast<double>(n_);
    for (Complex& x : row) x *= scale;
    return row;
  }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> exponents_;
  std::vector<Complex> roots_;
};

std::vector<Complex> Phases(const std::vector<Complex>& lambda, double t) {
  std::vector<Complex> phases(lambda.size());
  for (std::size_t z = 0; z < lambda.size(); ++z) {
    // Eigenvalues are real; the imaginary part is rounding noise.
    const double x = t * lambda[z].real();
    phases[z] = {std::cos(x), std::sin(x)};
  }
  return phases;
}

}  // namespace

double TransferMatrix::UnitarityDefect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      Complex acc{0.0, 0.0};
      for (std::size_t k = 0; k < n_; ++k) acc += (*this)(i, k) * std::conj((*this)(j, k));
      if (i == j) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

std::vector<Complex> TransferRowZero(const CayleyGraph& graph, const Spectrum& spectrum, double t) {
  return CharacterTable(graph.group()).InverseTransform(Phases(spectrum.Approximate(), t));
}

TransferMatrix BuildTransferMatrix(const CayleyGraph& graph, double t) {
  return BuildTransferMatrix(graph, ComputeSpectrum(graph), t);
}

TransferMatrix BuildTransferMatrix(const CayleyGraph& graph, const Spectrum& spectrum, double t) {
  const FiniteAbelianGroup& group = graph.group();
  const auto n = static_cast<std::size_t>(group.order());
  const auto row0 = TransferRowZero(graph, spectrum, t);
  const auto elements = group.Elements();
  TransferMatrix h(n, t);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      h(i, j) = row0[group.Rank(group.Subtract(elements[j], elements[i]))];
    }
  }
  return h;
}

VerificationReport VerifyFR(const CayleyGraph& graph, const FRWitness& witness, double tolerance) {
  const FiniteAbelianGroup& group = graph.group();
  VerificationReport report;
  report.tolerance = tolerance;
  if (!group.Contains(witness.a) || witness.modulus <= 0) {
    report.max_deviation = std::numeric_limits<double>::infinity();
    return report;
  }
  const auto n = static_cast<std::size_t>(group.order());
  const auto elements = group.Elements();

  // Q(g, g + a) = 1.
  std::vector<std::size_t> partner(n);
  for (std::size_t i = 0; i < n; ++i) partner[i] = group.Rank(group.Add(elements[i], witness.a));
  report.permutation_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (partner[i] == i || partner[partner[i]] != i) report.permutation_ok = false;
  }

  const TransferMatrix h = BuildTransferMatrix(graph, witness.Time());
  const Complex alpha = witness.Alpha();
  const Complex beta = witness.Beta();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex expected{0.0, 0.0};
      if (i == j) expected += alpha;
      if (partner[i] == j) expected += beta;
      worst = std::max(worst, std::abs(h(i, j) - expected));
    }
  }
  report.max_deviation = worst;
  report.unitarity_defect = h.UnitarityDefect();
  report.pass = report.permutation_ok && worst < tolerance;
  return report;
}

double DenseExpmCheck(const CayleyGraph& graph, double t) {
  const auto n = static_cast<std::size_t>(graph.order());
  if (n > kExpmMaxDimension) {
    throw Error(ErrorCode::kDimensionGuard,
                "dense expm check is limited to n <= " + std::to_string(kExpmMaxDimension));
  }
  const AdjacencyMatrix a = BuildAdjacencyMatrix(graph);
  const auto dim = static_cast<Eigen::Index>(n);

  // ||tA||_1 = |t| d for a d-regular graph; scale below 1/2.
  const double norm = std::abs(t) * static_cast<double>(graph.degree());
  int squarings = 0;
  while (norm / std::ldexp(1.0, squarings) >= 0.5) ++squarings;
  const double scale = t / std::ldexp(1.0, squarings);

  Eigen::MatrixXcd x(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      x(i, j) = Complex(0.0, scale * a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    }
  }
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(dim, dim);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(dim, dim);
  for (int j = 1; j <= kSeriesTerms; ++j) {
    term = (term * x) / static_cast<double>(j);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;

  const TransferMatrix h = BuildTransferMatrix(graph, t);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      worst = std::max(worst, std::abs(h(i, j) - result(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))));
    }
  }
  return worst;
}

std::vector<double> AdjacencyEigenvalues(const CayleyGraph& graph) {
  const AdjacencyMatrix a = BuildAdjacencyMatrix(graph);
  const auto dim = static_cast<Eigen::Index>(a.size());
  Eigen::MatrixXd m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

bool RowShowsFR(const std::vector<Complex>& row0, std::size_t a_rank, double tol) {
  for (std::size_t h = 1; h < row0.size(); ++h) {
    if (h != a_rank && std::abs(row0[h]) >= tol) return false;
  }
  return std::abs(row0[0]) > tol && std::abs(row0[a_rank]) > tol;
}

std::vector<std::optional<Int>> ScanForFR(const CayleyGraph& graph, Int denominator, Int max_j, double tol) {
  const FiniteAbelianGroup& group = graph.group();
  const auto involutions = Involutions(group);
  std::vector<std::optional<Int>> found(involutions.size());
  if (involutions.empty()) return found;

  const CharacterTable table(group);
  const auto lambda = ComputeSpectrum(graph).Approximate();
  std::vector<std::size_t> ranks;
  for (const GroupElement& a : involutions) ranks.push_back(group.Rank(a));

  for (Int j = 1; j <= max_j; ++j) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(denominator);
    const auto row0 = table.InverseTransform(Phases(lambda, t));
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      if (!found[i] && RowShowsFR(row0, ranks[i], tol)) found[i] = j;
    }
  }
  return found;
}

}  // namespace fracrev
