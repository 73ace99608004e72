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

// Floating-point checks of the exact engine: the transfer matrix
// H(t) = exp(i t A) built from the spectral decomposition, an independent
// scaled-and-squared series for exp(i t A), and time-grid scans.

#ifndef FRACREV_ORACLE_HPP_
#define FRACREV_ORACLE_HPP_

#include <complex>
#include <optional>
#include <vector>

#include "fracrev/cayley.hpp"
#include "fracrev/fr_engine.hpp"

namespace fracrev {

using Complex = std::complex<double>;

inline constexpr double kVerifyTolerance = 1e-9;
inline constexpr double kScanTolerance = 1e-6;

/// Dense n x n transfer matrix, row-major in element-rank order.
class TransferMatrix {
 public:
  TransferMatrix(std::size_t n, double t) : n_(n), t_(t), entries_(n * n) {}

  std::size_t size() const { return n_; }
  double time() const { return t_; }
  Complex operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  /// max |H H^* - I| over all entries.
  double UnitarityDefect() const;

 private:
  std::size_t n_;
  double t_;
  std::vector<Complex> entries_;
};

/// Row 0 of H(t): H_{0,h} = (1/n) sum_z exp(i t lambda_z) conj(chi_z(h)).
std::vector<Complex> TransferRowZero(const CayleyGraph& graph, const Spectrum& spectrum, double t);

/// H(t) from row 0 via H_{g,h} = H_{0,h-g}.
TransferMatrix BuildTransferMatrix(const CayleyGraph& graph, double t);
TransferMatrix BuildTransferMatrix(const CayleyGraph& graph, const Spectrum& spectrum, double t);

struct VerificationReport {
  bool pass = false;
  double max_deviation = 0.0;
  double tolerance = kVerifyTolerance;
  double unitarity_defect = 0.0;
  bool permutation_ok = false;  // Q symmetric, Q^2 = I, no fixed points
};

/// Checks H(2 pi k / N) = alpha I + beta Q entrywise, Q(g, g + a) = 1.
VerificationReport VerifyFR(const CayleyGraph& graph, const FRWitness& witness,
                            double tolerance = kVerifyTolerance);

/// max |H_spectral(t) - expm(i t A)|, the latter by scaling and squaring
/// a truncated Taylor series on the dense adjacency matrix. Throws
/// Error(kDimensionGuard) when n > 256.
double DenseExpmCheck(const CayleyGraph& graph, double t);

/// Symmetric eigensolver on the dense adjacency matrix, ascending.
std::vector<double> AdjacencyEigenvalues(const CayleyGraph& graph);

/// Whether a row of H concentrates on the two entries (0, a) with both
/// nonzero: all other entries below tol, |H_00| and |H_0a| above tol.
bool RowShowsFR(const std::vector<Complex>& row0, std::size_t a_rank, double tol);

/// First j in [1, max_j] with FR at t = 2 pi j / denominator, scanning row
/// 0 of H(t) for each involution. Returns one entry per involution of the
/// group, in lexicographic order; empty optional when never observed.
std::vector<std::optional<Int>> ScanForFR(const CayleyGraph& graph, Int denominator, Int max_j,
                                          double tol = kScanTolerance);

}  // namespace fracrev

#endif  // FRACREV_ORACLE_HPP_
