#pragma once

// Empirical radial characteristic function of a quadrature dataset:
//   cf(b) = exp(b^2/2)/N * sum_j exp(i b x_j)
// with pointwise variance (exp(b^2) - |cf(b)|^2)/N, tabulated on a
// radial grid and evaluable anywhere on it by piecewise-cubic
// interpolation. Negative radii use the Hermitian extension
// cf(-b) = conj(cf(b)).

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "nqp/spats.hpp"

namespace nqp {

class RadialCfEstimate {
 public:
  RadialCfEstimate() = default;
  RadialCfEstimate(std::vector<double> radii, std::vector<std::complex<double>> values,
                   std::vector<double> variances, std::size_t source_count);

  const std::vector<double>& radii() const { return radii_; }
  const std::vector<std::complex<double>>& values() const { return values_; }
  const std::vector<double>& variances() const { return variances_; }
  std::size_t source_count() const { return source_count_; }
  double max_radius() const { return radii_.empty() ? 0.0 : radii_.back(); }

  /// Interpolated value; conjugated for b < 0. Exact at grid nodes.
  /// Throws std::out_of_range when |b| exceeds the grid.
  std::complex<double> value_at(double b) const;

  /// Real part only (even in b); the path used by the transforms.
  double real_at(double b) const;

  /// Imaginary part (odd in b); pure noise for phase-symmetric states.
  double imag_at(double b) const;

  /// Interpolated pointwise variance (even in b).
  double variance_at(double b) const;

  /// Diagnostic: max over grid nodes of |Im cf| / sigma. Should be O(1)
  /// for phase-randomized data; large values signal calibration issues.
  double max_imag_significance() const;

 private:
  std::vector<double> radii_;
  std::vector<std::complex<double>> values_;
  std::vector<double> variances_;
  std::vector<double> re_, im_;  // interpolation columns
  std::size_t source_count_ = 0;
};

/// Uniform radial grid 0, db, 2 db, ... covering [0, b_max].
std::vector<double> uniform_radii(double b_max, double db = 0.02);

/// Estimates the characteristic function of `data` on `radii` (strictly
/// increasing, starting at 0). Per-node sums use fixed-order pairwise
/// summation, so results do not depend on the thread count.
RadialCfEstimate estimate_cf(const QuadratureDataset& data, std::span<const double> radii,
                             unsigned threads = 1);

/// Interpolated evaluation (Hermitian-extended); free-function form.
std::complex<double> cf_at(const RadialCfEstimate& estimate, double b);

}  // namespace nqp
