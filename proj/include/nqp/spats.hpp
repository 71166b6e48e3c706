#pragma once

// Analytic model of a single-photon added thermal state (SPATS) seen
// through a detector of quantum efficiency eta, plus a seeded quadrature
// sampler. Quadratures use the vacuum-variance-1 convention: the vacuum
// quadrature characteristic function is exp(-k^2/2).

#include <cstddef>
#include <cstdint>
#include <vector>

namespace nqp {

struct SpatsParams {
  double nbar = 0.0;  // mean thermal photon number, >= 0
  double eta = 1.0;   // quantum efficiency, in (0, 1]

  /// Throws std::invalid_argument when outside the allowed ranges.
  void validate() const;
};

/// Radial characteristic function of the lossy SPATS at radius b:
///   [1 - (1+nbar) eta b^2] * exp(-nbar eta b^2).
/// Real by radial symmetry; equals 1 at b = 0.
double cf_theoretical(const SpatsParams& params, double b);

/// Glauber-Sudarshan P function of the lossy SPATS at radius |alpha|.
/// Implemented as (1/eta) P_ideal(|alpha|/sqrt(eta)); the ideal-state
/// formula is singular at nbar = 0, which is rejected.
double p_theoretical(const SpatsParams& params, double alpha_abs);

/// Wigner function at the origin. Closed form
///   (1/pi) (1/2 - eta) / (nbar eta + 1/2)^2,
/// so the sign is that of (1/2 - eta) for every nbar.
double wigner_origin(const SpatsParams& params);

/// Probability density of a single homodyne quadrature sample.
double quadrature_pdf(const SpatsParams& params, double x);

/// Cumulative distribution matching quadrature_pdf.
double quadrature_cdf(const SpatsParams& params, double x);

/// Mean of x^2 under quadrature_pdf: 1 + 2 eta (2 nbar + 1).
double quadrature_second_moment(const SpatsParams& params);

struct QuadratureDataset {
  std::vector<double> samples;
  SpatsParams params;
  std::uint64_t seed = 0;

  std::size_t count() const { return samples.size(); }
};

/// Draws n independent samples from quadrature_pdf.
///
/// Deterministic given (params, n, seed) and independent of the thread
/// count: samples are produced in fixed chunks of 65536, chunk i using
/// its own mt19937_64 engine seeded with seed + i. Within a chunk each
/// sample consumes uniforms in a fixed documented order (see README).
QuadratureDataset sample_quadratures(const SpatsParams& params, std::size_t n, std::uint64_t seed,
                                     unsigned threads = 1);

}  // namespace nqp
