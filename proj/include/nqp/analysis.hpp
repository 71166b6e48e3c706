#pragma once

// Significance of quasiprobability negativities, filter-width
// optimization, the systematic-error band of rectangular filtering, and
// the efficiency-rescaling identity.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nqp/quasiprob.hpp"
#include "nqp/spats.hpp"

namespace nqp {

struct SignificanceResult {
  double s_min = 0.0;        // most negative value/sigma over the grid
  double alpha_at_min = 0.0;
};

/// Minimum of value/sigma over grid points with sigma > 0 and its
/// location. Throws std::invalid_argument when every sigma is zero.
SignificanceResult significance(const QuasiprobProfile& profile);

struct ReconstructOptions {
  std::vector<double> alpha_grid = uniform_alpha_grid();
  double cf_grid_step = 0.02;
  int nodes_per_unit = 32;
  unsigned threads = 1;
};

struct WidthScanEntry {
  double width = 0.0;
  double s_min = 0.0;
  double alpha_at_min = 0.0;
};

struct WidthScanResult {
  std::vector<WidthScanEntry> entries;
  double best_width = 0.0;   // width with the most negative s_min; ties
                             // break toward the smaller width
  double best_s_min = 0.0;
};

/// Reconstructs the quasiprobability of `data` under the autocorrelation
/// filter at each width and records the minimum significance. The
/// characteristic function is estimated once on a grid covering the
/// widest filter support.
WidthScanResult scan_width(const QuadratureDataset& data, std::span<const double> widths,
                           const ReconstructOptions& opts = {});

struct SystematicErrorBand {
  std::vector<double> alpha_radii;
  std::vector<double> bias;  // transform of the neglected tail of the
                             // reference characteristic function
};

/// A-priori systematic error of rectangular filtering at the given
/// cutoff, computed from the reference (theoretical) characteristic
/// function of `reference`. Requires nbar > 0 so the tail decays.
SystematicErrorBand rect_systematic_error(const SpatsParams& reference, double cutoff,
                                          std::span<const double> alpha_grid,
                                          const HankelOptions& opt = {});

/// Max deviation over the grid between eta * P(alpha) of the lossy state
/// filtered at width w and P(alpha/sqrt(eta)) of the lossless state
/// filtered at width sqrt(eta) * w. Identically zero in exact
/// arithmetic.
double efficiency_rescale_check(const SpatsParams& params, double width,
                                std::span<const double> alpha_grid, const HankelOptions& opt = {});

struct WidthStrategy {
  static WidthStrategy fixed(double width);
  static WidthStrategy scan(std::vector<double> widths);

  bool is_scan = false;
  double fixed_width = 1.4;
  std::vector<double> scan_widths;
};

struct EfficiencySweepRow {
  double eta = 0.0;
  double mean_s_min = 0.0;
  double wigner_origin_value = 0.0;
  std::vector<double> per_seed_s_min;
};

/// For each eta simulates `n`-sample datasets at the given seeds,
/// reconstructs with the chosen width strategy, and reports the mean
/// minimum significance together with the closed-form Wigner value at
/// the origin.
std::vector<EfficiencySweepRow> efficiency_sweep(double nbar, std::span<const double> etas,
                                                 std::size_t n,
                                                 std::span<const std::uint64_t> seeds,
                                                 const WidthStrategy& strategy,
                                                 const ReconstructOptions& opts = {});

}  // namespace nqp
