#include "nqp/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nqp/bessel.hpp"
#include "nqp/charfunc.hpp"
#include "nqp/numeric.hpp"

namespace nqp {

SignificanceResult significance(const QuasiprobProfile& profile) {
  bool found = false;
  SignificanceResult result;
  for (std::size_t i = 0; i < profile.values.size(); ++i) {
    if (!(profile.sigmas[i] > 0.0)) continue;
    const double s = profile.values[i] / profile.sigmas[i];
    if (!found || s < result.s_min) {
      result.s_min = s;
      result.alpha_at_min = profile.alpha_radii[i];
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("significance: all sigmas are zero");
  return result;
}

WidthScanResult scan_width(const QuadratureDataset& data, std::span<const double> widths,
                           const ReconstructOptions& opts) {
  if (widths.empty()) throw std::invalid_argument("scan_width: empty width list");
  std::vector<NonclassicalityFilter> filters;
  filters.reserve(widths.size());
  double b_need = 0.0;
  for (double w : widths) {
    filters.push_back(NonclassicalityFilter::autocorrelation(w));
    b_need = std::max(b_need, filters.back().truncation_radius());
  }
  const RadialCfEstimate est =
      estimate_cf(data, uniform_radii(b_need, opts.cf_grid_step), opts.threads);

  WidthScanResult result;
  result.entries.resize(widths.size());
  const HankelOptions hopt{opts.nodes_per_unit};
  for (std::size_t i = 0; i < widths.size(); ++i) {
    const QuasiprobProfile prof = profile(est, filters[i], opts.alpha_grid, opts.threads, hopt);
    const SignificanceResult sig = significance(prof);
    result.entries[i] = {widths[i], sig.s_min, sig.alpha_at_min};
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < result.entries.size(); ++i) {
    const auto& e = result.entries[i];
    const auto& b = result.entries[best];
    if (e.s_min < b.s_min || (e.s_min == b.s_min && e.width < b.width)) best = i;
  }
  result.best_width = result.entries[best].width;
  result.best_s_min = result.entries[best].s_min;
  return result;
}

SystematicErrorBand rect_systematic_error(const SpatsParams& reference, double cutoff,
                                          std::span<const double> alpha_grid,
                                          const HankelOptions& opt) {
  reference.validate();
  if (!(cutoff > 0.0)) throw std::invalid_argument("rect_systematic_error: cutoff must be > 0");
  if (reference.nbar <= 0.0)
    throw std::invalid_argument(
        "rect_systematic_error: reference characteristic function does not decay at nbar = 0");

  // Find where the reference characteristic-function envelope drops
  // below 1e-12: solve m b^2 - log(1 + c b^2) = log(1e12) iteratively.
  const double m = reference.nbar * reference.eta;
  const double c = (1.0 + reference.nbar) * reference.eta;
  double b2 = 27.7 / m;
  for (int it = 0; it < 8; ++it) b2 = (27.7 + std::log1p(c * b2)) / m;
  const double b_end = std::max(cutoff + 1.0, std::sqrt(b2));

  const QuadratureRule rule = composite_gauss(b_end - cutoff, opt.nodes_per_unit);
  std::vector<double> cf_vals(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    cf_vals[i] = cf_theoretical(reference, cutoff + rule.nodes[i]);

  SystematicErrorBand band;
  band.alpha_radii.assign(alpha_grid.begin(), alpha_grid.end());
  band.bias.resize(alpha_grid.size());
  for (std::size_t k = 0; k < alpha_grid.size(); ++k) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double b = cutoff + rule.nodes[i];
      acc += rule.weights[i] * b * cf_vals[i] * bessel_j0(2.0 * b * alpha_grid[k]);
    }
    band.bias[k] = (2.0 / std::numbers::pi) * acc;
  }
  return band;
}

double efficiency_rescale_check(const SpatsParams& params, double width,
                                std::span<const double> alpha_grid, const HankelOptions& opt) {
  params.validate();
  if (!(width > 0.0)) throw std::invalid_argument("width must be > 0");
  const double root_eta = std::sqrt(params.eta);
  const SpatsParams lossless{params.nbar, 1.0};
  const NonclassicalityFilter lossy_filter = NonclassicalityFilter::autocorrelation(width);
  const NonclassicalityFilter rescaled_filter =
      NonclassicalityFilter::autocorrelation(root_eta * width);
  auto lossy_cf = [&](double b) { return cf_theoretical(params, b); };
  auto ideal_cf = [&](double b) { return cf_theoretical(lossless, b); };
  double worst = 0.0;
  for (double alpha : alpha_grid) {
    const double lhs = params.eta * hankel_p(lossy_cf, lossy_filter, alpha, opt);
    const double rhs = hankel_p(ideal_cf, rescaled_filter, alpha / root_eta, opt);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

WidthStrategy WidthStrategy::fixed(double width) {
  if (!(width > 0.0)) throw std::invalid_argument("width must be > 0");
  WidthStrategy s;
  s.is_scan = false;
  s.fixed_width = width;
  return s;
}

WidthStrategy WidthStrategy::scan(std::vector<double> widths) {
  if (widths.empty()) throw std::invalid_argument("scan width list is empty");
  WidthStrategy s;
  s.is_scan = true;
  s.scan_widths = std::move(widths);
  return s;
}

std::vector<EfficiencySweepRow> efficiency_sweep(double nbar, std::span<const double> etas,
                                                 std::size_t n,
                                                 std::span<const std::uint64_t> seeds,
                                                 const WidthStrategy& strategy,
                                                 const ReconstructOptions& opts) {
  if (etas.empty() || seeds.empty())
    throw std::invalid_argument("efficiency_sweep: empty eta or seed list");
  std::vector<EfficiencySweepRow> rows;
  rows.reserve(etas.size());
  const HankelOptions hopt{opts.nodes_per_unit};
  for (double eta : etas) {
    const SpatsParams params{nbar, eta};
    params.validate();
    EfficiencySweepRow row;
    row.eta = eta;
    row.wigner_origin_value = wigner_origin(params);
    for (std::uint64_t seed : seeds) {
      const QuadratureDataset data = sample_quadratures(params, n, seed, opts.threads);
      double s_min;
      if (strategy.is_scan) {
        s_min = scan_width(data, strategy.scan_widths, opts).best_s_min;
      } else {
        const NonclassicalityFilter filter =
            NonclassicalityFilter::autocorrelation(strategy.fixed_width);
        const RadialCfEstimate est = estimate_cf(
            data, uniform_radii(filter.truncation_radius(), opts.cf_grid_step), opts.threads);
        s_min = significance(profile(est, filter, opts.alpha_grid, opts.threads, hopt)).s_min;
      }
      row.per_seed_s_min.push_back(s_min);
    }
    double sum = 0.0;
    for (double s : row.per_seed_s_min) sum += s;
    row.mean_s_min = sum / static_cast<double>(row.per_seed_s_min.size());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace nqp
