// Acceptance suite for the reconstruction pipeline. Each criterion
// prints one PASS/FAIL line; the process exits nonzero if any fail.
//
// Statistical criteria run over ten documented seeds and check bands
// wide enough for seed-to-seed variation at the stated sample sizes.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "nqp/analysis.hpp"
#include "nqp/bessel.hpp"
#include "nqp/charfunc.hpp"
#include "nqp/filters.hpp"
#include "nqp/quasiprob.hpp"
#include "nqp/spats.hpp"

using namespace nqp;

namespace {

const std::vector<std::uint64_t> kSeeds = {101, 211, 307, 401, 503, 601, 701, 809, 907, 1009};

int g_failures = 0;

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int criterion, bool pass, const std::string& detail, double elapsed,
            double budget_s) {
  const bool in_budget = elapsed < budget_s;
  if (!pass || !in_budget) ++g_failures;
  std::printf("criterion %d: %s  %s  [%.1fs of %.0fs budget]\n", criterion,
              (pass && in_budget) ? "PASS" : "FAIL", detail.c_str(), elapsed, budget_s);
  std::fflush(stdout);
}

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// J0 via the integral representation, trapezoidal on the periodic
// integrand (independent of the library's rational approximation).
double j0_reference(double x) {
  const long double xl = std::abs(static_cast<long double>(x));
  long double acc = 0.0L;
  const int n = 4096;
  for (int k = 0; k < n; ++k)
    acc += std::cos(xl * std::sin(std::numbers::pi_v<long double> * k / n));
  return static_cast<double>(acc / n);
}

void criterion1() {
  Stopwatch timer;
  const SpatsParams params{0.49, 0.62};
  const NonclassicalityFilter filter = build_autocorrelation_filter(1.4);
  const std::vector<double> alpha_grid = uniform_alpha_grid(3.0, 61);
  std::vector<double> s_mins;
  bool at_origin = true;
  for (std::uint64_t seed : kSeeds) {
    const QuadratureDataset data = sample_quadratures(params, 100000, seed);
    const RadialCfEstimate est = estimate_cf(data, uniform_radii(filter.truncation_radius()));
    const SignificanceResult sig = significance(profile(est, filter, alpha_grid));
    s_mins.push_back(sig.s_min);
    if (sig.alpha_at_min != 0.0) at_origin = false;
  }
  const double m = mean(s_mins);
  const bool pass = m >= -25.0 && m <= -8.0 && at_origin;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "headline negativity: mean S_min = %.2f over %zu seeds (band [-25,-8]), "
                "negativity at |alpha| = 0: %s",
                m, kSeeds.size(), at_origin ? "yes" : "no");
  report(1, pass, buf, timer.seconds(), 300.0);
}

void criterion2() {
  Stopwatch timer;
  const SpatsParams params{1.11, 0.60};
  std::vector<double> widths;
  for (int i = 0; i <= 12; ++i) widths.push_back(0.8 + 0.1 * i);
  ReconstructOptions opts;
  std::vector<double> best_widths, best_s;
  for (std::uint64_t seed : kSeeds) {
    const QuadratureDataset data = sample_quadratures(params, 100000, seed);
    const WidthScanResult scan = scan_width(data, widths, opts);
    best_widths.push_back(scan.best_width);
    best_s.push_back(scan.best_s_min);
  }
  const double mw = mean(best_widths);
  const double ms = mean(best_s);
  const bool pass = mw >= 1.1 && mw <= 1.5 && ms >= -12.0 && ms <= -4.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "width optimization: mean best width = %.2f (band [1.1,1.5]), mean S_min = %.2f "
                "(band [-12,-4])",
                mw, ms);
  report(2, pass, buf, timer.seconds(), 600.0);
}

void criterion3() {
  Stopwatch timer;
  const SpatsParams params{0.49, 0.62};
  const std::vector<double> alpha_grid = uniform_alpha_grid(3.0, 61);
  const NonclassicalityFilter rect_far = NonclassicalityFilter::rectangular(3.8);
  const NonclassicalityFilter rect_near = NonclassicalityFilter::rectangular(2.2);
  // The state's negativity sits at the origin, which is where its
  // significance is quoted. The raw grid minimum is reported too: under
  // a hard cutoff it lands on the first J0 node (|alpha| ~ 0.32), where
  // the dominant noise mode cancels, not on the physical feature.
  std::vector<double> abs_s_origin, grid_min, abs_p0_near;
  for (std::uint64_t seed : kSeeds) {
    const QuadratureDataset data = sample_quadratures(params, 100000, seed);
    const RadialCfEstimate est = estimate_cf(data, uniform_radii(3.8));
    const QuasiprobProfile prof = profile(est, rect_far, alpha_grid);
    abs_s_origin.push_back(std::abs(prof.values[0] / prof.sigmas[0]));
    grid_min.push_back(significance(prof).s_min);
    abs_p0_near.push_back(std::abs(hankel_p(est, rect_near, 0.0)));
  }
  const SystematicErrorBand band = rect_systematic_error(params, 2.2, alpha_grid);
  double max_bias = 0.0;
  for (double b : band.bias) max_bias = std::max(max_bias, std::abs(b));
  const double ms = mean(abs_s_origin);
  const double mp = mean(abs_p0_near);
  const bool pass = ms < 3.0 && max_bias > mp;
  char buf[240];
  std::snprintf(buf, sizeof(buf),
                "rectangular-filter failure: cutoff 3.8 mean |S(0)| = %.2f (< 3; grid-min mean "
                "%.2f), cutoff 2.2 max |bias| = %.2f > |P(0)| = %.2f: %s",
                ms, mean(grid_min), max_bias, mp, max_bias > mp ? "yes" : "no");
  report(3, pass, buf, timer.seconds(), 600.0);
}

void criterion4() {
  Stopwatch timer;
  const double nbar = 0.49;
  const std::vector<double> etas{0.3, 0.4, 0.5, 0.62};
  std::vector<double> widths;
  for (int i = 0; i <= 18; ++i) widths.push_back(0.6 + 0.1 * i);
  const std::vector<EfficiencySweepRow> rows =
      efficiency_sweep(nbar, etas, 100000, kSeeds, WidthStrategy::scan(widths));
  bool sig_ok = true, wigner_ok = true;
  std::string detail = "efficiency threshold:";
  for (const auto& row : rows) {
    char part[64];
    std::snprintf(part, sizeof(part), " eta=%.2f S=%.1f W0=%.3f;", row.eta, row.mean_s_min,
                  row.wigner_origin_value);
    detail += part;
    if (row.eta >= 0.4 && !(row.mean_s_min <= -3.0)) sig_ok = false;
    if (row.eta < 0.5 && !(row.wigner_origin_value > 0.0)) wigner_ok = false;
    if (row.eta == 0.5 && !(std::abs(row.wigner_origin_value) <= 1e-12)) wigner_ok = false;
    if (row.eta > 0.5 && !(row.wigner_origin_value < 0.0)) wigner_ok = false;
  }
  report(4, sig_ok && wigner_ok, detail, timer.seconds(), 900.0);
}

void criterion5() {
  Stopwatch timer;
  bool pass = true;
  std::string detail = "property suite:";

  // filter axioms at four widths
  bool axioms_ok = true;
  double fourier_margin = 1.0;
  for (double w : {0.5, 1.0, 1.4, 2.0}) {
    const AxiomReport rep = verify_filter_axioms(build_autocorrelation_filter(w));
    if (!rep.all_pass()) axioms_ok = false;
    fourier_margin = std::min(fourier_margin, rep.axioms[1].margin - 1e-8);
  }
  pass = pass && axioms_ok && fourier_margin >= -1e-8;
  detail += axioms_ok ? " axioms ok;" : " axioms FAILED;";

  // unit zero-lag value and normalization integral
  const double omega0 = build_autocorrelation_filter(1.0).value(0.0);
  const double norm = omega1_normalization();
  const bool scalars_ok = std::abs(omega0 - 1.0) <= 1e-8 && std::abs(norm - 1.96870) <= 1e-5;
  pass = pass && scalars_ok;
  char part[96];
  std::snprintf(part, sizeof(part), " Omega1(0)-1 = %.1e, Norm = %.6f;", omega0 - 1.0, norm);
  detail += part;

  // unit integral of the filtered quasiprobability (theoretical input)
  {
    const SpatsParams p{0.49, 0.62};
    const NonclassicalityFilter filter = build_autocorrelation_filter(1.4);
    auto cf = [&](double b) { return cf_theoretical(p, b); };
    const int n = 400;  // Simpson on [0, 8]
    const double h = 8.0 / n;
    double integral = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double r = i * h;
      const double f = 2.0 * std::numbers::pi * r * hankel_p(cf, filter, r);
      integral += f * ((i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0));
    }
    integral *= h / 3.0;
    pass = pass && std::abs(integral - 1.0) <= 1e-3;
    std::snprintf(part, sizeof(part), " normalization = %.5f;", integral);
    detail += part;
  }

  // classical thermal inputs stay nonnegative
  {
    double worst = 0.0;
    for (double nbar : {0.1, 1.0, 5.0}) {
      auto cf = [nbar](double b) { return std::exp(-nbar * b * b); };
      for (double w : {1.0, 1.4, 2.0}) {
        const NonclassicalityFilter filter = build_autocorrelation_filter(w);
        for (double alpha : uniform_alpha_grid(3.0, 61))
          worst = std::min(worst, hankel_p(cf, filter, alpha));
      }
    }
    pass = pass && worst >= -1e-8;
    std::snprintf(part, sizeof(part), " thermal min = %.1e;", worst);
    detail += part;
  }

  // loss-rescaling identity on the 3x3 grid
  {
    double worst = 0.0;
    const std::vector<double> grid = uniform_alpha_grid(3.0, 61);
    for (double eta : {0.36, 0.62, 1.0})
      for (double w : {1.0, 1.4, 2.0})
        worst = std::max(worst, efficiency_rescale_check({0.49, eta}, w, grid));
    pass = pass && worst < 1e-6;
    std::snprintf(part, sizeof(part), " rescale dev = %.1e;", worst);
    detail += part;
  }

  // Bessel accuracy against reference values
  {
    double worst = std::abs(bessel_j0(2.404825557695773));
    const double handbook[][2] = {{1.0, 0.76519768655796655},
                                  {2.0, 0.22389077914123567},
                                  {5.0, -0.17759677131433830},
                                  {10.0, -0.24593576445134833}};
    for (const auto& [x, ref] : handbook) worst = std::max(worst, std::abs(bessel_j0(x) - ref));
    for (int i = 0; i <= 500; ++i) {
      const double x = i * 1.0;
      worst = std::max(worst, std::abs(bessel_j0(x) - j0_reference(x)));
    }
    pass = pass && worst < 1e-10;
    std::snprintf(part, sizeof(part), " J0 err = %.1e", worst);
    detail += part;
  }

  report(5, pass, detail, timer.seconds(), 120.0);
}

void criterion6() {
  Stopwatch timer;
  const SpatsParams params{0.49, 0.62};
  const NonclassicalityFilter filter = build_autocorrelation_filter(1.4);
  const std::size_t n = 10000;
  const int m = 200;
  const std::vector<double> probe{0.5, 1.5, 2.5};

  std::vector<std::vector<std::complex<double>>> cf_vals(probe.size());
  std::vector<double> cf_formula(probe.size(), 0.0);
  std::vector<double> p_re, p_im;
  double p_formula = 0.0;

  std::vector<double> radii = uniform_radii(filter.truncation_radius());
  for (int k = 0; k < m; ++k) {
    const QuadratureDataset data = sample_quadratures(params, n, 100000 + 1000 * k);
    const RadialCfEstimate est = estimate_cf(data, radii);
    for (std::size_t j = 0; j < probe.size(); ++j) {
      cf_vals[j].push_back(est.value_at(probe[j]));
      cf_formula[j] += est.variance_at(probe[j]);
    }
    const double p0 = hankel_p(est, filter, 0.0);
    p_re.push_back(p0);
    p_im.push_back(hankel_p_imag(est, filter, 0.0));
    p_formula += variance_p(est, filter, 0.0, p0);
  }
  p_formula /= m;

  bool pass = true;
  std::string detail = "estimator validity (200 datasets):";
  char part[96];
  for (std::size_t j = 0; j < probe.size(); ++j) {
    cf_formula[j] /= m;
    std::complex<double> mu{0.0, 0.0};
    for (const auto& v : cf_vals[j]) mu += v;
    mu /= static_cast<double>(m);
    double scatter = 0.0;
    for (const auto& v : cf_vals[j]) scatter += std::norm(v - mu);
    scatter /= (m - 1);
    const double ratio = scatter / cf_formula[j];
    if (!(ratio > 0.8 && ratio < 1.2)) pass = false;
    std::snprintf(part, sizeof(part), " cf(b=%.1f) ratio = %.2f;", probe[j], ratio);
    detail += part;
  }
  {
    const double mr = mean(p_re), mi = mean(p_im);
    double scatter = 0.0;
    for (int k = 0; k < m; ++k)
      scatter += (p_re[k] - mr) * (p_re[k] - mr) + (p_im[k] - mi) * (p_im[k] - mi);
    scatter /= (m - 1);
    const double ratio = scatter / p_formula;
    if (!(ratio > 0.8 && ratio < 1.2)) pass = false;
    std::snprintf(part, sizeof(part), " P(0) ratio = %.2f", ratio);
    detail += part;
  }
  report(6, pass, detail, timer.seconds(), 900.0);
}

}  // namespace

int main() {
  criterion5();  // fast, no simulation
  criterion1();
  criterion3();
  criterion6();
  criterion2();
  criterion4();
  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", g_failures);
  }
  return g_failures == 0 ? 0 : 1;
}
