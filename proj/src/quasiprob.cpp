#include "nqp/quasiprob.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nqp/bessel.hpp"
#include "nqp/errors.hpp"
#include "nqp/numeric.hpp"

namespace nqp {

namespace {

constexpr double kTwoOverPi = 2.0 / std::numbers::pi;
constexpr double kFourOverPiSq = 4.0 / (std::numbers::pi * std::numbers::pi);

struct HankelPlan {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> filt;  // filter value at each node
  double b_max = 0.0;
};

HankelPlan make_plan(const NonclassicalityFilter& filter, const HankelOptions& opt) {
  HankelPlan plan;
  plan.b_max = filter.truncation_radius();
  QuadratureRule rule = composite_gauss(plan.b_max, opt.nodes_per_unit);
  plan.nodes = std::move(rule.nodes);
  plan.weights = std::move(rule.weights);
  plan.filt.resize(plan.nodes.size());
  for (std::size_t i = 0; i < plan.nodes.size(); ++i)
    plan.filt[i] = filter.value(plan.nodes[i]);
  return plan;
}

void check_coverage(const RadialCfEstimate& cf, const HankelPlan& plan) {
  if (cf.max_radius() + 1e-12 < plan.b_max)
    throw std::invalid_argument(
        "characteristic-function grid is shorter than the filter support");
}

double transform(const HankelPlan& plan, const std::vector<double>& cf_nodes, double alpha) {
  double acc = 0.0;
  for (std::size_t i = 0; i < plan.nodes.size(); ++i) {
    const double b = plan.nodes[i];
    acc += plan.weights[i] * b * plan.filt[i] * cf_nodes[i] * bessel_j0(2.0 * b * alpha);
  }
  return kTwoOverPi * acc;
}

// Variance kernel K_ij = Re cf(b_i - b_j) * exp(b_i b_j); symmetric by
// the Hermitian extension.
std::vector<double> make_kernel(const RadialCfEstimate& cf, const HankelPlan& plan) {
  const std::size_t n = plan.nodes.size();
  std::vector<double> kernel(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double v =
          cf.real_at(plan.nodes[i] - plan.nodes[j]) * std::exp(plan.nodes[i] * plan.nodes[j]);
      kernel[i * n + j] = v;
      kernel[j * n + i] = v;
    }
  }
  return kernel;
}

// One variance evaluation from the precomputed kernel. u_i collects
// weight * b * filter * J0; the double integral is the quadratic form.
double variance_from_kernel(const HankelPlan& plan, const std::vector<double>& kernel,
                            std::size_t source_count, double alpha, double p_value) {
  const std::size_t n = plan.nodes.size();
  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i)
    u[i] = plan.weights[i] * plan.nodes[i] * plan.filt[i] * bessel_j0(2.0 * plan.nodes[i] * alpha);
  double form = 0.0;
  double form_abs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = kernel.data() + i * n;
    double acc = 0.0;
    double acc_abs = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double t = u[j] * row[j];
      acc += t;
      acc_abs += std::abs(t);
    }
    form += u[i] * acc;
    form_abs += std::abs(u[i]) * acc_abs;
  }
  const double count = static_cast<double>(source_count);
  const double raw = (kFourOverPiSq * form - p_value * p_value) / count;
  if (raw >= 0.0) return raw;
  const double tolerance = 1e-12 * (kFourOverPiSq * form_abs + p_value * p_value) / count;
  if (raw >= -tolerance) return 0.0;
  throw numeric_error("variance of the quasiprobability is negative beyond roundoff");
}

std::vector<double> cf_nodes_real(const RadialCfEstimate& cf, const HankelPlan& plan) {
  std::vector<double> vals(plan.nodes.size());
  for (std::size_t i = 0; i < plan.nodes.size(); ++i) vals[i] = cf.real_at(plan.nodes[i]);
  return vals;
}

}  // namespace

std::vector<double> QuasiprobProfile::significances() const {
  std::vector<double> s(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    s[i] = sigmas[i] > 0.0 ? values[i] / sigmas[i] : 0.0;
  return s;
}

std::vector<double> uniform_alpha_grid(double alpha_max, std::size_t steps) {
  if (!(alpha_max > 0.0) || steps < 1) throw std::invalid_argument("bad alpha grid");
  std::vector<double> grid(steps);
  if (steps == 1) {
    grid[0] = 0.0;
    return grid;
  }
  for (std::size_t i = 0; i < steps; ++i)
    grid[i] = alpha_max * static_cast<double>(i) / static_cast<double>(steps - 1);
  return grid;
}

double hankel_p(const std::function<double(double)>& cf_real, const NonclassicalityFilter& filter,
                double alpha_abs, const HankelOptions& opt) {
  const HankelPlan plan = make_plan(filter, opt);
  std::vector<double> vals(plan.nodes.size());
  for (std::size_t i = 0; i < plan.nodes.size(); ++i) vals[i] = cf_real(plan.nodes[i]);
  return transform(plan, vals, alpha_abs);
}

double hankel_p(const RadialCfEstimate& cf, const NonclassicalityFilter& filter, double alpha_abs,
                const HankelOptions& opt) {
  const HankelPlan plan = make_plan(filter, opt);
  check_coverage(cf, plan);
  return transform(plan, cf_nodes_real(cf, plan), alpha_abs);
}

double hankel_p_imag(const RadialCfEstimate& cf, const NonclassicalityFilter& filter,
                     double alpha_abs, const HankelOptions& opt) {
  const HankelPlan plan = make_plan(filter, opt);
  check_coverage(cf, plan);
  std::vector<double> vals(plan.nodes.size());
  for (std::size_t i = 0; i < plan.nodes.size(); ++i) vals[i] = cf.imag_at(plan.nodes[i]);
  return transform(plan, vals, alpha_abs);
}

double variance_p(const RadialCfEstimate& cf, const NonclassicalityFilter& filter,
                  double alpha_abs, double p_value, const HankelOptions& opt) {
  const HankelPlan plan = make_plan(filter, opt);
  check_coverage(cf, plan);
  const std::vector<double> kernel = make_kernel(cf, plan);
  return variance_from_kernel(plan, kernel, cf.source_count(), alpha_abs, p_value);
}

QuasiprobProfile profile(const RadialCfEstimate& cf, const NonclassicalityFilter& filter,
                         std::span<const double> alpha_grid, unsigned threads,
                         const HankelOptions& opt) {
  if (alpha_grid.empty()) throw std::invalid_argument("profile: empty alpha grid");
  const HankelPlan plan = make_plan(filter, opt);
  check_coverage(cf, plan);
  const std::vector<double> cf_nodes = cf_nodes_real(cf, plan);
  const std::vector<double> kernel = make_kernel(cf, plan);

  QuasiprobProfile prof;
  prof.alpha_radii.assign(alpha_grid.begin(), alpha_grid.end());
  prof.values.resize(alpha_grid.size());
  prof.sigmas.resize(alpha_grid.size());
  prof.filter_descriptor = filter.describe();
  prof.source_count = cf.source_count();

  parallel_for(alpha_grid.size(), threads, [&](std::size_t k) {
    const double alpha = alpha_grid[k];
    const double p = transform(plan, cf_nodes, alpha);
    const double var = variance_from_kernel(plan, kernel, cf.source_count(), alpha, p);
    prof.values[k] = p;
    prof.sigmas[k] = std::sqrt(var);
  });
  return prof;
}

}  // namespace nqp
