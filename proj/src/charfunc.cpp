#include "nqp/charfunc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nqp/numeric.hpp"

namespace nqp {

namespace {

void check_radii(std::span<const double> radii) {
  if (radii.empty()) throw std::invalid_argument("radial grid is empty");
  if (radii.front() != 0.0) throw std::invalid_argument("radial grid must start at 0");
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (!(radii[i] > radii[i - 1]))
      throw std::invalid_argument("radial grid must be strictly increasing");
}

}  // namespace

RadialCfEstimate::RadialCfEstimate(std::vector<double> radii,
                                   std::vector<std::complex<double>> values,
                                   std::vector<double> variances, std::size_t source_count)
    : radii_(std::move(radii)),
      values_(std::move(values)),
      variances_(std::move(variances)),
      source_count_(source_count) {
  check_radii(radii_);
  if (values_.size() != radii_.size() || variances_.size() != radii_.size())
    throw std::invalid_argument("estimate columns must match the grid size");
  if (source_count_ == 0) throw std::invalid_argument("source_count must be >= 1");
  re_.resize(values_.size());
  im_.resize(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    re_[i] = values_[i].real();
    im_[i] = values_[i].imag();
  }
}

std::complex<double> RadialCfEstimate::value_at(double b) const {
  const double r = std::abs(b);
  const double re = cubic_interp(radii_, re_, r);
  const double im = cubic_interp(radii_, im_, r);
  return {re, b < 0.0 ? -im : im};
}

double RadialCfEstimate::real_at(double b) const { return cubic_interp(radii_, re_, std::abs(b)); }

double RadialCfEstimate::imag_at(double b) const {
  const double im = cubic_interp(radii_, im_, std::abs(b));
  return b < 0.0 ? -im : im;
}

double RadialCfEstimate::variance_at(double b) const {
  return cubic_interp(radii_, variances_, std::abs(b));
}

double RadialCfEstimate::max_imag_significance() const {
  double worst = 0.0;
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (variances_[i] <= 0.0) continue;
    worst = std::max(worst, std::abs(values_[i].imag()) / std::sqrt(variances_[i]));
  }
  return worst;
}

std::vector<double> uniform_radii(double b_max, double db) {
  if (!(b_max > 0.0) || !(db > 0.0)) throw std::invalid_argument("uniform_radii: bad arguments");
  std::size_t steps = static_cast<std::size_t>(std::ceil(b_max / db - 1e-9));
  while (static_cast<double>(steps) * db < b_max) ++steps;
  std::vector<double> radii(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) radii[i] = static_cast<double>(i) * db;
  return radii;
}

RadialCfEstimate estimate_cf(const QuadratureDataset& data, std::span<const double> radii,
                             unsigned threads) {
  if (data.samples.empty()) throw std::invalid_argument("estimate_cf: empty dataset");
  check_radii(radii);
  const std::size_t n = data.samples.size();
  const std::size_t m = radii.size();
  std::vector<std::complex<double>> values(m);
  std::vector<double> variances(m);
  const double* xs = data.samples.data();
  parallel_for(m, threads, [&](std::size_t k) {
    const double b = radii[k];
    if (b == 0.0) {
      values[k] = {1.0, 0.0};
      variances[k] = 0.0;
      return;
    }
    const std::complex<double> sum = pairwise_sum<std::complex<double>>(
        0, n, [&](std::size_t j) {
          const double p = b * xs[j];
          return std::complex<double>(std::cos(p), std::sin(p));
        });
    const double amp = std::exp(0.5 * b * b);
    const std::complex<double> value = sum * (amp / static_cast<double>(n));
    // |mean exp(i b x)| <= 1, so the raw variance is nonnegative up to
    // roundoff; clamp the roundoff.
    const double raw = (std::exp(b * b) - std::norm(value)) / static_cast<double>(n);
    values[k] = value;
    variances[k] = std::max(0.0, raw);
  });
  return RadialCfEstimate(std::vector<double>(radii.begin(), radii.end()), std::move(values),
                          std::move(variances), n);
}

std::complex<double> cf_at(const RadialCfEstimate& estimate, double b) {
  return estimate.value_at(b);
}

}  // namespace nqp
