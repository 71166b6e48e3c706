#include "nqp/spats.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "nqp/numeric.hpp"

namespace nqp {

namespace {

constexpr std::size_t kSampleChunk = 65536;

// Scale parameter of the quadrature density: a = nbar*eta + 1/2.
double scale_a(const SpatsParams& p) { return p.nbar * p.eta + 0.5; }

// Weight of the x^2-tilted component: c = (1+nbar)*eta.
double weight_c(const SpatsParams& p) { return (1.0 + p.nbar) * p.eta; }

struct UniformSource {
  std::mt19937_64 engine;

  explicit UniformSource(std::uint64_t seed) : engine(seed) {}

  // 53-bit uniform in [0, 1).
  double next() { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }

  // Box-Muller, cosine branch only, u1 shifted into (0, 1].
  double normal() {
    const double u1 = 1.0 - next();
    const double u2 = next();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }
};

void fill_chunk(const SpatsParams& p, std::uint64_t chunk_seed, double* out, std::size_t n) {
  const double a = scale_a(p);
  const double s = std::sqrt(2.0 * a);
  const double w2 = weight_c(p) / (2.0 * a);  // in [0, 1] for eta <= 1
  const double w1 = 1.0 - w2;
  UniformSource rng(chunk_seed);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.next();
    if (u < w1) {
      out[i] = s * rng.normal();
    } else {
      // x^2-weighted Gaussian: magnitude is s times a chi(3) variate.
      const double z1 = rng.normal();
      const double z2 = rng.normal();
      const double z3 = rng.normal();
      const double mag = s * std::sqrt(z1 * z1 + z2 * z2 + z3 * z3);
      out[i] = (rng.next() < 0.5) ? -mag : mag;
    }
  }
}

}  // namespace

void SpatsParams::validate() const {
  if (!(nbar >= 0.0) || !std::isfinite(nbar))
    throw std::invalid_argument("nbar must be >= 0");
  if (!(eta > 0.0) || !(eta <= 1.0))
    throw std::invalid_argument("eta must be in (0, 1]");
}

double cf_theoretical(const SpatsParams& params, double b) {
  params.validate();
  if (!(b >= 0.0)) throw std::invalid_argument("cf_theoretical: b must be >= 0");
  const double eb2 = params.eta * b * b;
  return (1.0 - (1.0 + params.nbar) * eb2) * std::exp(-params.nbar * eb2);
}

double p_theoretical(const SpatsParams& params, double alpha_abs) {
  params.validate();
  if (!(alpha_abs >= 0.0)) throw std::invalid_argument("p_theoretical: |alpha| must be >= 0");
  if (params.nbar == 0.0)
    throw std::domain_error("p_theoretical: singular P function at nbar = 0");
  const double n = params.nbar;
  const double r2 = alpha_abs * alpha_abs / params.eta;  // |alpha/sqrt(eta)|^2
  const double ideal =
      ((1.0 + n) * r2 - n) * std::exp(-r2 / n) / (std::numbers::pi * n * n * n);
  return ideal / params.eta;
}

double wigner_origin(const SpatsParams& params) {
  params.validate();
  const double a = scale_a(params);
  return (0.5 - params.eta) / (std::numbers::pi * a * a);
}

double quadrature_pdf(const SpatsParams& params, double x) {
  params.validate();
  const double a = scale_a(params);
  const double c = weight_c(params);
  const double gauss = std::exp(-x * x / (4.0 * a)) / (2.0 * std::sqrt(std::numbers::pi * a));
  return gauss * (1.0 - c / (2.0 * a) + c * x * x / (4.0 * a * a));
}

double quadrature_cdf(const SpatsParams& params, double x) {
  params.validate();
  const double a = scale_a(params);
  const double w2 = weight_c(params) / (2.0 * a);
  const double u = x / std::sqrt(2.0 * a);
  const double phi = std::exp(-0.5 * u * u) / std::sqrt(2.0 * std::numbers::pi);
  const double cdf_normal = 0.5 * std::erfc(-u / std::numbers::sqrt2);
  return cdf_normal - w2 * u * phi;
}

double quadrature_second_moment(const SpatsParams& params) {
  params.validate();
  return 1.0 + 2.0 * params.eta * (2.0 * params.nbar + 1.0);
}

QuadratureDataset sample_quadratures(const SpatsParams& params, std::size_t n, std::uint64_t seed,
                                     unsigned threads) {
  params.validate();
  if (n == 0) throw std::invalid_argument("sample_quadratures: need at least one sample");
  QuadratureDataset data;
  data.params = params;
  data.seed = seed;
  data.samples.resize(n);
  const std::size_t chunks = (n + kSampleChunk - 1) / kSampleChunk;
  parallel_for(chunks, threads, [&](std::size_t ci) {
    const std::size_t lo = ci * kSampleChunk;
    const std::size_t len = std::min(kSampleChunk, n - lo);
    fill_chunk(params, seed + ci, data.samples.data() + lo, len);
  });
  return data;
}

}  // namespace nqp
