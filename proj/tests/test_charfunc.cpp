#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <vector>

#include "nqp/charfunc.hpp"
#include "nqp/io.hpp"
#include "nqp/spats.hpp"

using namespace nqp;

TEST_CASE("estimate at the origin is exact") {
  const QuadratureDataset data = sample_quadratures({0.49, 0.62}, 1000, 5);
  const RadialCfEstimate est = estimate_cf(data, uniform_radii(2.0));
  CHECK(est.values()[0] == std::complex<double>(1.0, 0.0));
  CHECK(est.variances()[0] == 0.0);
}

TEST_CASE("single sample at x = 0: exact algebra") {
  QuadratureDataset data;
  data.params = {0.49, 1.0};
  data.samples = {0.0};
  const std::vector<double> radii{0.0, 0.5, 1.0, 1.5};
  const RadialCfEstimate est = estimate_cf(data, radii);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double b = radii[i];
    CHECK(est.values()[i].real() == doctest::Approx(std::exp(0.5 * b * b)).epsilon(1e-15));
    CHECK(est.values()[i].imag() == 0.0);
    CHECK(est.variances()[i] <= 4e-16 * std::exp(b * b));  // zero up to roundoff
  }
}

TEST_CASE("input validation") {
  const QuadratureDataset data = sample_quadratures({0.49, 0.62}, 100, 5);
  CHECK_THROWS_AS(estimate_cf(QuadratureDataset{}, uniform_radii(1.0)), std::invalid_argument);
  const std::vector<double> not_from_zero{0.5, 1.0};
  CHECK_THROWS_AS(estimate_cf(data, not_from_zero), std::invalid_argument);
  const std::vector<double> not_monotone{0.0, 0.5, 0.5};
  CHECK_THROWS_AS(estimate_cf(data, not_monotone), std::invalid_argument);
}

TEST_CASE("estimate agrees with the theoretical value within 3 sigma") {
  const SpatsParams p{0.49, 0.62};
  const QuadratureDataset data = sample_quadratures(p, 100000, 11);
  const RadialCfEstimate est = estimate_cf(data, uniform_radii(1.5));
  const double b = 1.0;
  const double sigma = std::sqrt(est.variance_at(b));
  CHECK(std::abs(est.value_at(b) - cf_theoretical(p, b)) < 3.0 * sigma);
  CHECK(cf_theoretical(p, b) == doctest::Approx(0.05624).epsilon(1e-3));
}

TEST_CASE("hermitian extension and interpolation contract") {
  const QuadratureDataset data = sample_quadratures({1.11, 0.6}, 20000, 3);
  const RadialCfEstimate est = estimate_cf(data, uniform_radii(2.0));
  // exact at nodes
  CHECK(est.value_at(0.5) == est.values()[25]);
  CHECK(cf_at(est, 1.0) == est.values()[50]);
  // conjugate at negated argument
  CHECK(est.value_at(-0.74) == std::conj(est.value_at(0.74)));
  // out of range
  CHECK_THROWS_AS(est.value_at(2.5), std::out_of_range);
  CHECK_THROWS_AS(est.value_at(-2.5), std::out_of_range);
}

TEST_CASE("cubic interpolation reproduces linear data exactly at midpoints") {
  std::vector<double> radii{0.0, 0.5, 1.0, 1.5, 2.0};
  std::vector<std::complex<double>> values(5);
  std::vector<double> variances(5, 0.0);
  for (int i = 0; i < 5; ++i) values[i] = {1.0 - 0.3 * radii[i], 0.1 * radii[i]};
  const RadialCfEstimate est(radii, values, variances, 10);
  const std::complex<double> mid = est.value_at(0.75);
  CHECK(mid.real() == doctest::Approx(0.5 * (values[1] + values[2]).real()).epsilon(1e-14));
  CHECK(mid.imag() == doctest::Approx(0.5 * (values[1] + values[2]).imag()).epsilon(1e-14));
}

TEST_CASE("variance bound and monotone growth of the noise envelope") {
  const QuadratureDataset data = sample_quadratures({0.49, 0.62}, 10000, 17);
  const RadialCfEstimate est = estimate_cf(data, uniform_radii(3.0));
  const double n = static_cast<double>(data.count());
  for (std::size_t i = 0; i < est.radii().size(); ++i) {
    const double b = est.radii()[i];
    CHECK(est.variances()[i] <= std::exp(b * b) / n);
    CHECK(est.variances()[i] >= 0.0);
  }
}

TEST_CASE("thread count does not change the estimate") {
  const QuadratureDataset data = sample_quadratures({0.49, 0.62}, 30000, 23);
  const RadialCfEstimate a = estimate_cf(data, uniform_radii(2.0), 1);
  const RadialCfEstimate b = estimate_cf(data, uniform_radii(2.0), 4);
  CHECK(a.values() == b.values());
  CHECK(a.variances() == b.variances());
}

TEST_CASE("estimate tracks the oracle over the grid at N = 1e6") {
  const SpatsParams p{0.49, 0.62};
  const QuadratureDataset data = sample_quadratures(p, 1000000, 29);
  const RadialCfEstimate est = estimate_cf(data, uniform_radii(3.0));
  std::size_t ok = 0, total = 0;
  for (std::size_t i = 0; i < est.radii().size(); ++i) {
    const double b = est.radii()[i];
    const double sigma = std::sqrt(est.variances()[i]);
    const double err = std::abs(est.values()[i] - std::complex<double>(cf_theoretical(p, b), 0.0));
    ++total;
    if (b == 0.0 || err < 4.0 * sigma) ++ok;
  }
  CHECK(static_cast<double>(ok) >= 0.99 * static_cast<double>(total));
}

TEST_CASE("ensemble scatter matches the variance formula (smoke scale)") {
  // Full-scale version (200 datasets, 20% band) runs in the acceptance
  // suite; this is a reduced deterministic check.
  const SpatsParams p{0.49, 0.62};
  const std::size_t n = 10000;
  const int m = 60;
  const std::vector<double> probe{0.5, 1.5, 2.5};
  for (double b : probe) {
    std::vector<std::complex<double>> vals;
    double mean_formula = 0.0;
    std::complex<double> mean{0.0, 0.0};
    for (int k = 0; k < m; ++k) {
      const QuadratureDataset data = sample_quadratures(p, n, 1000 + 100 * k);
      const std::vector<double> radii{0.0, b};
      const RadialCfEstimate est = estimate_cf(data, radii);
      vals.push_back(est.values()[1]);
      mean += est.values()[1];
      mean_formula += est.variances()[1];
    }
    mean /= static_cast<double>(m);
    mean_formula /= static_cast<double>(m);
    double scatter = 0.0;
    for (const auto& v : vals) scatter += std::norm(v - mean);
    scatter /= static_cast<double>(m - 1);
    CHECK(scatter / mean_formula == doctest::Approx(1.0).epsilon(0.4));
  }
}

TEST_CASE("csv export round-trips") {
  const QuadratureDataset data = sample_quadratures({0.49, 0.62}, 500, 7);
  const RadialCfEstimate est = estimate_cf(data, uniform_radii(1.0));
  const std::filesystem::path path = std::filesystem::temp_directory_path() / "nqp_cf_test.csv";
  write_cf_csv(path, est);
  const RadialCfEstimate back = read_cf_csv(path);
  CHECK(back.source_count() == est.source_count());
  CHECK(back.radii() == est.radii());
  CHECK(back.values() == est.values());
  CHECK(back.variances() == est.variances());
  std::filesystem::remove(path);
}
