#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <numbers>

#include "nqp/filters.hpp"
#include "nqp/io.hpp"

using namespace nqp;

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(NonclassicalityFilter::autocorrelation(0.0), std::invalid_argument);
  CHECK_THROWS_AS(NonclassicalityFilter::autocorrelation(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(NonclassicalityFilter::rectangular(0.0), std::invalid_argument);
}

TEST_CASE("normalization integral") {
  // analytic value: (pi/2) sqrt(pi/2)
  const double exact = 0.5 * std::numbers::pi * std::sqrt(0.5 * std::numbers::pi);
  CHECK(omega1_normalization() == doctest::Approx(exact).epsilon(1e-9));
  CHECK(omega1_normalization() == doctest::Approx(1.96870).epsilon(1e-5));
}

TEST_CASE("unit value at zero lag and bounds on the table") {
  const NonclassicalityFilter f = build_autocorrelation_filter(1.0);
  CHECK(f.value(0.0) == doctest::Approx(1.0).epsilon(1e-10));
  for (double v : f.table()) {
    CHECK(v > 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("width scaling is an argument rescale") {
  const NonclassicalityFilter w2 = build_autocorrelation_filter(2.0);
  const NonclassicalityFilter w1 = build_autocorrelation_filter(1.0);
  CHECK(w2.value(1.0) == w1.value(0.5));  // same table lookup
  for (double b : {0.1, 0.77, 1.3, 2.9, 4.4}) {
    CHECK(w2.value(b) == doctest::Approx(w1.value(b / 2.0)).epsilon(1e-8));
  }
  const NonclassicalityFilter w14 = build_autocorrelation_filter(1.4);
  for (double b : {0.3, 1.0, 2.2}) {
    CHECK(w14.value(b) == doctest::Approx(w1.value(b / 1.4)).epsilon(1e-8));
  }
}

TEST_CASE("rectangular filter is an exact indicator") {
  const NonclassicalityFilter rect = NonclassicalityFilter::rectangular(2.2);
  CHECK(rect.value(2.1999) == 1.0);
  CHECK(rect.value(2.2001) == 0.0);
  CHECK(rect.value(0.0) == 1.0);
  CHECK(rect.truncation_radius() == 2.2);
}

TEST_CASE("autocorrelation value vanishes beyond the support") {
  const NonclassicalityFilter f = build_autocorrelation_filter(1.4);
  CHECK(f.value(0.0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(f.value(f.truncation_radius() * (1.0 - 1e-9)) > 0.0);
  CHECK(f.value(f.truncation_radius() + 1e-9) == 0.0);
  CHECK(f.value(f.truncation_radius() + 1.0) == 0.0);
  CHECK(f.truncation_radius() == doctest::Approx(1.4 * omega1_support()).epsilon(1e-15));
}

TEST_CASE("table convergence under quadrature refinement") {
  // Doubling the 2D integration resolution moves no node by more than 1e-9.
  const std::vector<double> coarse = omega1_table(1024, 200);
  const std::vector<double> fine = omega1_table(1024, 400);
  double worst = 0.0;
  for (std::size_t i = 0; i < coarse.size(); ++i)
    worst = std::max(worst, std::abs(coarse[i] - fine[i]));
  CHECK(worst < 1e-9);
}

TEST_CASE("axioms pass for the autocorrelation filter") {
  for (double w : {0.5, 1.0, 1.4, 2.0}) {
    const AxiomReport report = verify_filter_axioms(build_autocorrelation_filter(w));
    for (int i = 0; i < 4; ++i) {
      INFO("width ", w, " axiom ", i + 1, ": ", report.axioms[i].detail);
      CHECK(report.axioms[i].pass);
    }
    // Fourier positivity margin
    CHECK(report.axioms[1].margin >= 0.0);
  }
}

TEST_CASE("axioms 2 and 4 fail for the rectangular filter") {
  const AxiomReport report = verify_filter_axioms(NonclassicalityFilter::rectangular(2.2));
  CHECK_FALSE(report.axioms[1].pass);  // oscillating transform
  CHECK_FALSE(report.axioms[3].pass);  // compact support
  CHECK_FALSE(report.axioms[0].pass);  // no decay inside the support either
  CHECK(report.axioms[2].pass);        // indicator does approach 1 as the cutoff grows
  CHECK_FALSE(report.all_pass());
}

TEST_CASE("a Gaussian exp(-b^2/4) fails the decay requirement only") {
  // exp(-b^2/4) * exp(b^2/2) = exp(b^2/4) diverges.
  const auto gaussian = [](double s) { return std::exp(-0.25 * s * s); };
  const NonclassicalityFilter f = NonclassicalityFilter::custom("gaussian", gaussian, 12.0);
  const AxiomReport report = verify_filter_axioms(f);
  CHECK_FALSE(report.axioms[0].pass);
  CHECK(report.axioms[1].pass);
  CHECK(report.axioms[2].pass);
  CHECK(report.axioms[3].pass);
}

TEST_CASE("table export") {
  const NonclassicalityFilter f = build_autocorrelation_filter(1.0);
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "nqp_filter_table.csv";
  write_filter_table_csv(path, f);
  CHECK(std::filesystem::file_size(path) > 1000);
  std::filesystem::remove(path);
}
