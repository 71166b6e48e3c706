#include <doctest.h>

#include <cmath>

#include "nqp/bessel.hpp"
#include "oracles.hpp"

using nqp::bessel_j0;

TEST_CASE("J0 handbook values") {
  // Abramowitz & Stegun, tables 9.1/9.5.
  CHECK(bessel_j0(0.0) == 1.0);
  CHECK(bessel_j0(0.5) == doctest::Approx(0.93846980724081290).epsilon(1e-12));
  CHECK(bessel_j0(1.0) == doctest::Approx(0.76519768655796655).epsilon(1e-12));
  CHECK(bessel_j0(2.0) == doctest::Approx(0.22389077914123567).epsilon(1e-12));
  CHECK(bessel_j0(5.0) == doctest::Approx(-0.17759677131433830).epsilon(1e-12));
  CHECK(bessel_j0(10.0) == doctest::Approx(-0.24593576445134833).epsilon(1e-12));
}

TEST_CASE("J0 first zeros") {
  CHECK(std::abs(bessel_j0(2.404825557695773)) < 1e-10);
  CHECK(std::abs(bessel_j0(5.520078110286311)) < 1e-10);
  CHECK(std::abs(bessel_j0(8.653727912911013)) < 1e-10);
}

TEST_CASE("J0 is even") {
  for (double x : {0.3, 1.7, 6.2, 44.4, 321.0}) CHECK(bessel_j0(-x) == bessel_j0(x));
}

TEST_CASE("J0 matches the integral representation to 1e-10 on |x| <= 500") {
  // Structured sweep plus branch boundaries.
  double worst = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double x = 500.0 * i / 2000.0;
    worst = std::max(worst, std::abs(bessel_j0(x) - oracle::j0_reference(x)));
  }
  CHECK(worst < 1e-10);
  for (double x : {3.9999, 4.0, 4.0001, 7.9999, 8.0, 8.0001}) {
    CHECK(std::abs(bessel_j0(x) - oracle::j0_reference(x)) < 1e-10);
  }
}
