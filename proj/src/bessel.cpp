#include "nqp/bessel.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>

// x <= 8: minimax rational approximations on root-bracketing intervals;
// x > 8: Hankel asymptotic expansion. Coefficients from Hart,
// "Computer Approximations" (1968), as used in several double-precision
// special-function libraries.

namespace nqp {

namespace {

// Coefficients in ascending powers of the reduced argument.
constexpr double kP1[] = {
    -4.1298668500990866786e+11, 2.7282507878605942706e+10, -6.2140700423540120665e+08,
    6.6302997904833794242e+06,  -3.6629814655107086448e+04, 1.0344222815443188943e+02,
    -1.2117036164593528341e-01,
};
constexpr double kQ1[] = {
    2.3883787996332290397e+12, 2.6328198300859648632e+10, 1.3985097372263433271e+08,
    4.5612696224219938200e+05, 9.3614022392337710626e+02, 1.0,
    0.0,
};
constexpr double kP2[] = {
    -1.8319397969392084011e+03, -1.2254078161378989535e+04, -7.2879702464464618998e+03,
    1.0341910641583726701e+04,  1.1725046279757103576e+04,  4.4176707025325087628e+03,
    7.4321196680624245801e+02,  4.8591703355916499363e+01,
};
constexpr double kQ2[] = {
    -3.5783478026152301072e+05, 2.4599102262586308984e+05, -8.4055062591169562211e+04,
    1.8680990008359188352e+04,  -2.9458766545509337327e+03, 3.3307310774649071172e+02,
    -2.5258076240801555057e+01, 1.0,
};
constexpr double kPC[] = {
    2.2779090197304684302e+04, 4.1345386639580765797e+04, 2.1170523380864944322e+04,
    3.4806486443249270347e+03, 1.5376201909008354296e+02, 8.8961548424210455236e-01,
};
constexpr double kQC[] = {
    2.2779090197304684318e+04, 4.1370412495510416640e+04, 2.1215350561880115730e+04,
    3.5028735138235608207e+03, 1.5711159858080893649e+02, 1.0,
};
constexpr double kPS[] = {
    -8.9226600200800094098e+01, -1.8591953644342993800e+02, -1.1183429920482737611e+02,
    -2.2300261666214198472e+01, -1.2441026745835638459e+00, -8.8033303048680751817e-03,
};
constexpr double kQS[] = {
    5.7105024128512061905e+03, 1.1951131543434613647e+04, 7.2642780169211018836e+03,
    1.4887231232283756582e+03, 9.0593769594993125859e+01, 1.0,
};

// High/low split of the first two positive roots of J0.
constexpr double kRoot1 = 2.4048255576957727686e+00;
constexpr double kRoot2 = 5.5200781102863106496e+00;
constexpr double kRoot1Hi = 6.160e+02 / 256.0;
constexpr double kRoot1Lo = -1.42444230422723137837e-03;
constexpr double kRoot2Hi = 1.4130e+03 / 256.0;
constexpr double kRoot2Lo = 5.46860286310649596604e-04;

template <std::size_t N>
double rational(const double (&p)[N], const double (&q)[N], double z) {
  double num = p[N - 1];
  double den = q[N - 1];
  for (std::size_t i = N - 1; i-- > 0;) {
    num = num * z + p[i];
    den = den * z + q[i];
  }
  return num / den;
}

}  // namespace

double bessel_j0(double x) {
  x = std::abs(x);  // even function
  if (x == 0.0) return 1.0;
  if (x <= 4.0) {
    const double y = x * x;
    const double r = rational(kP1, kQ1, y);
    const double factor = (x + kRoot1) * ((x - kRoot1Hi) - kRoot1Lo);
    return factor * r;
  }
  if (x <= 8.0) {
    const double y = 1.0 - (x * x) / 64.0;
    const double r = rational(kP2, kQ2, y);
    const double factor = (x + kRoot2) * ((x - kRoot2Hi) - kRoot2Lo);
    return factor * r;
  }
  const double y = 8.0 / x;
  const double y2 = y * y;
  const double z = x - 0.25 * std::numbers::pi;
  const double rc = rational(kPC, kQC, y2);
  const double rs = rational(kPS, kQS, y2);
  const double factor = std::sqrt(2.0 / (x * std::numbers::pi));
  return factor * (rc * std::cos(z) - y * rs * std::sin(z));
}

}  // namespace nqp
