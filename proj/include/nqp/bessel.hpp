#pragma once

namespace nqp {

/// Bessel function of the first kind, order zero. Absolute error below
/// 1e-10 on |x| <= 500 (verified against an integral-representation
/// reference in the test suite).
double bessel_j0(double x);

}  // namespace nqp
