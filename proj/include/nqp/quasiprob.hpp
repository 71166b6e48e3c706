#pragma once

// Filtered quasiprobability from a radial characteristic function:
//   P(alpha) = (2/pi) integral_0^inf b J0(2 b |alpha|) cf(b) filter(b) db
// and its pointwise variance
//   (1/N) [ (4/pi^2) double-integral b b' J0(2b|a|) J0(2b'|a|)
//           cf(b - b') exp(b b') filter(b) filter(b') db db'  -  P^2 ].
// Integrals are truncated at the filter support and evaluated with
// composite Gauss-Legendre panels.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "nqp/charfunc.hpp"
#include "nqp/filters.hpp"

namespace nqp {

struct HankelOptions {
  int nodes_per_unit = 32;  // Gauss-Legendre points per unit of b
};

struct QuasiprobProfile {
  std::vector<double> alpha_radii;
  std::vector<double> values;
  std::vector<double> sigmas;
  std::string filter_descriptor;
  std::size_t source_count = 0;

  std::vector<double> significances() const;
};

/// Uniform |alpha| grid with `steps` points on [0, alpha_max].
std::vector<double> uniform_alpha_grid(double alpha_max = 3.0, std::size_t steps = 61);

/// Transform of a closed-form radial characteristic function.
double hankel_p(const std::function<double(double)>& cf_real, const NonclassicalityFilter& filter,
                double alpha_abs, const HankelOptions& opt = {});

/// Transform of an estimated characteristic function (real part).
double hankel_p(const RadialCfEstimate& cf, const NonclassicalityFilter& filter, double alpha_abs,
                const HankelOptions& opt = {});

/// Transform of the imaginary part of the estimate; pure noise for
/// phase-symmetric states, exposed as a diagnostic.
double hankel_p_imag(const RadialCfEstimate& cf, const NonclassicalityFilter& filter,
                     double alpha_abs, const HankelOptions& opt = {});

/// Pointwise variance of the transform. `p_value` must be the matching
/// hankel_p output. Tiny negative results within the roundoff clamp are
/// returned as 0; larger negativity throws numeric_error.
double variance_p(const RadialCfEstimate& cf, const NonclassicalityFilter& filter,
                  double alpha_abs, double p_value, const HankelOptions& opt = {});

/// Batch evaluation of hankel_p and sqrt(variance_p) over an |alpha|
/// grid. The variance kernel matrix is built once and shared by all
/// grid points; results are identical for any thread count.
QuasiprobProfile profile(const RadialCfEstimate& cf, const NonclassicalityFilter& filter,
                         std::span<const double> alpha_grid, unsigned threads = 1,
                         const HankelOptions& opt = {});

}  // namespace nqp
