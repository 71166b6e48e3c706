#pragma once

// Shared numerical machinery: Gauss-Legendre rules, composite panels,
// piecewise-cubic interpolation, fixed-order pairwise summation and a
// small deterministic parallel loop.

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace nqp {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1]; cached per n.
const GaussRule& gauss_legendre(int n);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Composite Gauss-Legendre rule on [0, length]: one panel per unit of
/// length (at least one), nodes_per_unit points per panel.
QuadratureRule composite_gauss(double length, int nodes_per_unit);

/// Piecewise-cubic (4-point Lagrange) interpolation on a strictly
/// increasing grid. Exact at grid nodes. Throws std::out_of_range when x
/// falls outside [xs.front(), xs.back()].
double cubic_interp(std::span<const double> xs, std::span<const double> ys, double x);

/// Same on an implicit uniform grid x_i = i * step, i = 0..ys.size()-1.
double uniform_cubic(std::span<const double> ys, double step, double x);

/// Fixed-order pairwise summation of term(lo..hi-1). The reduction tree
/// depends only on the index range, so results are identical no matter
/// how the call is scheduled.
template <class T, class F>
T pairwise_sum(std::size_t lo, std::size_t hi, F&& term) {
  if (hi - lo <= 16) {
    T s{};
    for (std::size_t i = lo; i < hi; ++i) s += term(i);
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum<T>(lo, mid, term) + pairwise_sum<T>(mid, hi, std::forward<F>(term));
}

/// Runs fn(0..n-1) on up to `threads` workers. Each index is processed
/// exactly once; fn must write only to its own slot, which keeps the
/// result independent of the thread count.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace nqp
