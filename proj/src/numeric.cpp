#include "nqp/numeric.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace nqp {

namespace {

GaussRule make_gauss_rule(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration from the Chebyshev-based initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p = 1.0, pm = 0.0;
      for (int k = 0; k < n; ++k) {
        const double p2 = pm;
        pm = p;
        p = ((2.0 * k + 1.0) * x * pm - k * p2) / (k + 1.0);
      }
      dp = n * (x * p - pm) / (x * x - 1.0);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  static std::map<int, GaussRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gauss_rule(n)).first;
  return it->second;
}

QuadratureRule composite_gauss(double length, int nodes_per_unit) {
  if (!(length > 0.0)) throw std::invalid_argument("composite_gauss: length must be > 0");
  if (nodes_per_unit < 2) throw std::invalid_argument("composite_gauss: need at least 2 nodes per unit");
  const int panels = std::max(1, static_cast<int>(std::ceil(length - 1e-12)));
  const double pw = length / panels;
  const GaussRule& g = gauss_legendre(nodes_per_unit);
  QuadratureRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(panels) * nodes_per_unit);
  rule.weights.reserve(rule.nodes.capacity());
  for (int p = 0; p < panels; ++p) {
    const double lo = p * pw;
    for (int i = 0; i < nodes_per_unit; ++i) {
      rule.nodes.push_back(lo + 0.5 * pw * (g.nodes[i] + 1.0));
      rule.weights.push_back(0.5 * pw * g.weights[i]);
    }
  }
  return rule;
}

namespace {

double lagrange4(const double* xs, const double* ys, double x) {
  double acc = 0.0;
  for (int a = 0; a < 4; ++a) {
    double t = ys[a];
    for (int b = 0; b < 4; ++b) {
      if (b == a) continue;
      t *= (x - xs[b]) / (xs[a] - xs[b]);
    }
    acc += t;
  }
  return acc;
}

}  // namespace

double cubic_interp(std::span<const double> xs, std::span<const double> ys, double x) {
  const std::size_t n = xs.size();
  if (n == 0 || ys.size() != n) throw std::invalid_argument("cubic_interp: bad grid");
  if (x < xs.front() || x > xs.back()) throw std::out_of_range("cubic_interp: argument outside grid");
  if (n == 1) return ys[0];
  const std::size_t hi = static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), x) - xs.begin());
  if (hi < n && xs[hi] == x) return ys[hi];  // exact node
  const std::size_t i = hi - 1;              // xs[i] < x < xs[i+1]
  if (n < 4) {
    // linear fallback for very short grids
    const double t = (x - xs[i]) / (xs[i + 1] - xs[i]);
    return (1.0 - t) * ys[i] + t * ys[i + 1];
  }
  const std::size_t j0 = std::min(i >= 1 ? i - 1 : 0, n - 4);
  return lagrange4(xs.data() + j0, ys.data() + j0, x);
}

double uniform_cubic(std::span<const double> ys, double step, double x) {
  const std::size_t n = ys.size();
  if (n == 0 || !(step > 0.0)) throw std::invalid_argument("uniform_cubic: bad grid");
  const double last = step * static_cast<double>(n - 1);
  if (x < 0.0 || x > last) throw std::out_of_range("uniform_cubic: argument outside grid");
  if (n == 1) return ys[0];
  std::size_t i = static_cast<std::size_t>(x / step);
  if (i >= n - 1) i = n - 2;
  if (x == step * static_cast<double>(i)) return ys[i];
  if (n < 4) {
    const double t = (x - step * i) / step;
    return (1.0 - t) * ys[i] + t * ys[i + 1];
  }
  const std::size_t j0 = std::min(i >= 1 ? i - 1 : 0, n - 4);
  double xs[4], yv[4];
  for (int k = 0; k < 4; ++k) {
    xs[k] = step * static_cast<double>(j0 + k);
    yv[k] = ys[j0 + k];
  }
  return lagrange4(xs, yv, x);
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  if (threads <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex err_mtx;
  auto body = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mtx);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace nqp
