#include "nqp/filters.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "nqp/bessel.hpp"
#include "nqp/numeric.hpp"

namespace nqp {

namespace {

// omega(beta) = exp(-|beta|^4) is below 1e-12 for |beta| > 2.3; the 2D
// autocorrelation integral is taken over the bounding box of the
// |beta'| <= 2.4 disk. The two factors stop overlapping meaningfully
// beyond s = 4.8, which ends the table.
constexpr double kBoxHalf = 2.4;
constexpr double kSupportS = 4.8;
constexpr std::size_t kTableNodes = 1024;
constexpr int kQuadNodes = 200;

struct Omega1Data {
  std::vector<double> table;
  double step = 0.0;
  double norm = 0.0;
};

Omega1Data build_omega1(std::size_t table_nodes, int quad_nodes) {
  const GaussRule& g = gauss_legendre(quad_nodes);
  const int q = quad_nodes;
  std::vector<double> u(q), wu(q);
  for (int i = 0; i < q; ++i) {
    u[i] = kBoxHalf * g.nodes[i];
    wu[i] = kBoxHalf * g.weights[i];
  }
  // First factor times both weights, flattened row-major over (u, v).
  std::vector<double> first(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      const double r2 = u[i] * u[i] + u[j] * u[j];
      first[static_cast<std::size_t>(i) * q + j] = wu[i] * wu[j] * std::exp(-r2 * r2);
    }
  }
  auto correlate = [&](double s) {
    double acc = 0.0;
    for (int i = 0; i < q; ++i) {
      const double us = u[i] + s;
      for (int j = 0; j < q; ++j) {
        const double r2 = us * us + u[j] * u[j];
        acc += first[static_cast<std::size_t>(i) * q + j] * std::exp(-r2 * r2);
      }
    }
    return acc;
  };
  Omega1Data data;
  data.step = kSupportS / static_cast<double>(table_nodes - 1);
  data.norm = correlate(0.0);
  data.table.resize(table_nodes);
  data.table[0] = 1.0;
  for (std::size_t k = 1; k < table_nodes; ++k)
    data.table[k] = correlate(static_cast<double>(k) * data.step) / data.norm;
  return data;
}

const Omega1Data& omega1() {
  static const Omega1Data data = build_omega1(kTableNodes, kQuadNodes);
  return data;
}

}  // namespace

NonclassicalityFilter NonclassicalityFilter::autocorrelation(double width) {
  if (!(width > 0.0)) throw std::invalid_argument("filter width must be > 0");
  const Omega1Data& data = omega1();
  NonclassicalityFilter f;
  f.kind_ = FilterKind::autocorrelation;
  f.width_ = width;
  // Support end computed exactly like the interpolation domain end.
  f.support_s_ = data.step * static_cast<double>(data.table.size() - 1);
  f.trunc_ = width * f.support_s_;
  f.table_ = std::shared_ptr<const std::vector<double>>(&data.table, [](const void*) {});
  f.table_step_ = data.step;
  return f;
}

NonclassicalityFilter NonclassicalityFilter::rectangular(double cutoff) {
  if (!(cutoff > 0.0)) throw std::invalid_argument("filter cutoff must be > 0");
  NonclassicalityFilter f;
  f.kind_ = FilterKind::rectangular;
  f.width_ = cutoff;
  f.support_s_ = 1.0;
  f.trunc_ = cutoff;
  return f;
}

NonclassicalityFilter NonclassicalityFilter::custom(std::string name,
                                                    std::function<double(double)> profile,
                                                    double support_s, double width) {
  if (!(width > 0.0)) throw std::invalid_argument("filter width must be > 0");
  if (!(support_s > 0.0)) throw std::invalid_argument("filter support must be > 0");
  NonclassicalityFilter f;
  f.kind_ = FilterKind::custom;
  f.width_ = width;
  f.support_s_ = support_s;
  f.trunc_ = width * support_s;
  f.profile_ = std::move(profile);
  f.name_ = std::move(name);
  return f;
}

double NonclassicalityFilter::value(double b) const {
  if (!(b >= 0.0)) throw std::invalid_argument("filter_value: b must be >= 0");
  switch (kind_) {
    case FilterKind::rectangular:
      return b < width_ ? 1.0 : 0.0;
    case FilterKind::autocorrelation: {
      const double s = b / width_;
      if (s >= support_s_) return 0.0;
      return uniform_cubic(*table_, table_step_, s);
    }
    case FilterKind::custom: {
      const double s = b / width_;
      if (s >= support_s_) return 0.0;
      return profile_(s);
    }
  }
  return 0.0;
}

NonclassicalityFilter NonclassicalityFilter::with_width(double width) const {
  switch (kind_) {
    case FilterKind::rectangular:
      return rectangular(width);
    case FilterKind::autocorrelation:
      return autocorrelation(width);
    case FilterKind::custom:
      return custom(name_, profile_, support_s_, width);
  }
  throw std::logic_error("unknown filter kind");
}

std::string NonclassicalityFilter::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case FilterKind::autocorrelation:
      out << "autocorr w=" << width_;
      break;
    case FilterKind::rectangular:
      out << "rect cutoff=" << width_;
      break;
    case FilterKind::custom:
      out << "custom(" << name_ << ") w=" << width_;
      break;
  }
  return out.str();
}

const std::vector<double>& NonclassicalityFilter::table() const {
  if (kind_ != FilterKind::autocorrelation)
    throw std::logic_error("table() is only available for the autocorrelation kind");
  return *table_;
}

double NonclassicalityFilter::table_step() const {
  if (kind_ != FilterKind::autocorrelation)
    throw std::logic_error("table_step() is only available for the autocorrelation kind");
  return table_step_;
}

NonclassicalityFilter build_autocorrelation_filter(double width) {
  return NonclassicalityFilter::autocorrelation(width);
}

double filter_value(const NonclassicalityFilter& filter, double b) { return filter.value(b); }

double omega1_normalization() { return omega1().norm; }

double omega1_support() { return kSupportS; }

std::vector<double> omega1_table(std::size_t table_nodes, int quad_nodes) {
  if (table_nodes < 2) throw std::invalid_argument("omega1_table: need at least 2 nodes");
  return build_omega1(table_nodes, quad_nodes).table;
}

namespace {

// Radial Fourier transform of the filter, (2/pi) integral b J0(2 b s) value(b) db.
double filter_fourier_radial(const QuadratureRule& rule, const std::vector<double>& fvals,
                             double s) {
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double b = rule.nodes[i];
    acc += rule.weights[i] * b * fvals[i] * bessel_j0(2.0 * b * s);
  }
  return acc * (2.0 / std::numbers::pi);
}

std::string format_margin(double v) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << v;
  return out.str();
}

}  // namespace

AxiomReport verify_filter_axioms(const NonclassicalityFilter& filter) {
  AxiomReport report;
  const double R = filter.truncation_radius();
  constexpr int kScanPoints = 4000;

  // (1) Decay faster than exp(-b^2/2), operationally: value(b)*exp(b^2/2)
  // is non-increasing beyond its maximum and drops below 1e-6 within the
  // filter support.
  {
    // Sampled strictly inside the support so a hard cutoff edge cannot
    // masquerade as decay.
    std::vector<double> growth(kScanPoints);
    for (int i = 0; i < kScanPoints; ++i) {
      const double b = R * (i + 0.5) / static_cast<double>(kScanPoints);
      growth[i] = filter.value(b) * std::exp(0.5 * b * b);
    }
    std::size_t arg_max = 0;
    for (std::size_t i = 1; i < growth.size(); ++i)
      if (growth[i] > growth[arg_max]) arg_max = i;
    bool monotone = true;
    const double slack = 1e-9 * growth[arg_max];
    for (std::size_t i = arg_max + 1; i < growth.size(); ++i)
      if (growth[i] > growth[i - 1] + slack) {
        monotone = false;
        break;
      }
    const double tail = growth.back();
    auto& ax = report.axioms[0];
    ax.pass = monotone && tail < 1e-6;
    ax.margin = 1e-6 - tail;
    ax.detail = "value*exp(b^2/2) tail = " + format_margin(tail) +
                (monotone ? ", monotone decay" : ", not eventually decreasing");
  }

  // (2) Nonnegative Fourier transform: radial transform >= -1e-8 on a
  // grid of s in [0, 10].
  {
    const QuadratureRule rule = composite_gauss(R, 32);
    std::vector<double> fvals(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) fvals[i] = filter.value(rule.nodes[i]);
    double worst = 0.0;
    for (int k = 0; k <= 200; ++k) {
      const double s = 10.0 * k / 200.0;
      worst = std::min(worst, filter_fourier_radial(rule, fvals, s));
    }
    auto& ax = report.axioms[1];
    ax.pass = worst >= -1e-8;
    ax.margin = worst + 1e-8;
    ax.detail = "min of radial Fourier transform = " + format_margin(worst);
  }

  // (3) Width scaling approaches 1: at widths 1, 10, 100 the worst
  // deviation from 1 over b in {0.5, 1, 2} must shrink and end below 1e-2.
  {
    const double test_b[] = {0.5, 1.0, 2.0};
    double dev[3] = {0, 0, 0};
    const double widths[] = {1.0, 10.0, 100.0};
    for (int m = 0; m < 3; ++m) {
      const NonclassicalityFilter scaled = filter.with_width(widths[m]);
      for (double b : test_b) dev[m] = std::max(dev[m], std::abs(scaled.value(b) - 1.0));
    }
    auto& ax = report.axioms[2];
    ax.pass = dev[0] >= dev[1] - 1e-12 && dev[1] >= dev[2] - 1e-12 && dev[2] < 1e-2;
    ax.margin = 1e-2 - dev[2];
    ax.detail = "deviation from 1 at widths {1,10,100}: " + format_margin(dev[0]) + ", " +
                format_margin(dev[1]) + ", " + format_margin(dev[2]);
  }

  // (4) Support is the whole plane, operationally: strictly positive on
  // the tabulated range and decayed below 1e-10 at its end (a hard edge
  // with finite height means genuinely compact support).
  {
    double vmin = filter.value(0.0);
    for (int i = 1; i < kScanPoints; ++i) {
      const double b = R * i / static_cast<double>(kScanPoints);
      vmin = std::min(vmin, filter.value(b));
    }
    const double edge = filter.value(R * (1.0 - 1e-9));
    auto& ax = report.axioms[3];
    ax.pass = vmin > 0.0 && edge <= 1e-10;
    ax.margin = vmin;
    ax.detail = "min value inside support = " + format_margin(vmin) +
                ", value at support edge = " + format_margin(edge);
  }

  return report;
}

}  // namespace nqp
