#pragma once

// Regularizing filters for characteristic functions. The autocorrelation
// filter is built from omega(beta) = exp(-|beta|^4):
//   Omega_1(s) = (1/Norm) * integral omega(beta') omega(s e + beta') d2beta',
//   Norm = integral |omega|^2 d2beta',
// tabulated radially and rescaled as Omega_w(b) = Omega_1(b/w). The
// rectangular filter is the hard cutoff indicator b < cutoff.
//
// A proper nonclassicality filter must (1) decay faster than
// exp(-b^2/2), (2) have a nonnegative Fourier transform, (3) approach 1
// pointwise as its width grows, and (4) vanish nowhere. The
// autocorrelation construction satisfies all four; the rectangular
// cutoff does not, which is what verify_filter_axioms makes visible.

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace nqp {

enum class FilterKind { autocorrelation, rectangular, custom };

class NonclassicalityFilter {
 public:
  /// Autocorrelation filter of width w > 0.
  static NonclassicalityFilter autocorrelation(double width);

  /// Hard radial cutoff at |beta_c| > 0.
  static NonclassicalityFilter rectangular(double cutoff);

  /// Injectable radial profile for testing the axiom checker:
  /// value(b) = profile(b / width), zero beyond support_s * width.
  static NonclassicalityFilter custom(std::string name, std::function<double(double)> profile,
                                      double support_s, double width = 1.0);

  FilterKind kind() const { return kind_; }

  /// Width w (autocorrelation/custom) or cutoff |beta_c| (rectangular).
  double width() const { return width_; }

  /// Filter value at radius b >= 0; exactly 0 beyond truncation_radius().
  double value(double b) const;

  /// Radius beyond which the filter is treated as exactly zero. For the
  /// autocorrelation kind the tabulated profile is below 1e-10 well
  /// before this point; for the rectangular kind it is the cutoff.
  double truncation_radius() const { return trunc_; }

  /// Same-kind filter with the width (or cutoff) replaced.
  NonclassicalityFilter with_width(double width) const;

  std::string describe() const;

  /// Tabulated Omega_1 profile (autocorrelation kind only).
  const std::vector<double>& table() const;
  double table_step() const;

 private:
  NonclassicalityFilter() = default;

  FilterKind kind_ = FilterKind::rectangular;
  double width_ = 1.0;
  double trunc_ = 1.0;
  double support_s_ = 1.0;  // support end in s = b/width units
  std::shared_ptr<const std::vector<double>> table_;
  double table_step_ = 0.0;
  std::function<double(double)> profile_;
  std::string name_;
};

/// Builds the autocorrelation filter Omega_w. The unit-width profile is
/// tabulated once per process and shared between widths.
NonclassicalityFilter build_autocorrelation_filter(double width);

double filter_value(const NonclassicalityFilter& filter, double b);

/// Normalization integral of |omega|^2 (analytically pi/2 * sqrt(pi/2)).
double omega1_normalization();

/// Radial extent of the tabulated unit-width profile (in s units).
double omega1_support();

/// Rebuilds the unit-width profile table with explicit resolution, for
/// convergence testing: `table_nodes` radial samples on [0, omega1_support()],
/// `quad_nodes` Gauss-Legendre points per axis of the 2D integral.
std::vector<double> omega1_table(std::size_t table_nodes, int quad_nodes);

struct AxiomCheck {
  bool pass = false;
  double margin = 0.0;  // signed distance to the pass threshold
  std::string detail;
};

struct AxiomReport {
  std::array<AxiomCheck, 4> axioms;
  bool all_pass() const {
    for (const auto& a : axioms)
      if (!a.pass) return false;
    return true;
  }
};

/// Numerically checks the four nonclassicality-filter requirements. See
/// the implementation for the operational form of each check.
AxiomReport verify_filter_axioms(const NonclassicalityFilter& filter);

}  // namespace nqp
