#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace glstar {

/// Coefficients ordered from the highest degree down to the constant term.
struct Polynomial {
  std::vector<double> coeffs;

  double operator()(double x) const;
  /// Sign changes in the coefficient sequence (zeros skipped): an upper bound
  /// on the number of positive roots.
  int descartes_sign_changes() const;
};

struct RootCount {
  int count = 0;
  std::vector<double> roots;
  std::optional<int> descartes_bound;
};

/// n log-spaced points from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int n);

struct RootScanOptions {
  double a_min = 1e-4;
  double a_max = 1e4;
  int grid_points = 1024;
  double bisection_tol = 1e-12;
};

/// Positive roots of fn found as sign changes on a log grid, refined by bisection
/// and clustered.
RootCount positive_root_count(const std::function<double(double)>& fn,
                              const RootScanOptions& opts = {});
RootCount positive_root_count(const Polynomial& p, const RootScanOptions& opts = {});

}  // namespace glstar
