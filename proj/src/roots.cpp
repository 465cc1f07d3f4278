#include "glstar/roots.hpp"

#include <cmath>

namespace glstar {

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (double c : coeffs) acc = acc * x + c;
  return acc;
}

int Polynomial::descartes_sign_changes() const {
  int changes = 0;
  int last = 0;
  for (double c : coeffs) {
    if (c == 0.0) continue;
    const int s = c > 0 ? 1 : -1;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  const double l0 = std::log(lo);
  const double l1 = std::log(hi);
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = std::exp(l0 + (l1 - l0) * i / (n - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

RootCount positive_root_count(const std::function<double(double)>& fn, const RootScanOptions& opts) {
  const auto grid = log_grid(opts.a_min, opts.a_max, opts.grid_points);
  RootCount out;
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = fn(grid[i]);

  auto push = [&](double r) {
    if (!out.roots.empty() && std::abs(r - out.roots.back()) <= 1e-9 * std::max(1.0, r)) return;
    out.roots.push_back(r);
  };
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (values[i] == 0.0) {
      push(grid[i]);
      continue;
    }
    if (i + 1 == grid.size() || values[i + 1] == 0.0) continue;
    if ((values[i] < 0) == (values[i + 1] < 0)) continue;
    double lo = grid[i];
    double hi = grid[i + 1];
    const bool lo_negative = values[i] < 0;
    while (hi - lo > opts.bisection_tol * std::max(1.0, lo)) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if ((fn(mid) < 0) == lo_negative) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    push(0.5 * (lo + hi));
  }
  out.count = static_cast<int>(out.roots.size());
  return out;
}

RootCount positive_root_count(const Polynomial& p, const RootScanOptions& opts) {
  RootCount out = positive_root_count([&p](double a) { return p(a); }, opts);
  out.descartes_bound = p.descartes_sign_changes();
  return out;
}

}  // namespace glstar
