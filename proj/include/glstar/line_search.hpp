#pragma once

#include <vector>

#include "glstar/star.hpp"

namespace glstar {

struct LineHit {
  double u = 0.0;
  double theta = 0.0;
  PLine line;
  /// |x ^ L| for unit x and unit L at the solution.
  double residual = 0.0;
};

/// Finds the lines of a star through a given point of P^3. The star's lines are
/// charted by (u, theta) (see GlStar::chord_at); a coarse grid of unit Plücker
/// vectors is built once, and each query refines the best grid minima by
/// damped Gauss-Newton on the trivector x ^ L. Solutions are merged when they
/// name the same line.
class LineSearch {
 public:
  explicit LineSearch(GlStar star, int n_u = 64, int n_theta = 64);

  const GlStar& star() const noexcept { return star_; }

  std::vector<LineHit> lines_through(const Vec4& x, double tol = 1e-9) const;

  PLine line_at(double u, double theta) const;

 private:
  Vec4 residual(const Vec4& xn, double u, double theta) const;
  LineHit refine(const Vec4& xn, double u, double theta) const;

  GlStar star_;
  int n_u_;
  int n_theta_;
  double u_min_;
  std::vector<Vec6> grid_;  // unit Plücker vectors, row-major in (u, theta)
};

}  // namespace glstar
