#pragma once

// Sampled checks of the gl-star axioms and of the symmetry classes. Every
// check is deterministic for a given seed.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glstar/constructions.hpp"
#include "glstar/roots.hpp"
#include "glstar/star.hpp"

namespace glstar {

struct CheckReport {
  std::string name;
  bool passed = false;
  /// The check's key quantity: a worst residual, or the minimum distance for
  /// fixed_point_free.
  double max_residual = 0.0;
  std::optional<std::string> witness;
  long samples_used = 0;
};

/// n roughly uniform points of the unit sphere.
std::vector<Vec3> fibonacci_sphere(int n);

/// 17 significant digits, with -0 printed as 0.
std::string format_number(double v);
/// "(a,b,c)" with 17 significant digits.
std::string format_point(const Eigen::VectorXd& v);

CheckReport check_involution(const GlStar& star, int n = 1000, double tol = 1e-9);
/// Passes iff min |sigma(q) - q| > margin.
CheckReport check_fixed_point_free(const GlStar& star, int n = 1000, double margin = 0.05);
/// Samples pairs (L, L') where L' runs through a one-parameter family of star
/// lines; every meeting point found must be interior to the sphere.
CheckReport check_no_exterior_meet(const GlStar& star, int n_pairs = 5000, double tol = 1e-8,
                                   std::uint64_t seed = 0);
/// Every sampled non-interior point lies on exactly one star line.
CheckReport check_coverage(const GlStar& star, int n_points = 200, double tol = 1e-9,
                           std::uint64_t seed = 0);
CheckReport check_rotational(const GlStar& star, int n = 500, double tol = 1e-9, std::uint64_t seed = 0);
/// Every line meets Z, and sigma commutes with the reflection y -> -y.
CheckReport check_axial(const GlStar& star, int n = 500, double tol = 1e-8, std::uint64_t seed = 0);
/// z(sigma(p_t)) = -t.
CheckReport check_symmetric(const GlStar& star, int n = 1024, double tol = 1e-9);

/// p_z(a) = (a^2 + 1)/a^2 (z - t(a))(z + s(a)).
double p_z(const Fn1& t, const Fn1& s, double z, double a);
/// End of the monotone range of p_z: infinity for |z| >= 1, else t^-1(z) or s^-1(-z).
double a_z(const Fn1& t, const Fn1& s, double z);
/// p_z decreases strictly on ]0, a_z[ for every z in the grid.
CheckReport check_pz_monotone(const Fn1& t, const Fn1& s, const std::vector<double>& z_grid);
/// h_{x,z} has at most one positive root for every (x, z) in the product grid.
CheckReport check_h_roots(const Fn1& t, const Fn1& s, const std::vector<double>& x_grid,
                          const std::vector<double>& z_grid);

/// (p, sigma1 p) separates (q, sigma1 q) on the circle for sampled p, q.
CheckReport check_pencil_separation(const GlPencil& pencil, int n = 500, std::uint64_t seed = 0);

}  // namespace glstar
