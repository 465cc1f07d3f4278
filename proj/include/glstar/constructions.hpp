#pragma once

// Builders for rotational and point-centred gl stars. Every builder checks the
// hypotheses of its family numerically and throws ConditionFailed naming the
// violated condition and a witness parameter.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "glstar/fn1.hpp"
#include "glstar/roots.hpp"
#include "glstar/star.hpp"

namespace glstar {

struct ValidationOptions {
  int t_grid = 1024;
  int a_grid = 512;
  double a_min = 1e-3;
  double a_max = 1e3;
  /// Points approaching the limit end, used for the limit conditions.
  std::array<double, 3> limit_points{1e-2, 1e-3, 1e-4};
  double limit_band = 0.05;
  /// Number of t values probed for "exactly one surface per sphere point".
  int t_probes = 64;
  /// (x, z) probe grid per axis for "at most one surface per outer point".
  int xz_probes = 16;
  RootScanOptions roots{1e-4, 1e4, 512, 1e-12};
};

/// Handedness as a step function: `initial` up to the first switch point, then
/// alternating. Switch points are in the builder's parameter (t or a).
struct HandednessSpec {
  Handedness initial = Handedness::Right;
  std::vector<double> switches;

  Handedness at(double x) const;
};

/// Lines through an interior point; sigma is the second intersection.
GlStar clifford(const Vec3& center);

/// Symmetric rotational star from a(t), b = 0, c(t)^2 = a^2 - t^2 (1 + a^2).
GlStar symmetric_star(const Fn1& a, const HandednessSpec& hand = {},
                      const ValidationOptions& opts = {});
/// c(t)^2 for the symmetric family, with roundoff-level values snapped to 0.
double symmetric_c_squared(double a, double t);

/// sigma(p_t) = (g(t), eps(t) sqrt(1 - f^2 - g^2), -f(t)); Right means eps = -1.
GlStar fg_star(const Fn1& f, const Fn1& g, const HandednessSpec& hand = {},
               const ValidationOptions& opts = {});

/// Rotational star from the surfaces a^2 x^2 - (z - b(a))^2 = c(a)^2, a > 0.
GlStar eqn_star(const Fn1& b, const Fn1& c, const HandednessSpec& hand = {},
                const ValidationOptions& opts = {});

struct ParamCoefficients {
  double b;
  double c_squared;
};
/// b and c^2 for sphere parameters t = t(a), s = s(a).
ParamCoefficients param_coefficients(double t, double s, double a);

/// Rotational star whose surface of slope a meets the meridian circle at z = t(a)
/// and z = -s(a).
GlStar param_star(const Fn1& t, const Fn1& s, const HandednessSpec& hand = {},
                  const ValidationOptions& opts = {});

/// h_{x,z}(a) = a^2 (x^2 + z^2 - 1) + (a^2 + 1)(t(a) - z)(s(a) + z); its positive
/// roots are the slopes of the surfaces through (x, 0, z).
double param_h(const Fn1& t, const Fn1& s, double x, double z, double a);

/// param_star(phi_{3/2}, phi_2, Right).
GlStar builtin_example();
/// Numerator l(a) of h_{x,z} for the builtin example; h times
/// (2a^2 + 3a + 3)(a^2 + 2a + 2) equals l.
Polynomial builtin_numerator(double x, double z);
Polynomial builtin_denominator();

/// Symmetric pencil of lines in the (x, z)-plane. The map mu sends the arc A of
/// angles [0, pi/2] onto -A by theta -> pi + (pi/2) u(2 theta / pi).
class GlPencil {
 public:
  explicit GlPencil(Fn1 u) : u_(std::move(u)) {}

  const Fn1& reparam() const noexcept { return u_; }
  /// m(theta) = (pi/2) u(2 theta / pi) on [0, pi/2].
  double m(double theta) const;
  double m_inverse(double angle) const;
  double mu_angle(double theta) const;
  /// The completed involution of the circle, on angles.
  double sigma1_angle(double phi) const;
  Eigen::Vector2d sigma1(const Eigen::Vector2d& p) const;

 private:
  Fn1 u_;
};

/// u must increase strictly from u(0) = 0 to u(1) = 1.
GlPencil pencil_from_mu(const Fn1& u, const ValidationOptions& opts = {});
/// The rotational star swept out by the pencil; every line meets Z.
GlStar latitudinal(const GlPencil& pencil);

/// v = alpha (u - beta)^2 + gamma.
struct Parabola {
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 0.0;

  double operator()(double u) const;
  static Parabola from_hyperbola(double a, double b, double c);
};

struct ParabolaSeq {
  std::vector<Parabola> items;
};

/// (1 - s) p + s q, returned in vertex form.
Parabola interpolate(const Parabola& p, const Parabola& q, double s);

/// (x, z) -> (u, v) = (z, x^2).
Eigen::Vector2d omega(double x, double z);
/// (u, v) -> (sqrt(v), 0, u).
Vec3 omega_inv(double u, double v);

/// Rotational star from a finite parabola sequence, strictly monotone in alpha
/// (either direction), completed at both ends. The steepest end (largest
/// alpha) must have its vertex at the origin.
GlStar parabola_star(const ParabolaSeq& seq, const HandednessSpec& hand = {},
                     const ValidationOptions& opts = {});

/// Parabolas of the builtin example at slopes a = 2^i, i = -6..6, with the
/// steepest one moved to a vertex at the origin.
ParabolaSeq builtin_parabola_sequence();

}  // namespace glstar
