#include "glstar/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "glstar/threading.hpp"

namespace glstar {

namespace {

using ScalarFn = std::function<double(double)>;

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Values within a few ulps of the scale of their summands are roundoff.
double snap_square(double v, double scale) { return std::abs(v) <= 64.0 * kEps * scale ? 0.0 : v; }

std::vector<double> unit_grid(int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = static_cast<double>(i) / (n - 1);
  return g;
}

/// Solves f(a) = y for a > 0 with f increasing, by bisection in log a.
double invert_increasing(const ScalarFn& f, double y) {
  double lo = 1.0;
  double hi = 1.0;
  for (int k = 0; k < 1000 && f(lo) > y; ++k) lo *= 0.5;
  for (int k = 0; k < 1000 && f(hi) < y; ++k) hi *= 2.0;
  for (int k = 0; k < 400; ++k) {
    const double mid = std::sqrt(lo) * std::sqrt(hi);
    if (!(mid > lo && mid < hi)) break;
    if (f(mid) < y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::sqrt(lo) * std::sqrt(hi);
}

// A limit is accepted when the distance to it shrinks along the probe points
// (ordered towards the limit) and ends inside the band. Returns the first
// offending probe.
std::optional<double> limit_violation(const ScalarFn& fn, double limit, const ValidationOptions& opts) {
  double last = std::numeric_limits<double>::infinity();
  for (double x : opts.limit_points) {
    const double d = std::abs(fn(x) - limit);
    if (!std::isfinite(d) || d > last + 1e-12) return x;
    last = d;
  }
  if (last > opts.limit_band) return opts.limit_points.back();
  return std::nullopt;
}

std::string fmt_point(double x, double z) {
  std::ostringstream os;
  os.precision(6);
  os << "(x,z)=(" << x << "," << z << ")";
  return os.str();
}

struct EqnFamily {
  std::string label;
  ScalarFn b;
  ScalarFn c;
  ScalarFn t_of_a;  // optional; derived from b, c when empty
  ScalarFn s_of_a;
  bool check_outer = true;
};

ScalarFn sphere_root(const ScalarFn& b, const ScalarFn& c, bool upper) {
  return [b, c, upper](double a) {
    const double bb = b(a);
    const double cc = c(a);
    const double a2 = a * a;
    const double disc = bb * bb + (a2 + 1.0) * (a2 - bb * bb - cc * cc);
    const double root = std::sqrt(std::max(0.0, disc));
    return (upper ? bb + root : root - bb) / (a2 + 1.0);
  };
}

// Index of the first probe for which `bad` is true, or -1; probes are
// evaluated concurrently.
long first_failure(std::size_t n, const std::function<bool(std::size_t)>& bad) {
  std::vector<char> flags(n, 0);
  parallel_for(n, [&](std::size_t i) { flags[i] = bad(i) ? 1 : 0; });
  for (std::size_t i = 0; i < n; ++i) {
    if (flags[i]) return static_cast<long>(i);
  }
  return -1;
}

struct OuterProbe {
  double x;
  double z;
};

std::vector<OuterProbe> outer_probes(int n) {
  std::vector<OuterProbe> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double x = 3.0 * (i + 0.5) / n;
      const double z = -3.0 + 6.0 * (j + 0.5) / n;
      if (x * x + z * z >= 1.0) out.push_back({x, z});
    }
  }
  return out;
}

GlStar build_eqn(EqnFamily fam, const HandednessSpec& hand, const ValidationOptions& opts) {
  const auto a_grid = log_grid(opts.a_min, opts.a_max, opts.a_grid);
  for (double a : a_grid) {
    const double b = fam.b(a);
    const double c = fam.c(a);
    if (!std::isfinite(b) || !std::isfinite(c) || c < 0.0) {
      throw ConditionFailed("(1)", a, "b and c must be finite with c >= 0");
    }
    if (!(b * b + c * c < a * a)) throw ConditionFailed("(1)", a, "b^2 + c^2 < a^2 fails");
  }
  if (const auto a = limit_violation(fam.b, 0.0, opts)) {
    throw ConditionFailed("(2)", *a, "b(a) does not tend to 0");
  }
  if (const auto a = limit_violation([&fam](double x) { return fam.c(x) / x; }, 0.0, opts)) {
    throw ConditionFailed("(2)", *a, "c(a)/a does not tend to 0");
  }

  if (!fam.t_of_a) fam.t_of_a = sphere_root(fam.b, fam.c, true);
  if (!fam.s_of_a) fam.s_of_a = sphere_root(fam.b, fam.c, false);

  double prev = 0.0;
  for (double a : a_grid) {
    const double t = fam.t_of_a(a);
    if (!(t > prev) || !(t < 1.0)) throw ConditionFailed("(3)", a, "t(a) is not increasing in ]0,1[");
    prev = t;
  }

  const auto F = [&fam](double x, double z, double a) {
    const double dz = z - fam.b(a);
    const double c = fam.c(a);
    return a * a * x * x - dz * dz - c * c;
  };

  const int nt = opts.t_probes;
  const long bad_t = first_failure(static_cast<std::size_t>(2 * nt), [&](std::size_t i) {
    const double mag = static_cast<double>(i / 2 + 1) / (nt + 1);
    const double t = (i % 2 == 0) ? mag : -mag;
    const double x = std::sqrt(1.0 - t * t);
    return positive_root_count([&](double a) { return F(x, t, a); }, opts.roots).count != 1;
  });
  if (bad_t >= 0) {
    const double mag = static_cast<double>(bad_t / 2 + 1) / (nt + 1);
    throw ConditionFailed("(3)", bad_t % 2 == 0 ? mag : -mag,
                          "sphere point lies on no surface or on several");
  }

  if (fam.check_outer) {
    const auto probes = outer_probes(opts.xz_probes);
    const long bad = first_failure(probes.size(), [&](std::size_t i) {
      const auto& p = probes[i];
      return positive_root_count([&](double a) { return F(p.x, p.z, a); }, opts.roots).count > 1;
    });
    if (bad >= 0) {
      const auto& p = probes[static_cast<std::size_t>(bad)];
      throw ConditionFailed("(4)", p.x, "outer point on several surfaces " + fmt_point(p.x, p.z));
    }
  }

  for (double a : hand.switches) {
    if (!(a > 0.0) || fam.c(a) > 1e-9 * std::max(1.0, a)) {
      throw ConditionFailed("handedness", a, "handedness may only switch at a cone");
    }
  }

  auto entries = [fam, hand](double t) {
    const double a = invert_increasing(fam.t_of_a, t);
    double c = fam.c(a);
    if (c <= 1e-12 * a) c = 0.0;
    return SurfaceEntry::quadric(a, fam.b(a), c, hand.at(a));
  };
  auto preimage = [fam](double z) {
    const double a = invert_increasing(fam.s_of_a, -z);
    return fam.t_of_a(a);
  };
  return GlStar(fam.label, RotationalProfile::from_entries(entries, preimage));
}

}  // namespace

Handedness HandednessSpec::at(double x) const {
  Handedness h = initial;
  for (double s : switches) {
    if (x >= s) h = h == Handedness::Right ? Handedness::Left : Handedness::Right;
  }
  return h;
}

// ---------------------------------------------------------------- clifford

GlStar clifford(const Vec3& center) {
  if (!center.allFinite() || !(center.norm() < 1.0 - 1e-12)) {
    throw InvalidCenter("center must lie strictly inside the unit sphere");
  }
  if (center.isZero(0.0)) {
    auto images = [](double t) { return Vec3(-meridian_point(t)); };
    auto preimage = [](double z) { return -z; };
    return GlStar("clifford", RotationalProfile::from_images(images, preimage));
  }
  return GlStar("clifford", [center](const Vec3& q) -> Vec3 {
    const Vec3 d = center - q;
    const double lambda = -2.0 * q.dot(d) / d.squaredNorm();
    return q + lambda * d;
  });
}

// ---------------------------------------------------------------- symmetric

double symmetric_c_squared(double a, double t) {
  const double rhs = t * t * (1.0 + a * a);
  return snap_square(a * a - rhs, std::max(a * a, rhs));
}

GlStar symmetric_star(const Fn1& a, const HandednessSpec& hand, const ValidationOptions& opts) {
  if (std::abs(a(0.0)) > 1e-12) throw ConditionFailed("bijection", 0.0, "a(0) must be 0");
  double prev = a(0.0);
  for (int k = 1; k < opts.t_grid; ++k) {
    const double t = static_cast<double>(k) / opts.t_grid;
    const double v = a(t);
    if (!std::isfinite(v) || !(v > prev)) throw ConditionFailed("bijection", t, "a(t) must increase strictly");
    prev = v;
  }
  if (!(a(1.0 - 1e-9) > 1e3)) throw ConditionFailed("bijection", 1.0, "a(t) must be unbounded as t -> 1");

  for (int k = 0; k < opts.t_grid; ++k) {
    const double t = static_cast<double>(k) / opts.t_grid;
    const double av = a(t);
    if (t * t > av * av / (1.0 + av * av) + 1e-12) throw ConditionFailed("(1)", t, "t^2 <= a^2/(1+a^2) fails");
  }
  const auto ratio = [&a](double t) {
    const double av = a(t);
    return t * t * (1.0 + av * av) / (av * av);
  };
  if (const auto t = limit_violation(ratio, 1.0, opts)) {
    throw ConditionFailed("(2)", *t, "t^2 (1+a^2)/a^2 does not tend to 1");
  }
  for (double s : hand.switches) {
    if (!(s > 0.0 && s < 1.0) || symmetric_c_squared(a(s), s) > 1e-9 * std::max(1.0, a(s) * a(s))) {
      throw ConditionFailed("handedness", s, "handedness may only switch at a cone");
    }
  }

  auto entries = [a, hand](double t) {
    const double av = a(t);
    const double c = std::sqrt(std::max(0.0, symmetric_c_squared(av, t)));
    return SurfaceEntry::quadric(av, 0.0, c, hand.at(t));
  };
  // sigma(p_t) lies on the circle z = -t for symmetric stars.
  auto preimage = [](double z) { return -z; };
  return GlStar("symmetric", RotationalProfile::from_entries(entries, preimage));
}

// ---------------------------------------------------------------- f, g

GlStar fg_star(const Fn1& f, const Fn1& g, const HandednessSpec& hand, const ValidationOptions& opts) {
  const auto grid = unit_grid(opts.t_grid);
  if (std::abs(f(0.0)) > 1e-12) throw ConditionFailed("f-boundary", 0.0, "f(0) must be 0");
  if (std::abs(f(1.0) - 1.0) > 1e-12) throw ConditionFailed("f-boundary", 1.0, "f(1) must be 1");
  if (std::abs(g(0.0) + 1.0) > 1e-12) throw ConditionFailed("g-boundary", 0.0, "g(0) must be -1");
  if (std::abs(g(1.0)) > 1e-12) throw ConditionFailed("g-boundary", 1.0, "g(1) must be 0");

  auto lower = [&f](double t) { return -std::sqrt(std::max(0.0, 1.0 - f(t) * f(t))); };
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double t = grid[k];
    if (!(f(t) > f(grid[k - 1]))) throw ConditionFailed("f-monotone", t, "f must increase strictly");
    if (g(t) < g(grid[k - 1])) throw ConditionFailed("g-monotone", t, "g must not decrease");
  }
  for (double t : grid) {
    const double gv = g(t);
    if (!std::isfinite(gv) || gv > 1e-12 || gv < lower(t) - 1e-12) {
      throw ConditionFailed("g-bounds", t, "-sqrt(1-f^2) <= g <= 0 fails");
    }
  }
  const double h = 1.0 / (opts.t_grid - 1);
  for (double s : hand.switches) {
    for (double t : {s - h, s, s + h}) {
      const double tc = std::clamp(t, 0.0, 1.0);
      if (!(s > 0.0 && s < 1.0) || std::abs(g(tc) - lower(tc)) > 1e-9) {
        throw ConditionFailed("epsilon", s, "eps may only change where g = -sqrt(1-f^2) near the switch");
      }
    }
  }

  auto images = [f, g, hand](double t) {
    const double fv = f(t);
    const double gv = g(t);
    const double eps = hand.at(t) == Handedness::Right ? -1.0 : 1.0;
    const double rad = snap_square(1.0 - fv * fv - gv * gv, 1.0);
    return Vec3(gv, eps * std::sqrt(std::max(0.0, rad)), -fv);
  };
  auto preimage = [f](double z) { return f.inverse(-z, 0.0, 1.0); };
  return GlStar("fg", RotationalProfile::from_images(images, preimage));
}

// ---------------------------------------------------------------- eqn / param

GlStar eqn_star(const Fn1& b, const Fn1& c, const HandednessSpec& hand, const ValidationOptions& opts) {
  EqnFamily fam;
  fam.label = "eqn";
  fam.b = [b](double a) { return b(a); };
  fam.c = [c](double a) { return c(a); };
  return build_eqn(std::move(fam), hand, opts);
}

ParamCoefficients param_coefficients(double t, double s, double a) {
  const double a2 = a * a;
  const double half_sum = 0.5 * (t + s);
  const double half_diff = 0.5 * (t - s);
  const double rhs = (a2 + 1.0) * (half_sum * half_sum + a2 * half_diff * half_diff);
  return {(a2 + 1.0) * half_diff, snap_square(a2 - rhs, std::max(a2, rhs))};
}

double param_h(const Fn1& t, const Fn1& s, double x, double z, double a) {
  const double a2 = a * a;
  return a2 * (x * x + z * z - 1.0) + (a2 + 1.0) * (t(a) - z) * (s(a) + z);
}

GlStar param_star(const Fn1& t, const Fn1& s, const HandednessSpec& hand, const ValidationOptions& opts) {
  const auto a_grid = log_grid(opts.a_min, opts.a_max, opts.a_grid);
  if (std::abs(t(0.0)) > 1e-12 || std::abs(s(0.0)) > 1e-12) {
    throw ConditionFailed("homeomorphism", 0.0, "t(0) and s(0) must be 0");
  }
  double tp = 0.0;
  double sp = 0.0;
  for (double a : a_grid) {
    const double tv = t(a);
    const double sv = s(a);
    if (!(tv > tp && tv < 1.0 && sv > sp && sv < 1.0)) {
      throw ConditionFailed("homeomorphism", a, "t and s must increase strictly inside ]0,1[");
    }
    tp = tv;
    sp = sv;
  }
  if (const auto a = limit_violation([&](double x) { return (t(x) + s(x)) / (2.0 * x); }, 1.0, opts)) {
    throw ConditionFailed("(1)", *a, "(t+s)/(2a) does not tend to 1");
  }
  for (double a : a_grid) {
    const auto pc = param_coefficients(t(a), s(a), a);
    if (pc.c_squared < -1e-12 * std::max(1.0, a * a)) {
      throw ConditionFailed("(2)", a, "a^2/(a^2+1) - ts >= (a^2+1)((t-s)/2)^2 fails");
    }
  }
  const auto probes = outer_probes(opts.xz_probes);
  const long bad = first_failure(probes.size(), [&](std::size_t i) {
    const auto& p = probes[i];
    return positive_root_count([&](double a) { return param_h(t, s, p.x, p.z, a); }, opts.roots).count > 1;
  });
  if (bad >= 0) {
    const auto& p = probes[static_cast<std::size_t>(bad)];
    throw ConditionFailed("(3)", p.x, "h has several positive roots at " + fmt_point(p.x, p.z));
  }

  EqnFamily fam;
  fam.label = "param";
  fam.b = [t, s](double a) { return param_coefficients(t(a), s(a), a).b; };
  fam.c = [t, s](double a) { return std::sqrt(std::max(0.0, param_coefficients(t(a), s(a), a).c_squared)); };
  fam.t_of_a = [t](double a) { return t(a); };
  fam.s_of_a = [s](double a) { return s(a); };
  fam.check_outer = false;
  return build_eqn(std::move(fam), hand, opts);
}

GlStar builtin_example() {
  const GlStar star = param_star(Fn1::phi_r(1.5), Fn1::phi_r(2.0));
  return GlStar("builtin", *star.profile());
}

Polynomial builtin_numerator(double x, double z) {
  const double x2 = x * x;
  const double z2 = z * z;
  return Polynomial{{2.0 * x2, 7.0 * x2, 13.0 * x2 - 2.0 * z2 + z - 5.0, 12.0 * x2 - 7.0 * z2 - 5.0,
                     6.0 * x2 - 13.0 * z2 + z, -12.0 * z2, -6.0 * z2}};
}

Polynomial builtin_denominator() { return Polynomial{{2.0, 7.0, 13.0, 12.0, 6.0}}; }

// ---------------------------------------------------------------- pencils

double GlPencil::m(double theta) const { return 0.5 * kPi * u_(2.0 * theta / kPi); }

double GlPencil::m_inverse(double angle) const {
  return 0.5 * kPi * u_.inverse(2.0 * angle / kPi, 0.0, 1.0);
}

double GlPencil::mu_angle(double theta) const { return kPi + m(theta); }

double GlPencil::sigma1_angle(double phi) const {
  const double two_pi = 2.0 * kPi;
  phi = std::fmod(phi, two_pi);
  if (phi < 0.0) phi += two_pi;
  const double half = 0.5 * kPi;
  if (phi <= half) return kPi + m(phi);
  if (phi <= kPi) return two_pi - m(kPi - phi);
  if (phi <= kPi + half) return m_inverse(phi - kPi);
  return kPi - m_inverse(two_pi - phi);
}

Eigen::Vector2d GlPencil::sigma1(const Eigen::Vector2d& p) const {
  const double ang = sigma1_angle(std::atan2(p.y(), p.x()));
  return {std::cos(ang), std::sin(ang)};
}

GlPencil pencil_from_mu(const Fn1& u, const ValidationOptions& opts) {
  if (std::abs(u(0.0)) > 1e-12) throw ConditionFailed("endpoint", 0.0, "mu(1,0) must be (-1,0)");
  if (std::abs(u(1.0) - 1.0) > 1e-12) throw ConditionFailed("endpoint", 1.0, "mu(0,1) must be (0,-1)");
  if (const auto bad = u.find_non_increase(0.0, 1.0, opts.t_grid)) {
    throw ConditionFailed("monotone", *bad, "mu must be a bijection of the arcs");
  }
  return GlPencil(u);
}

GlStar latitudinal(const GlPencil& pencil) {
  auto images = [pencil](double t) {
    const double m = pencil.m(std::asin(t));
    return Vec3(-std::cos(m), 0.0, -std::sin(m));
  };
  auto preimage = [pencil](double z) { return std::sin(pencil.m_inverse(std::asin(-z))); };
  return GlStar("latitudinal", RotationalProfile::from_images(images, preimage));
}

// ---------------------------------------------------------------- parabolas

double Parabola::operator()(double u) const {
  const double d = u - beta;
  return alpha * d * d + gamma;
}

Parabola Parabola::from_hyperbola(double a, double b, double c) {
  if (!(a > 0)) throw InvalidInput("hyperbola slope must be positive");
  return {1.0 / (a * a), b, c * c / (a * a)};
}

Parabola interpolate(const Parabola& p, const Parabola& q, double s) {
  const double A = (1.0 - s) * p.alpha + s * q.alpha;
  const double B = -2.0 * ((1.0 - s) * p.alpha * p.beta + s * q.alpha * q.beta);
  const double C = (1.0 - s) * (p.alpha * p.beta * p.beta + p.gamma) + s * (q.alpha * q.beta * q.beta + q.gamma);
  const double beta = -B / (2.0 * A);
  return {A, beta, std::max(0.0, C - A * beta * beta)};
}

Eigen::Vector2d omega(double x, double z) { return {z, x * x}; }

Vec3 omega_inv(double u, double v) {
  if (v < 0.0) throw InvalidInput("omega_inv needs v >= 0");
  return {std::sqrt(v), 0.0, u};
}

namespace {

// Intersections of P with D = {(u, 1 - u^2)}, ascending.
std::optional<std::pair<double, double>> arc_hits(const Parabola& p) {
  const double A = p.alpha + 1.0;
  const double B = -2.0 * p.alpha * p.beta;
  const double C = p.alpha * p.beta * p.beta + p.gamma - 1.0;
  const double disc = B * B - 4.0 * A * C;
  if (disc < 0.0) return std::nullopt;
  const double q = -0.5 * (B + std::copysign(std::sqrt(disc), B));
  double r1 = q / A;
  double r2 = q != 0.0 ? C / q : -r1;
  if (r1 > r2) std::swap(r1, r2);
  return std::make_pair(r1, r2);
}

// Real u with p(u) = q(u).
std::vector<double> crossings(const Parabola& p, const Parabola& q) {
  const double A = p.alpha - q.alpha;
  const double B = -2.0 * (p.alpha * p.beta - q.alpha * q.beta);
  const double C = p.alpha * p.beta * p.beta + p.gamma - q.alpha * q.beta * q.beta - q.gamma;
  if (std::abs(A) < 1e-300) {
    if (std::abs(B) < 1e-300) return {};
    return {-C / B};
  }
  const double disc = B * B - 4.0 * A * C;
  if (disc < 0.0) return {};
  const double s = -0.5 * (B + std::copysign(std::sqrt(disc), B));
  std::vector<double> out{s / A};
  if (s != 0.0) out.push_back(C / s);
  return out;
}

}  // namespace

GlStar parabola_star(const ParabolaSeq& seq, const HandednessSpec& hand, const ValidationOptions& opts) {
  const std::size_t n = seq.items.size();
  if (n < 2) throw InvalidInput("a parabola sequence needs at least two entries");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = seq.items[i];
    if (!(p.alpha > 0) || !(p.gamma >= 0) || !std::isfinite(p.beta)) {
      throw ConditionFailed("(1)", static_cast<double>(i), "alpha > 0 and gamma >= 0 required");
    }
  }
  // Work with decreasing alpha, i.e. increasing slope a = 1/sqrt(alpha).
  const bool reversed = seq.items.front().alpha < seq.items.back().alpha;
  std::vector<Parabola> ps = seq.items;
  if (reversed) std::reverse(ps.begin(), ps.end());
  auto user_index = [&](std::size_t k) { return static_cast<double>(reversed ? n - 1 - k : k); };

  for (std::size_t k = 1; k < n; ++k) {
    if (!(ps[k].alpha < ps[k - 1].alpha)) {
      throw ConditionFailed("(1)", user_index(k), "alpha must be strictly monotone");
    }
  }
  if (std::abs(ps.front().beta) > 1e-12 || std::abs(ps.front().gamma) > 1e-12) {
    throw ConditionFailed("(5)", user_index(0), "the steepest parabola needs its vertex at the origin");
  }
  std::optional<std::pair<double, double>> prev;
  for (std::size_t k = 0; k < n; ++k) {
    const auto hits = arc_hits(ps[k]);
    if (!hits || !(hits->first < 0.0 && hits->second > 0.0) || hits->first < -1.0 || hits->second > 1.0) {
      throw ConditionFailed("(3)", user_index(k), "parabola must meet D twice on both sides of V");
    }
    if (prev && !(hits->first < prev->first && hits->second > prev->second)) {
      throw ConditionFailed("(3)", user_index(k), "arc intersections must nest");
    }
    prev = hits;
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (double u : crossings(ps[k], ps[k + 1])) {
      const double v = ps[k](u);
      if (v > 1.0 - u * u + 1e-12) {
        throw ConditionFailed("(4)", user_index(k), "consecutive parabolas meet outside R");
      }
    }
  }

  auto at = [ps](double a) -> Parabola {
    const double alpha = 1.0 / (a * a);
    if (alpha >= ps.front().alpha) return {alpha, 0.0, 0.0};
    if (alpha <= ps.back().alpha) {
      const double s = alpha / ps.back().alpha;
      return {alpha, ps.back().beta, s * ps.back().gamma};
    }
    const auto it = std::lower_bound(ps.begin(), ps.end(), alpha,
                                     [](const Parabola& p, double x) { return p.alpha > x; });
    const std::size_t k = static_cast<std::size_t>(it - ps.begin());
    const Parabola& lo = ps[k - 1];
    const Parabola& hi = ps[k];
    const double s = (lo.alpha - alpha) / (lo.alpha - hi.alpha);
    return interpolate(lo, hi, s);
  };

  EqnFamily fam;
  fam.label = "parabola";
  fam.b = [at](double a) { return at(a).beta; };
  fam.c = [at](double a) { return a * std::sqrt(at(a).gamma); };
  return build_eqn(std::move(fam), hand, opts);
}

ParabolaSeq builtin_parabola_sequence() {
  const Fn1 t = Fn1::phi_r(1.5);
  const Fn1 s = Fn1::phi_r(2.0);
  ParabolaSeq seq;
  for (int i = -6; i <= 6; ++i) {
    const double a = std::ldexp(1.0, i);
    const ParamCoefficients pc = param_coefficients(t(a), s(a), a);
    Parabola p = Parabola::from_hyperbola(a, pc.b, std::sqrt(std::max(0.0, pc.c_squared)));
    if (i == -6) p.beta = p.gamma = 0.0;
    seq.items.push_back(p);
  }
  return seq;
}

}  // namespace glstar
