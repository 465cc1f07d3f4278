#include "glstar/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>

#include "glstar/line_search.hpp"
#include "glstar/threading.hpp"

namespace glstar {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Per-sample residuals reduced to the worst one (largest, or smallest when
// `minimize`), keeping the first index that attains it.
struct Worst {
  double value;
  long index = -1;
};

Worst reduce(const std::vector<double>& values, bool minimize = false) {
  Worst w{minimize ? kInf : -kInf};
  for (std::size_t i = 0; i < values.size(); ++i) {
    double v = values[i];
    if (std::isnan(v)) v = minimize ? -kInf : kInf;
    if (minimize ? v < w.value : v > w.value) {
      w.value = v;
      w.index = static_cast<long>(i);
    }
  }
  if (w.index < 0) w.value = 0.0;
  return w;
}

Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec3 v;
  do {
    v = Vec3(normal(rng), normal(rng), normal(rng));
  } while (v.norm() < 1e-8);
  return v.normalized();
}

}  // namespace

std::vector<Vec3> fibonacci_sphere(int n) {
  std::vector<Vec3> pts;
  pts.reserve(static_cast<std::size_t>(n));
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * i;
    pts.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }
  return pts;
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_point(const Eigen::VectorXd& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += format_number(v[i]);
  }
  return out + ")";
}

CheckReport check_involution(const GlStar& star, int n, double tol) {
  const auto pts = fibonacci_sphere(n);
  std::vector<double> res(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) { res[i] = (star.sigma(star.sigma(pts[i])) - pts[i]).norm(); });
  const Worst w = reduce(res);
  CheckReport r{"involution", w.value < tol, w.value, std::nullopt, n};
  if (!r.passed && w.index >= 0) r.witness = format_point(pts[static_cast<std::size_t>(w.index)]);
  return r;
}

CheckReport check_fixed_point_free(const GlStar& star, int n, double margin) {
  const auto pts = fibonacci_sphere(n);
  std::vector<double> dist(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) { dist[i] = (star.sigma(pts[i]) - pts[i]).norm(); });
  const Worst w = reduce(dist, true);
  CheckReport r{"fixed_point_free", w.value > margin, w.value, std::nullopt, n};
  if (!r.passed && w.index >= 0) r.witness = format_point(pts[static_cast<std::size_t>(w.index)]);
  return r;
}

CheckReport check_no_exterior_meet(const GlStar& star, int n_pairs, double tol, std::uint64_t seed) {
  constexpr int kScan = 64;
  const int n_base = std::max(1, (n_pairs + kScan - 1) / kScan);
  const double u_min = star.chart_u_min();
  const double u_max = 0.5 * kPi;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  struct Base {
    double u1, th1, u2;
  };
  std::vector<Base> bases(static_cast<std::size_t>(n_base));
  for (auto& b : bases) {
    b.u1 = u_min + (u_max - u_min) * uni(rng);
    b.th1 = 2.0 * kPi * uni(rng);
    b.u2 = u_min + (u_max - u_min) * uni(rng);
  }
  const QuadricForm sphere = QuadricForm::unit_sphere();

  // Worst exteriority sphere_form(w, w) / |w|^2 over meeting points, and the
  // witness pair.
  std::vector<double> worst(bases.size(), 0.0);
  std::vector<std::string> witness(bases.size());
  parallel_for(bases.size(), [&](std::size_t bi) {
    const Base& b = bases[bi];
    const Chord c1 = star.chord_at(b.u1, b.th1);
    const PLine l1 = c1.line();
    const Vec6 k1 = l1.coords() / l1.coords().norm();
    auto line2 = [&](double th) { return star.chord_at(b.u2, th); };
    auto g = [&](double th) {
      const Vec6 k2 = line2(th).line().coords();
      return klein_form(k1, k2 / k2.norm());
    };
    auto inspect = [&](double th) {
      const Chord c2 = line2(th);
      const PLine l2 = c2.line();
      if (same_line(l1, l2, 1e-9)) return;
      const HPoint m = meeting_point(l1, l2);
      const Vec4 w = m.vec4() / m.vec4().norm();
      const double side = sphere(w, w);
      if (side <= tol) return;
      for (const Vec3& q : {c1.a, c1.b}) {
        if (c2.a.isApprox(q, 1e-6) || c2.b.isApprox(q, 1e-6)) return;
      }
      if (side > worst[bi]) {
        worst[bi] = side;
        witness[bi] = "u1=" + format_number(b.u1) + " theta1=" + format_number(b.th1) +
                      " u2=" + format_number(b.u2) + " theta2=" + format_number(th) + " point=" +
                      format_point(m.normalized().coords());
      }
    };
    std::array<double, kScan + 1> th{};
    std::array<double, kScan + 1> gv{};
    for (int j = 0; j <= kScan; ++j) {
      th[static_cast<std::size_t>(j)] = 2.0 * kPi * j / kScan;
      gv[static_cast<std::size_t>(j)] = g(th[static_cast<std::size_t>(j)]);
    }
    for (int j = 0; j < kScan; ++j) {
      const double ga = gv[static_cast<std::size_t>(j)];
      const double gb = gv[static_cast<std::size_t>(j + 1)];
      if (std::abs(ga) <= tol) {
        inspect(th[static_cast<std::size_t>(j)]);
        continue;
      }
      if (std::abs(gb) <= tol || (ga < 0) == (gb < 0)) continue;
      double lo = th[static_cast<std::size_t>(j)];
      double hi = th[static_cast<std::size_t>(j + 1)];
      const bool lo_neg = ga < 0;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((g(mid) < 0) == lo_neg) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      inspect(0.5 * (lo + hi));
    }
  });
  const Worst w = reduce(worst);
  CheckReport r{"no_exterior_meet", w.value <= 0.0, w.value, std::nullopt, static_cast<long>(n_base) * kScan};
  if (!r.passed) r.witness = witness[static_cast<std::size_t>(w.index)];
  return r;
}

CheckReport check_coverage(const GlStar& star, int n_points, double tol, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<Vec4> pts;
  pts.reserve(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    const Vec3 d = random_unit(rng);
    if (i % 5 == 4) {
      pts.emplace_back(0.0, d.x(), d.y(), d.z());
    } else {
      pts.push_back(homogeneous(d * (1.1 + 1.9 * uni(rng))));
    }
  }
  const LineSearch search(star);
  std::vector<int> counts(pts.size());
  std::vector<double> res(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    const auto hits = search.lines_through(pts[i], tol);
    counts[i] = static_cast<int>(hits.size());
    double best = hits.empty() ? 1.0 : 0.0;
    for (const auto& h : hits) best = std::max(best, h.residual);
    res[i] = best;
  });
  CheckReport r{"coverage", true, reduce(res).value, std::nullopt, n_points};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (counts[i] != 1) {
      r.passed = false;
      r.witness = format_point(pts[i]) + " lines=" + std::to_string(counts[i]);
      break;
    }
  }
  return r;
}

CheckReport check_rotational(const GlStar& star, int n, double tol, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 2.0 * kPi);
  std::vector<std::pair<Vec3, double>> samples;
  for (int i = 0; i < n; ++i) {
    const Vec3 q = random_unit(rng);
    samples.emplace_back(q, uni(rng));
  }
  std::vector<double> res(samples.size());
  parallel_for(samples.size(), [&](std::size_t i) {
    const auto& [q, th] = samples[i];
    res[i] = (star.sigma(rotate_z(q, th)) - rotate_z(star.sigma(q), th)).norm();
  });
  const Worst w = reduce(res);
  CheckReport r{"rotational", w.value < tol, w.value, std::nullopt, n};
  if (!r.passed) {
    const auto& [q, th] = samples[static_cast<std::size_t>(w.index)];
    r.witness = format_point(q) + " theta=" + format_number(th);
  }
  return r;
}

CheckReport check_axial(const GlStar& star, int n, double tol, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vec3> pts;
  for (int i = 0; i < n; ++i) pts.push_back(random_unit(rng));
  const Vec6 z_axis = PLine::join(Vec4(1, 0, 0, 0), Vec4(0, 0, 0, 1)).coords();
  std::vector<double> meet(pts.size());
  std::vector<double> mirror(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    const Vec3& q = pts[i];
    const Vec6 k = star.line_through(q).coords();
    meet[i] = std::abs(klein_form(k / k.norm(), z_axis));
    const Vec3 zq(q.x(), -q.y(), q.z());
    const Vec3 s = star.sigma(q);
    mirror[i] = (star.sigma(zq) - Vec3(s.x(), -s.y(), s.z())).norm();
  });
  const Worst wm = reduce(meet);
  const Worst wr = reduce(mirror);
  CheckReport r{"axial", wm.value < tol && wr.value < tol, std::max(wm.value, wr.value), std::nullopt, n};
  if (!r.passed) {
    if (wm.value >= tol) {
      r.witness = "skew to Z at " + format_point(pts[static_cast<std::size_t>(wm.index)]);
    } else {
      r.witness = "reflection at " + format_point(pts[static_cast<std::size_t>(wr.index)]);
    }
  }
  return r;
}

CheckReport check_symmetric(const GlStar& star, int n, double tol) {
  std::vector<double> ts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ts[static_cast<std::size_t>(i)] = static_cast<double>(i) / (n - 1);
  std::vector<double> res(ts.size());
  parallel_for(ts.size(), [&](std::size_t i) { res[i] = std::abs(star.sigma(meridian_point(ts[i])).z() + ts[i]); });
  const Worst w = reduce(res);
  CheckReport r{"symmetric", w.value < tol, w.value, std::nullopt, n};
  if (!r.passed) r.witness = "t=" + format_number(ts[static_cast<std::size_t>(w.index)]);
  return r;
}

double p_z(const Fn1& t, const Fn1& s, double z, double a) {
  return (a * a + 1.0) / (a * a) * (z - t(a)) * (z + s(a));
}

double a_z(const Fn1& t, const Fn1& s, double z) {
  if (std::abs(z) >= 1.0) return kInf;
  if (z == 0.0) return 0.0;
  const Fn1& f = z > 0 ? t : s;
  const double y = std::abs(z);
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

CheckReport check_pz_monotone(const Fn1& t, const Fn1& s, const std::vector<double>& z_grid) {
  constexpr int kSamples = 256;
  std::vector<double> worst(z_grid.size(), 0.0);
  parallel_for(z_grid.size(), [&](std::size_t i) {
    const double z = z_grid[i];
    const double end = a_z(t, s, z);
    const auto grid = std::isinf(end) ? log_grid(1e-4, 1e4, kSamples)
                                      : log_grid(end * 1e-4, end * (1.0 - 1e-6), kSamples);
    double prev = p_z(t, s, z, grid[0]);
    for (std::size_t k = 1; k < grid.size(); ++k) {
      const double v = p_z(t, s, z, grid[k]);
      const double rise = (v - prev) / std::max(1.0, std::abs(prev));
      worst[i] = std::max(worst[i], rise);
      prev = v;
    }
  });
  const Worst w = reduce(worst);
  CheckReport r{"pz_monotone", w.value <= 1e-12, w.value, std::nullopt,
                static_cast<long>(z_grid.size()) * kSamples};
  if (!r.passed) r.witness = "z=" + format_number(z_grid[static_cast<std::size_t>(w.index)]);
  return r;
}

CheckReport check_h_roots(const Fn1& t, const Fn1& s, const std::vector<double>& x_grid,
                          const std::vector<double>& z_grid) {
  const std::size_t n = x_grid.size() * z_grid.size();
  std::vector<double> counts(n);
  parallel_for(n, [&](std::size_t k) {
    const double x = x_grid[k / z_grid.size()];
    const double z = z_grid[k % z_grid.size()];
    counts[k] = positive_root_count([&](double a) { return param_h(t, s, x, z, a); }).count;
  });
  const Worst w = reduce(counts);
  CheckReport r{"h_roots", w.value <= 1.0, w.value, std::nullopt, static_cast<long>(n)};
  if (!r.passed) {
    const std::size_t k = static_cast<std::size_t>(w.index);
    r.witness = format_point(Eigen::Vector2d(x_grid[k / z_grid.size()], z_grid[k % z_grid.size()]));
  }
  return r;
}

CheckReport check_pencil_separation(const GlPencil& pencil, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 2.0 * kPi);
  const double two_pi = 2.0 * kPi;
  auto ccw = [two_pi](double from, double to) {
    double d = std::fmod(to - from, two_pi);
    return d < 0 ? d + two_pi : d;
  };
  long violations = 0;
  std::optional<std::string> witness;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double p = uni(rng);
    const double q = uni(rng);
    const double sp = pencil.sigma1_angle(p);
    const double sq = pencil.sigma1_angle(q);
    const double arc = ccw(p, sp);
    const double dq = ccw(p, q);
    const double dsq = ccw(p, sq);
    // Skip quadruples too close to coincidence to decide.
    const double margin = std::min({dq, dsq, std::abs(dq - arc), std::abs(dsq - arc), two_pi - dq, two_pi - dsq});
    if (margin < 1e-9) continue;
    if ((dq < arc) == (dsq < arc)) {
      ++violations;
      worst = std::max(worst, margin);
      if (!witness) witness = "p=" + format_number(p) + " q=" + format_number(q);
    }
  }
  CheckReport r{"pencil_separation", violations == 0, worst, witness, n};
  return r;
}

}  // namespace glstar
