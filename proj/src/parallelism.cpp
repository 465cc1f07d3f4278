#include "glstar/parallelism.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "glstar/threading.hpp"

namespace glstar {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Vec6 plucker(const Vec4& a, const Vec4& b) {
  Vec6 p;
  p << a[0] * b[1] - a[1] * b[0], a[0] * b[2] - a[2] * b[0], a[0] * b[3] - a[3] * b[0],
      a[2] * b[3] - a[3] * b[2], a[3] * b[1] - a[1] * b[3], a[1] * b[2] - a[2] * b[1];
  return p;
}

Vec4 gaussian4(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec4 v;
  do {
    v = Vec4(normal(rng), normal(rng), normal(rng), normal(rng));
  } while (v.norm() < 1e-6);
  return v;
}

Line5 orthonormal_line(const Vec6& u, const Vec6& v) {
  const Vec6 a = u.normalized();
  const Vec6 b = (v - a.dot(v) * a).normalized();
  return {a, b};
}

}  // namespace

Subspace Line5::subspace() const {
  Eigen::MatrixXd m(6, 2);
  m << a, b;
  return Subspace::span(m);
}

// ---------------------------------------------------------------- embedding

Vec6 EmbeddedStar::iso(const Vec4& w) const {
  return w[1] * basis.col(0) + w[2] * basis.col(1) + w[3] * basis.col(2) + w[0] * basis.col(3);
}

Vec4 EmbeddedStar::project(const Vec6& k) const {
  // The basis is g-orthonormal, so coordinates are g-pairings up to sign.
  const double c1 = klein_form(k, basis.col(0));
  const double c2 = klein_form(k, basis.col(1));
  const double c3 = klein_form(k, basis.col(2));
  const double c4 = -klein_form(k, basis.col(3));
  return Vec4(c4, c1, c2, c3);
}

EmbeddedStar embed_star(GlStar star) {
  Mat6 b = Mat6::Zero();
  for (int i = 0; i < 3; ++i) {
    b(i, i) = 1.0;
    b(i + 3, i) = 1.0;
    b(i, i + 3) = 1.0;
    b(i + 3, i + 3) = -1.0;
  }
  return {std::move(star), b, Subspace::span(b.leftCols(4)), Subspace::span(b.rightCols(2))};
}

Line5 HfdLineSet::of(const PLine& line) const {
  const auto pts = line.spanning_points();
  const Eigen::Vector4d s(-1.0, 1.0, 1.0, 1.0);
  Eigen::Matrix<double, 2, 4> m;
  m.row(0) = s.cwiseProduct(pts[0]).transpose();
  m.row(1) = s.cwiseProduct(pts[1]).transpose();
  Eigen::JacobiSVD<Eigen::Matrix<double, 2, 4>> svd(m, Eigen::ComputeFullV);
  const Vec4 w1 = svd.matrixV().col(2);
  const Vec4 w2 = svd.matrixV().col(3);
  return orthonormal_line(es_.iso(w1), es_.iso(w2));
}

std::vector<Line5> HfdLineSet::sample(int n) const {
  const auto pts = fibonacci_sphere(n);
  std::vector<Line5> out(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) { out[i] = of(es_.star.line_through(pts[i])); });
  return out;
}

HfdLineSet star_to_hfd(const EmbeddedStar& es) { return HfdLineSet(es); }

double secant_discriminant(const Line5& h) {
  const double A = klein_form(h.a, h.a);
  const double B = klein_form(h.a, h.b);
  const double C = klein_form(h.b, h.b);
  return B * B - A * C;
}

// ---------------------------------------------------------------- classes

bool ParallelClass::contains(const PLine& line, double tol) const {
  return W.distance_to(line.coords()) < tol;
}

ParallelClass class_from_hfd_line(const Line5& h) {
  if (!(secant_discriminant(h) < -1e-12)) throw NotZeroSecant("line meets the Klein quadric");
  return {h, polar(h.subspace(), QuadricForm::klein())};
}

PLine spread_line_through(const ParallelClass& cls, const HPoint& p) {
  if (p.dim() != 4) throw InvalidInput("spread_line_through expects a point of P^3");
  const Vec4 pv = p.vec4() / p.vec4().norm();
  Eigen::Matrix<double, 6, 4> lines;
  for (int i = 0; i < 4; ++i) lines.col(i) = plucker(pv, Vec4::Unit(i));
  Eigen::JacobiSVD<Eigen::Matrix<double, 6, 4>> svd(lines, Eigen::ComputeFullU);
  const Subspace through_p = Subspace::span(svd.matrixU().leftCols(3));
  const Subspace m = meet(through_p, cls.W);
  if (m.rank() != 1) {
    throw DegenerateMeet("lines through the point meet the class in dimension " + std::to_string(m.rank()));
  }
  return klein_lift(m.orthonormal().col(0), 1e-8).line;
}

bool is_elliptic(const Signature& s) {
  return s.zero == 0 && s.pos + s.neg == 4 && std::min(s.pos, s.neg) == 1;
}

Parallelism::Parallelism(const EmbeddedStar& es, int n_u, int n_theta)
    : hfd_(es), search_(es.star, n_u, n_theta) {}

ParallelClass Parallelism::parallel_class_of(const PLine& line) const {
  const Vec6 k = line.coords() / line.coords().norm();
  // L lies in the class of h iff k is g-orthogonal to h, i.e. iff the point
  // iso^-1(proj_U k) lies on the star line whose polar gives h.
  const Vec4 x = embedded().project(k);
  if (x.norm() < 1e-12) throw SearchFailed("line has no component in U");
  const auto hits = search_.lines_through(x);
  if (hits.empty()) throw SearchFailed("no star line through the encoded point");
  if (hits.size() > 1) {
    throw HfdViolation(std::to_string(hits.size()) + " star lines through the encoded point");
  }
  ParallelClass cls = class_from_hfd_line(hfd_.of(hits.front().line));
  if (!cls.contains(line, 1e-7)) throw SearchFailed("class does not contain the query line");
  return cls;
}

PLine Parallelism::parallel_through(const HPoint& p, const PLine& line) const {
  return spread_line_through(parallel_class_of(line), p);
}

DimResult dim_parallelism(const HfdLineSet& hfd, int n) {
  if (n < 10) throw InvalidInput("dim_parallelism needs at least 10 samples");
  const auto lines = hfd.sample(n);
  Eigen::MatrixXd m(6, 2 * static_cast<Eigen::Index>(lines.size()));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    m.col(2 * static_cast<Eigen::Index>(i)) = lines[i].a;
    m.col(2 * static_cast<Eigen::Index>(i) + 1) = lines[i].b;
  }
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues();
  DimResult r;
  r.singular_values.assign(sv.data(), sv.data() + sv.size());
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > 1e-8 * sv[0]) ++rank;
  }
  r.dim = rank - 1;
  r.gap_ratio = rank < sv.size() ? (sv[rank] > 0 ? sv[rank - 1] / sv[rank] : kInf) : kInf;
  return r;
}

Mat6 plane_rotation(const EmbeddedStar& es, int i, int j, double theta) {
  Mat6 r = Mat6::Identity();
  r(i, i) = std::cos(theta);
  r(j, j) = std::cos(theta);
  r(i, j) = -std::sin(theta);
  r(j, i) = std::sin(theta);
  return es.basis * r * es.basis.inverse();
}

Mat6 torus_rotation(const EmbeddedStar& es, double theta) { return plane_rotation(es, 4, 5, theta); }

std::vector<PLine> random_lines(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PLine> out;
  out.reserve(static_cast<std::size_t>(n));
  while (static_cast<int>(out.size()) < n) {
    const Vec4 a = gaussian4(rng);
    const Vec4 b = gaussian4(rng);
    out.push_back(PLine::join(a, b));
  }
  return out;
}

// ---------------------------------------------------------------- checks

CheckReport check_zero_secants(const HfdLineSet& hfd, int n) {
  const auto lines = hfd.sample(n);
  double worst = -kInf;
  std::optional<std::string> witness;
  for (const auto& h : lines) {
    const double d = secant_discriminant(h);
    if (d > worst) {
      worst = d;
      if (d >= -1e-12) witness = format_point(h.a) + " " + format_point(h.b);
    }
  }
  return {"zero_secant", worst < -1e-12, worst, witness, n};
}

CheckReport check_hfd(const Parallelism& par, int n, std::uint64_t seed) {
  const auto lines = random_lines(n, seed);
  std::vector<double> res(lines.size(), 0.0);
  std::vector<std::string> errors(lines.size());
  parallel_for(lines.size(), [&](std::size_t i) {
    try {
      const ParallelClass cls = par.parallel_class_of(lines[i]);
      res[i] = cls.W.distance_to(lines[i].coords());
    } catch (const Error& e) {
      res[i] = kInf;
      errors[i] = e.what();
    }
  });
  CheckReport r{"hfd", true, 0.0, std::nullopt, n};
  for (std::size_t i = 0; i < lines.size(); ++i) {
    r.max_residual = std::max(r.max_residual, res[i]);
    if (!errors[i].empty() && r.passed) {
      r.passed = false;
      r.witness = format_point(lines[i].unit()) + " " + errors[i];
    }
  }
  return r;
}

CheckReport check_class_signatures(const Parallelism& par, int n, std::uint64_t seed) {
  const auto lines = random_lines(n, seed);
  std::vector<int> ok(lines.size(), 0);
  std::vector<std::string> sig(lines.size());
  parallel_for(lines.size(), [&](std::size_t i) {
    try {
      const Signature s = signature_on(QuadricForm::klein(), par.parallel_class_of(lines[i]).W);
      ok[i] = is_elliptic(s) ? 1 : 0;
      sig[i] = "(" + std::to_string(s.pos) + "," + std::to_string(s.neg) + "," + std::to_string(s.zero) + ")";
    } catch (const Error& e) {
      sig[i] = e.what();
    }
  });
  CheckReport r{"class_signature", true, 0.0, std::nullopt, n};
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (ok[i]) continue;
    r.max_residual += 1.0;
    if (r.passed) r.witness = format_point(lines[i].unit()) + " signature=" + sig[i];
    r.passed = false;
  }
  return r;
}

CheckReport check_spread_disjoint(const Parallelism& par, int n, std::uint64_t seed) {
  const auto lines = random_lines(n, seed);
  std::mt19937_64 rng(seed ^ 0x5eedULL);
  std::vector<std::pair<Vec4, Vec4>> pts;
  for (int i = 0; i < n; ++i) {
    const Vec4 p = gaussian4(rng);
    const Vec4 q = gaussian4(rng);
    pts.emplace_back(p, q);
  }
  std::vector<double> margin(lines.size(), kInf);
  std::vector<std::string> errors(lines.size());
  parallel_for(lines.size(), [&](std::size_t i) {
    try {
      const ParallelClass cls = par.parallel_class_of(lines[i]);
      const PLine l1 = spread_line_through(cls, HPoint(Eigen::VectorXd(pts[i].first)));
      const PLine l2 = spread_line_through(cls, HPoint(Eigen::VectorXd(pts[i].second)));
      if (same_line(l1, l2)) return;
      margin[i] = std::abs(klein_form(l1.unit(), l2.unit()));
    } catch (const Error& e) {
      margin[i] = 0.0;
      errors[i] = e.what();
    }
  });
  CheckReport r{"spread_disjoint", true, kInf, std::nullopt, n};
  for (std::size_t i = 0; i < lines.size(); ++i) {
    r.max_residual = std::min(r.max_residual, margin[i]);
    if (margin[i] <= 1e-8 && r.passed) {
      r.passed = false;
      r.witness = format_point(lines[i].unit()) + (errors[i].empty() ? "" : " " + errors[i]);
    }
  }
  if (std::isinf(r.max_residual)) r.max_residual = 0.0;
  return r;
}

CheckReport check_parallel_queries(const Parallelism& par, int n, std::uint64_t seed) {
  const auto lines = random_lines(n, seed);
  std::mt19937_64 rng(seed ^ 0x9a11e1ULL);
  std::normal_distribution<double> normal(0.0, 1.0);
  struct Sample {
    Vec4 p;
    double s;  // position on L for the p-on-L probe
    Vec4 dp;
    Vec4 da;
    Vec4 db;
  };
  std::vector<Sample> samples;
  for (int i = 0; i < n; ++i) {
    Sample s;
    s.p = gaussian4(rng);
    s.s = normal(rng);
    s.dp = gaussian4(rng).normalized() * 1e-6;
    s.da = gaussian4(rng).normalized() * 1e-6;
    s.db = gaussian4(rng).normalized() * 1e-6;
    samples.push_back(s);
  }
  // Incidence, class membership and the p-on-L echo share one tolerance;
  // continuity is tracked separately.
  std::vector<double> res(lines.size(), 0.0);
  std::vector<double> moved(lines.size(), 0.0);
  std::vector<std::string> errors(lines.size());
  parallel_for(lines.size(), [&](std::size_t i) {
    const PLine& L = lines[i];
    const Sample& s = samples[i];
    try {
      const ParallelClass cls = par.parallel_class_of(L);
      const HPoint p(Eigen::VectorXd(s.p / s.p.norm()));
      const PLine m = spread_line_through(cls, p);
      double r = m.incidence_residual(p.vec4());
      r = std::max(r, cls.W.distance_to(m.coords()));

      const auto ab = L.spanning_points();
      const Vec4 on_l = ab[0] + s.s * ab[1];
      const PLine echo = par.parallel_through(HPoint(Eigen::VectorXd(on_l)), L);
      r = std::max(r, line_distance(echo, L));
      res[i] = r;

      const PLine L2 = PLine::join(Vec4(ab[0] + s.da), Vec4(ab[1] + s.db));
      const PLine m2 = par.parallel_through(HPoint(Eigen::VectorXd(s.p / s.p.norm() + s.dp)), L2);
      moved[i] = line_distance(m, m2);
    } catch (const Error& e) {
      res[i] = kInf;
      errors[i] = e.what();
    }
  });
  CheckReport r{"parallel_queries", true, 0.0, std::nullopt, n};
  for (std::size_t i = 0; i < lines.size(); ++i) {
    r.max_residual = std::max(r.max_residual, res[i]);
    const bool bad = !(res[i] < 1e-8) || !(moved[i] < 1e-4);
    if (bad && r.passed) {
      r.passed = false;
      r.witness = format_point(lines[i].unit()) + " residual=" + format_number(res[i]) + " moved=" + format_number(moved[i]) +
                  (errors[i].empty() ? "" : " " + errors[i]);
    }
  }
  return r;
}

CheckReport check_dimension(const HfdLineSet& hfd, int n) {
  const DimResult d = dim_parallelism(hfd, n);
  const double tail = std::isinf(d.gap_ratio) ? 0.0 : 1.0 / d.gap_ratio;
  CheckReport r{"dimension", (d.dim == 2 || d.dim == 3) && tail < 1e-6, tail, std::nullopt, n};
  if (!r.passed) r.witness = "dim=" + std::to_string(d.dim);
  return r;
}

CheckReport check_torus_fixes_classes(const EmbeddedStar& es, int n, const std::function<Mat6(double)>& torus) {
  const HfdLineSet hfd(es);
  const auto lines = hfd.sample(n);
  const Mat6 G = klein_gram();
  double iso_res = 0.0;
  double fix_res = 0.0;
  std::optional<std::string> witness;
  for (int k = 0; k < 16; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / 16;
    const Mat6 tau = torus ? torus(theta) : torus_rotation(es, theta);
    iso_res = std::max(iso_res, (tau.transpose() * G * tau - G).cwiseAbs().maxCoeff());
    for (const auto& h : lines) {
      const Subspace s = h.subspace();
      const double d = std::max(s.distance_to(tau * h.a), s.distance_to(tau * h.b));
      if (d > fix_res) {
        fix_res = d;
        if (d >= 1e-9) witness = "theta=" + format_number(theta) + " h=" + format_point(h.a);
      }
    }
  }
  const bool passed = iso_res < 1e-12 && fix_res < 1e-9;
  if (iso_res >= 1e-12) witness = "not a g-isometry";
  return {"torus", passed, std::max(iso_res, fix_res), passed ? std::nullopt : witness, 16L * n};
}

}  // namespace glstar
