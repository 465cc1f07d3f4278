#include "glstar/projgeom.hpp"

#include <algorithm>
#include <cmath>

namespace glstar {

namespace {

// Sign of the first entry that is significant relative to the largest one.
template <typename V>
double leading_sign(const V& v) {
  const double big = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-12 * big) return v[i] < 0 ? -1.0 : 1.0;
  }
  return 1.0;
}

// Columns of an orthonormal basis for the null space of m, given its rank.
Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, int rank) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const int n = static_cast<int>(m.cols());
  return svd.matrixV().rightCols(n - rank);
}

int numerical_rank(const Eigen::VectorXd& singular, double rel_tol) {
  if (singular.size() == 0) return 0;
  const double top = singular[0];
  if (top <= 0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < singular.size(); ++i) {
    if (singular[i] > rel_tol * top) ++r;
  }
  return r;
}

}  // namespace

double projective_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0 || nb == 0) return 1.0;
  return std::max(0.0, 1.0 - std::abs(a.dot(b)) / (na * nb));
}

bool projectively_equal(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double tol) {
  return projective_distance(a, b) < tol;
}

// ---------------------------------------------------------------- HPoint

HPoint::HPoint(Eigen::VectorXd coords) : coords_(std::move(coords)) {
  if (coords_.size() != 4 && coords_.size() != 6) {
    throw InvalidInput("homogeneous point must have 4 or 6 coordinates");
  }
  if (!coords_.allFinite()) throw InvalidInput("non-finite homogeneous coordinates");
  if (coords_.cwiseAbs().maxCoeff() == 0.0) throw InvalidInput("zero vector is not a point");
}

HPoint HPoint::affine(const Vec3& xyz) { return HPoint(homogeneous(xyz)); }

HPoint HPoint::at_infinity(const Vec3& direction) {
  return HPoint(Vec4(0.0, direction.x(), direction.y(), direction.z()));
}

HPoint HPoint::normalized() const {
  Eigen::VectorXd v = coords_;
  Eigen::Index imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  v /= std::abs(v[imax]);
  v *= leading_sign(v);
  return HPoint(std::move(v));
}

HPoint normalize(const HPoint& p) { return p.normalized(); }

Vec4 HPoint::vec4() const {
  if (dim() != 4) throw InvalidInput("expected a point of P^3");
  return Vec4(coords_);
}

std::optional<Vec3> HPoint::to_affine(double tol) const {
  if (dim() != 4) throw InvalidInput("expected a point of P^3");
  const double scale = coords_.cwiseAbs().maxCoeff();
  if (std::abs(coords_[0]) <= tol * scale) return std::nullopt;
  return Vec3(coords_[1], coords_[2], coords_[3]) / coords_[0];
}

// ---------------------------------------------------------------- Klein form

Mat4 bivector(const Vec6& p) {
  Mat4 m = Mat4::Zero();
  m(0, 1) = p[0];
  m(0, 2) = p[1];
  m(0, 3) = p[2];
  m(2, 3) = p[3];
  m(3, 1) = p[4];
  m(1, 2) = p[5];
  m(1, 0) = -p[0];
  m(2, 0) = -p[1];
  m(3, 0) = -p[2];
  m(3, 2) = -p[3];
  m(1, 3) = -p[4];
  m(2, 1) = -p[5];
  return m;
}

double klein_form(const Vec6& k1, const Vec6& k2) {
  return 0.5 * (k1[0] * k2[3] + k1[3] * k2[0] + k1[1] * k2[4] + k1[4] * k2[1] +
                k1[2] * k2[5] + k1[5] * k2[2]);
}

Mat6 klein_gram() {
  Mat6 g = Mat6::Zero();
  for (int i = 0; i < 3; ++i) {
    g(i, i + 3) = 0.5;
    g(i + 3, i) = 0.5;
  }
  return g;
}

// ---------------------------------------------------------------- PLine

PLine::PLine(const Vec6& p, double tol) : p_(p) {
  if (!p_.allFinite()) throw InvalidInput("non-finite Plücker vector");
  if (p_.norm() == 0.0) throw InvalidInput("zero Plücker vector");
  if (plucker_residual() > tol) {
    throw NotOnQuadric("Plücker relation violated (residual " +
                       std::to_string(plucker_residual()) + ")");
  }
}

PLine PLine::join(const Vec4& a, const Vec4& b, double tol) {
  Vec6 p;
  p[0] = a[0] * b[1] - a[1] * b[0];
  p[1] = a[0] * b[2] - a[2] * b[0];
  p[2] = a[0] * b[3] - a[3] * b[0];
  p[3] = a[2] * b[3] - a[3] * b[2];
  p[4] = a[3] * b[1] - a[1] * b[3];
  p[5] = a[1] * b[2] - a[2] * b[1];
  const double scale = a.norm() * b.norm();
  if (scale == 0.0 || p.norm() <= tol * scale) {
    throw DegenerateJoin("points coincide projectively");
  }
  return PLine(p, tol);
}

PLine PLine::join(const HPoint& a, const HPoint& b, double tol) {
  return join(a.vec4(), b.vec4(), tol);
}

PLine PLine::through_affine(const Vec3& a, const Vec3& b, double tol) {
  return join(homogeneous(a), homogeneous(b), tol);
}

double PLine::plucker_residual() const {
  return std::abs(klein_form(p_, p_)) / p_.squaredNorm();
}

std::array<Vec4, 2> PLine::spanning_points() const {
  Eigen::JacobiSVD<Mat4> svd(bivector(p_), Eigen::ComputeFullU);
  return {Vec4(svd.matrixU().col(0)), Vec4(svd.matrixU().col(1))};
}

Vec4 wedge(const Vec4& x, const Vec6& p) {
  const Mat4 m = bivector(p);
  auto t = [&](int i, int j, int k) { return x[i] * m(j, k) - x[j] * m(i, k) + x[k] * m(i, j); };
  return Vec4(t(0, 1, 2), t(0, 1, 3), t(0, 2, 3), t(1, 2, 3));
}

double PLine::incidence_residual(const Vec4& x) const {
  return wedge(x, p_).norm() / (x.norm() * p_.norm());
}

PLine PLine::transformed(const Mat4& m) const {
  const auto pts = spanning_points();
  return join(Vec4(m * pts[0]), Vec4(m * pts[1]));
}

Vec6 PLine::unit() const {
  Vec6 u = p_ / p_.norm();
  return u * leading_sign(u);
}

bool same_line(const PLine& a, const PLine& b, double tol) {
  return projectively_equal(a.coords(), b.coords(), tol);
}

double line_distance(const PLine& a, const PLine& b) {
  const Vec6 ua = a.coords().normalized();
  Vec6 ub = b.coords().normalized();
  if (ua.dot(ub) < 0) ub = -ub;
  return (ua - ub).norm();
}

bool lines_meet(const PLine& a, const PLine& b, double rel_tol) {
  return std::abs(klein_form(a.coords(), b.coords())) <=
         rel_tol * a.coords().norm() * b.coords().norm();
}

HPoint meeting_point(const PLine& a, const PLine& b) {
  const auto pa = a.spanning_points();
  const auto pb = b.spanning_points();
  Mat4 m;
  m << pa[0], pa[1], -pb[0], -pb[1];
  Eigen::JacobiSVD<Mat4> svd(m, Eigen::ComputeFullV);
  const Vec4 c = svd.matrixV().col(3);
  return HPoint(Eigen::VectorXd(c[0] * pa[0] + c[1] * pa[1]));
}

LiftedLine klein_lift(const Vec6& k, double tol) {
  const double n2 = k.squaredNorm();
  if (n2 == 0.0) throw InvalidInput("zero Klein vector");
  if (std::abs(klein_form(k, k)) > tol * n2) {
    throw NotOnQuadric("Klein vector is off the quadric");
  }
  Eigen::JacobiSVD<Mat4> svd(bivector(k), Eigen::ComputeFullU);
  const Vec4 a = svd.matrixU().col(0);
  const Vec4 b = svd.matrixU().col(1);
  PLine line = PLine::join(a, b, tol);
  // Orient the lifted Plücker vector like k.
  if (line.coords().dot(k) < 0) line = PLine::join(b, a, tol);
  return {line, HPoint(Eigen::VectorXd(a)), HPoint(Eigen::VectorXd(b))};
}

// ---------------------------------------------------------------- forms

Signature signature_of(const Eigen::MatrixXd& symmetric) {
  Signature s;
  if (symmetric.rows() == 0) return s;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(symmetric, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  const double cutoff = 1e-8 * ev.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev[i]) <= cutoff) {
      ++s.zero;
    } else if (ev[i] > 0) {
      ++s.pos;
    } else {
      ++s.neg;
    }
  }
  return s;
}

QuadricForm::QuadricForm(Eigen::MatrixXd matrix) : m_(std::move(matrix)) {
  if (m_.rows() != m_.cols()) throw InvalidInput("quadric form matrix must be square");
  const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
  if ((m_ - m_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw InvalidInput("quadric form matrix must be symmetric");
  }
  m_ = 0.5 * (m_ + m_.transpose());
  sig_ = signature_of(m_);
}

QuadricForm QuadricForm::unit_sphere() {
  return QuadricForm(Eigen::Vector4d(-1.0, 1.0, 1.0, 1.0).asDiagonal().toDenseMatrix());
}

QuadricForm QuadricForm::klein() { return QuadricForm(Eigen::MatrixXd(klein_gram())); }

// ---------------------------------------------------------------- subspaces

Subspace::Subspace(int ambient, Eigen::MatrixXd ortho) : ambient_(ambient), ortho_(std::move(ortho)) {
  // Reduced row echelon form of the orthonormal rows.
  Eigen::MatrixXd r = ortho_.transpose();
  const int rows = static_cast<int>(r.rows());
  int pivot_row = 0;
  for (int col = 0; col < ambient_ && pivot_row < rows; ++col) {
    Eigen::Index best = 0;
    const double mag = r.col(col).segment(pivot_row, rows - pivot_row).cwiseAbs().maxCoeff(&best);
    if (mag < 1e-10) continue;
    r.row(pivot_row).swap(r.row(pivot_row + best));
    r.row(pivot_row) /= r(pivot_row, col);
    for (int i = 0; i < rows; ++i) {
      if (i != pivot_row) r.row(i) -= r(i, col) * r.row(pivot_row);
    }
    r(pivot_row, col) = 1.0;
    ++pivot_row;
  }
  basis_ = r;
}

Subspace Subspace::span(const Eigen::MatrixXd& vectors, double tol) {
  const int n = static_cast<int>(vectors.rows());
  if (vectors.cols() == 0) return zero(n);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(vectors, Eigen::ComputeThinU);
  const int r = numerical_rank(svd.singularValues(), tol);
  return Subspace(n, svd.matrixU().leftCols(r));
}

Subspace Subspace::zero(int ambient) { return Subspace(ambient, Eigen::MatrixXd(ambient, 0)); }

Subspace Subspace::whole(int ambient) {
  return Subspace(ambient, Eigen::MatrixXd::Identity(ambient, ambient));
}

Eigen::MatrixXd Subspace::complement() const {
  if (rank() == 0) return Eigen::MatrixXd::Identity(ambient_, ambient_);
  return null_space(ortho_.transpose(), rank());
}

double Subspace::distance_to(const Eigen::VectorXd& v) const {
  const double n = v.norm();
  if (n == 0) return 0;
  return (v - ortho_ * (ortho_.transpose() * v)).norm() / n;
}

bool Subspace::contains(const Eigen::VectorXd& v, double tol) const { return distance_to(v) < tol; }

bool Subspace::equals(const Subspace& other, double tol) const {
  if (ambient_ != other.ambient_ || rank() != other.rank()) return false;
  return (projector() - other.projector()).norm() < tol;
}

Subspace polar(const Subspace& s, const QuadricForm& f) {
  if (!f.nondegenerate()) throw SingularForm("polarity needs a nondegenerate form");
  if (f.dim() != s.ambient_dim()) throw InvalidInput("form and subspace dimensions differ");
  if (s.empty()) return Subspace::whole(s.ambient_dim());
  const Eigen::MatrixXd m = s.orthonormal().transpose() * f.matrix();
  return Subspace::span(null_space(m, s.rank()));
}

Subspace meet(const Subspace& a, const Subspace& b, double tol) {
  if (a.ambient_dim() != b.ambient_dim()) throw InvalidInput("ambient dimensions differ");
  const int n = a.ambient_dim();
  const Eigen::MatrixXd ca = a.complement();
  const Eigen::MatrixXd cb = b.complement();
  Eigen::MatrixXd stacked(n, ca.cols() + cb.cols());
  stacked << ca, cb;
  if (stacked.cols() == 0) return Subspace::whole(n);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked.transpose(), Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > tol) ++r;
  }
  if (r == n) return Subspace::zero(n);
  return Subspace::span(svd.matrixV().rightCols(n - r));
}

Signature signature_on(const QuadricForm& f, const Subspace& s) {
  return signature_on(f, s.orthonormal());
}

Signature signature_on(const QuadricForm& f, const Eigen::MatrixXd& basis_columns) {
  if (basis_columns.rows() != f.dim()) throw InvalidInput("basis and form dimensions differ");
  const Eigen::MatrixXd gram = basis_columns.transpose() * f.matrix() * basis_columns;
  return signature_of(0.5 * (gram + gram.transpose()));
}

// ---------------------------------------------------------------- sphere

const char* to_string(Side s) {
  switch (s) {
    case Side::Interior: return "interior";
    case Side::On: return "on";
    case Side::Exterior: return "exterior";
  }
  return "?";
}

Side point_side(const Vec4& p, const QuadricForm& f, double tol) {
  const double v = f(p, p) / p.squaredNorm();
  if (v < -tol) return Side::Interior;
  if (v > tol) return Side::Exterior;
  return Side::On;
}

std::vector<HPoint> line_sphere_intersect(const PLine& line, const QuadricForm& f, double tol) {
  if (f.dim() != 4) throw InvalidInput("expected a form on R^4");
  const auto pts = line.spanning_points();
  const Vec4& a = pts[0];
  const Vec4& b = pts[1];
  const double qa = f(a, a);
  const double qb = f(a, b);
  const double qc = f(b, b);
  const double scale = std::max({std::abs(qa), std::abs(qb), std::abs(qc)});
  if (scale == 0.0) throw SingularForm("line lies in the quadric");
  const double disc = qb * qb - qa * qc;
  std::vector<HPoint> out;
  if (disc < -tol * scale * scale) return out;
  if (disc <= tol * scale * scale) {
    // Tangent: double root of qa s^2 + 2 qb s t + qc t^2.
    const Vec4 x1 = qc * a - qb * b;
    const Vec4 x2 = -qb * a + qa * b;
    out.emplace_back(Eigen::VectorXd(x1.norm() >= x2.norm() ? x1 : x2));
    out.back() = out.back().normalized();
    return out;
  }
  const double root = std::sqrt(disc);
  const double q = -(qb + std::copysign(root, qb));
  out.emplace_back(Eigen::VectorXd(Vec4(qc * a + q * b)));
  out.emplace_back(Eigen::VectorXd(Vec4(q * a + qa * b)));
  for (auto& p : out) p = p.normalized();
  return out;
}

Mat4 rotation_z4(double theta) {
  Mat4 m = Mat4::Identity();
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  m(1, 1) = c;
  m(1, 2) = -s;
  m(2, 1) = s;
  m(2, 2) = c;
  return m;
}

Vec3 rotate_z(const Vec3& v, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return Vec3(c * v.x() - s * v.y(), s * v.x() + c * v.y(), v.z());
}

}  // namespace glstar
