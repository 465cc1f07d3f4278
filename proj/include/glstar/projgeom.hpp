#pragma once

// Homogeneous projective geometry of P^3 and P^5: points, Plücker lines,
// the Klein form, polarities and subspace arithmetic.
//
// Coordinates of P^3 are (w0, w1, w2, w3) with affine point (x, y, z)
// represented as (1, x, y, z). Plücker coordinates of a line are ordered
// (p01, p02, p03, p23, p31, p12) with p_ij = a_i b_j - a_j b_i.

#include <array>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "glstar/error.hpp"

namespace glstar {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat4 = Eigen::Matrix4d;
using Mat6 = Eigen::Matrix<double, 6, 6>;

inline constexpr double kDefaultTol = 1e-9;

/// 1 - |cos| of the angle between two coordinate vectors.
double projective_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b);
bool projectively_equal(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                        double tol = kDefaultTol);

/// A point of P^3 (4 coordinates) or P^5 (6 coordinates).
class HPoint {
 public:
  explicit HPoint(Eigen::VectorXd coords);

  static HPoint affine(const Vec3& xyz);
  static HPoint at_infinity(const Vec3& direction);

  int dim() const noexcept { return static_cast<int>(coords_.size()); }
  const Eigen::VectorXd& coords() const noexcept { return coords_; }
  double operator[](int i) const { return coords_[i]; }

  /// Scaled so the largest-magnitude entry has magnitude 1 and the first
  /// nonzero entry is positive.
  HPoint normalized() const;

  Vec4 vec4() const;
  /// Affine (x, y, z) for a 4-point with w0 != 0.
  std::optional<Vec3> to_affine(double tol = kDefaultTol) const;

 private:
  Eigen::VectorXd coords_;
};

HPoint normalize(const HPoint& p);

/// Skew 4x4 matrix P with P(i,j) = p_ij.
Mat4 bivector(const Vec6& p);

/// Components (012, 013, 023, 123) of the trivector x ^ p; zero iff x lies on p.
Vec4 wedge(const Vec4& x, const Vec6& p);

/// Symmetric Klein pairing 1/2 (p01 q23 + p23 q01 + p02 q31 + p31 q02 + p03 q12 + p12 q03).
double klein_form(const Vec6& k1, const Vec6& k2);
/// Gram matrix of klein_form.
Mat6 klein_gram();

/// A line of P^3 in Plücker coordinates.
class PLine {
 public:
  explicit PLine(const Vec6& p, double tol = kDefaultTol);

  static PLine join(const Vec4& a, const Vec4& b, double tol = kDefaultTol);
  static PLine join(const HPoint& a, const HPoint& b, double tol = kDefaultTol);
  static PLine through_affine(const Vec3& a, const Vec3& b, double tol = kDefaultTol);

  const Vec6& coords() const noexcept { return p_; }
  /// Klein image: the Plücker vector itself, read as a point of P^5.
  const Vec6& klein() const noexcept { return p_; }

  /// p01 p23 + p02 p31 + p03 p12, relative to |p|^2.
  double plucker_residual() const;

  /// Direction (p01, p02, p03); zero iff the line lies in the plane at infinity.
  Vec3 direction() const { return p_.head<3>(); }

  /// Orthonormal spanning vectors of the underlying 2-dim subspace of R^4.
  std::array<Vec4, 2> spanning_points() const;

  /// Sine of the angle between x and the line's 2-dim subspace; zero iff x is on the line.
  double incidence_residual(const Vec4& x) const;
  bool contains(const Vec4& x, double tol = kDefaultTol) const {
    return incidence_residual(x) < tol;
  }

  PLine transformed(const Mat4& m) const;

  /// Unit-norm representative with first significant entry positive.
  Vec6 unit() const;

 private:
  Vec6 p_;
};

bool same_line(const PLine& a, const PLine& b, double tol = kDefaultTol);
/// Euclidean distance of unit, sign-aligned Plücker vectors.
double line_distance(const PLine& a, const PLine& b);

/// Lines a and b meet (including at infinity): klein_form vanishes relative to the norms.
bool lines_meet(const PLine& a, const PLine& b, double rel_tol = 1e-8);

/// Common point of two distinct meeting lines.
HPoint meeting_point(const PLine& a, const PLine& b);

struct LiftedLine {
  PLine line;
  HPoint a;
  HPoint b;
};

/// Inverse Klein map: the line of P^3 whose Plücker vector is k.
LiftedLine klein_lift(const Vec6& k, double tol = kDefaultTol);

struct Signature {
  int pos = 0;
  int neg = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Eigen-sign counts with cutoff 1e-8 * max |eigenvalue|.
Signature signature_of(const Eigen::MatrixXd& symmetric);

class QuadricForm {
 public:
  explicit QuadricForm(Eigen::MatrixXd matrix);

  /// diag(-1, 1, 1, 1): the unit sphere x^2 + y^2 + z^2 = 1.
  static QuadricForm unit_sphere();
  /// The Klein form g on R^6.
  static QuadricForm klein();

  const Eigen::MatrixXd& matrix() const noexcept { return m_; }
  const Signature& signature() const noexcept { return sig_; }
  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  bool nondegenerate() const noexcept { return sig_.zero == 0; }

  double operator()(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
    return u.dot(m_ * v);
  }

 private:
  Eigen::MatrixXd m_;
  Signature sig_;
};

/// A linear subspace of R^n (a projective subspace of P^{n-1}).
class Subspace {
 public:
  /// Span of the columns of `vectors`; rank determined with relative cutoff `tol`.
  static Subspace span(const Eigen::MatrixXd& vectors, double tol = 1e-10);
  static Subspace zero(int ambient);
  static Subspace whole(int ambient);

  int ambient_dim() const noexcept { return ambient_; }
  int rank() const noexcept { return static_cast<int>(basis_.rows()); }
  bool empty() const noexcept { return rank() == 0; }

  /// Reduced row echelon basis (rank x ambient); a normal form for the subspace.
  const Eigen::MatrixXd& basis() const noexcept { return basis_; }
  /// Orthonormal basis as columns (ambient x rank).
  const Eigen::MatrixXd& orthonormal() const noexcept { return ortho_; }
  Eigen::MatrixXd projector() const { return ortho_ * ortho_.transpose(); }
  /// Orthonormal basis of the Euclidean orthogonal complement, as columns.
  Eigen::MatrixXd complement() const;

  double distance_to(const Eigen::VectorXd& v) const;
  bool contains(const Eigen::VectorXd& v, double tol = kDefaultTol) const;
  bool equals(const Subspace& other, double tol = kDefaultTol) const;

 private:
  Subspace(int ambient, Eigen::MatrixXd ortho);
  int ambient_ = 0;
  Eigen::MatrixXd ortho_;
  Eigen::MatrixXd basis_;
};

/// {w : w^T F u = 0 for all u in S}.
Subspace polar(const Subspace& s, const QuadricForm& f);
Subspace meet(const Subspace& a, const Subspace& b, double tol = 1e-9);
Signature signature_on(const QuadricForm& f, const Subspace& s);
/// Signature of the Gram matrix of F on the given (not necessarily orthonormal) basis columns.
Signature signature_on(const QuadricForm& f, const Eigen::MatrixXd& basis_columns);

enum class Side { Interior, On, Exterior };
const char* to_string(Side s);

Side point_side(const Vec4& p, const QuadricForm& f, double tol = kDefaultTol);
inline Side point_side(const HPoint& p, const QuadricForm& f, double tol = kDefaultTol) {
  return point_side(p.vec4(), f, tol);
}

/// Intersection of a line with the quadric of f: 0, 1 (tangent) or 2 points.
std::vector<HPoint> line_sphere_intersect(const PLine& line, const QuadricForm& f,
                                          double tol = kDefaultTol);

/// Rotation about the z-axis acting on (w0, x, y, z).
Mat4 rotation_z4(double theta);
Vec3 rotate_z(const Vec3& v, double theta);

inline Vec4 homogeneous(const Vec3& xyz) { return Vec4(1.0, xyz.x(), xyz.y(), xyz.z()); }

}  // namespace glstar
