#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "glstar/projgeom.hpp"

using namespace glstar;

namespace {

Vec6 v6(double a, double b, double c, double d, double e, double f) {
  Vec6 v;
  v << a, b, c, d, e, f;
  return v;
}

Vec4 random4(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0, 1);
  return Vec4(n(rng), n(rng), n(rng), n(rng));
}

const PLine kX = PLine::join(Vec4(1, 0, 0, 0), Vec4(0, 1, 0, 0));
const PLine kZ = PLine::join(Vec4(1, 0, 0, 0), Vec4(0, 0, 0, 1));

}  // namespace

TEST_SUITE("projgeom") {
  TEST_CASE("normalize follows the sign and scale convention") {
    CHECK(normalize(HPoint(Eigen::Vector4d(0, 0, 0, 2))).coords().isApprox(Eigen::Vector4d(0, 0, 0, 1)));
    CHECK(normalize(HPoint(Eigen::Vector4d(-1, 0, 0, 0))).coords().isApprox(Eigen::Vector4d(1, 0, 0, 0)));
    const HPoint p = normalize(HPoint(Eigen::Vector4d(0.5, -1, 0, 0)));
    CHECK(p.coords().isApprox(Eigen::Vector4d(0.5, -1, 0, 0)));
    CHECK(normalize(p).coords() == p.coords());
    CHECK_THROWS_AS(normalize(HPoint(Eigen::Vector4d::Zero())), InvalidInput);
  }

  TEST_CASE("join of coordinate points") {
    CHECK(kX.coords().isApprox(v6(1, 0, 0, 0, 0, 0)));
    CHECK(kZ.coords().isApprox(v6(0, 0, 1, 0, 0, 0)));
    CHECK(same_line(PLine::join(Vec4(1, 0, 0, 0), Vec4(1, 1, 0, 0)), kX));
    CHECK_THROWS_AS(PLine::join(Vec4(1, 2, 3, 4), Vec4(2, 4, 6, 8)), DegenerateJoin);
  }

  TEST_CASE("Plucker relation holds for random joins") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
      const PLine l = PLine::join(random4(rng), random4(rng));
      CHECK(l.plucker_residual() < 1e-12);
    }
  }

  TEST_CASE("klein form detects meeting lines") {
    CHECK(klein_form(kX.klein(), kX.klein()) == 0.0);
    CHECK(klein_form(kX.klein(), kZ.klein()) == 0.0);
    // Z translated to x = 1, y = 1 is skew to X.
    const PLine skew = PLine::join(Vec4(1, 1, 1, 0), Vec4(1, 1, 1, 1));
    CHECK(std::abs(klein_form(kX.klein(), skew.klein())) > 0.1);
    // The line through (0,1,0) parallel to x: p = (1,0,0,0,0,-1), g with Z is -1/2.
    const PLine q = PLine::join(Vec4(1, 0, 1, 0), Vec4(1, 1, 1, 0));
    CHECK(klein_form(kZ.klein(), q.klein()) == doctest::Approx(-0.5));
    CHECK(klein_gram().isApprox(klein_gram().transpose()));
  }

  TEST_CASE("klein form vanishes iff the spanning points are coplanar") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 100; ++i) {
      const Vec4 a = random4(rng), b = random4(rng), c = random4(rng);
      // Force every other pair to meet by sharing a point.
      const Vec4 d = i % 2 ? random4(rng) : a;
      const PLine l1 = PLine::join(a, b);
      const PLine l2 = PLine::join(c, d);
      Mat4 m;
      m << a, b, c, d;
      const double det = m.determinant() / (a.norm() * b.norm() * c.norm() * d.norm());
      CHECK(lines_meet(l1, l2) == (std::abs(det) < 1e-8));
    }
  }

  TEST_CASE("klein_lift round trip") {
    const LiftedLine x = klein_lift(v6(1, 0, 0, 0, 0, 0));
    CHECK(same_line(x.line, kX));
    CHECK(x.line.contains(Vec4(1, 0, 0, 0)));
    CHECK(x.line.contains(Vec4(0, 1, 0, 0)));
    CHECK(same_line(klein_lift(kZ.klein()).line, kZ));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
      const PLine l = PLine::join(random4(rng), random4(rng));
      CHECK(projective_distance(klein_lift(l.klein()).line.coords(), l.coords()) < 1e-9);
    }
    CHECK_THROWS_AS(klein_lift(v6(1, 0, 0, 1, 0, 0)), NotOnQuadric);
  }

  TEST_CASE("incidence and wedge") {
    CHECK(wedge(Vec4(1, 0, 0, 0.3), kZ.coords()).norm() == 0.0);
    CHECK(kZ.contains(Vec4(0, 0, 0, 1)));
    CHECK_FALSE(kZ.contains(Vec4(1, 1, 0, 0)));
    CHECK(kZ.incidence_residual(Vec4(1, 1, 0, 0)) == doctest::Approx(std::sqrt(0.5)));
  }

  TEST_CASE("point side for the unit sphere") {
    const QuadricForm s = QuadricForm::unit_sphere();
    CHECK(point_side(Vec4(1, 0, 0, 0), s) == Side::Interior);
    CHECK(point_side(Vec4(1, 1, 0, 0), s) == Side::On);
    CHECK(point_side(Vec4(0, 0, 0, 1), s) == Side::Exterior);
    CHECK(point_side(HPoint::affine(Vec3(0.5, 0.5, 0.5)), s) == Side::Interior);
    CHECK(point_side(HPoint::affine(Vec3(0.6, 0.6, 0.6)), s) == Side::Exterior);
  }

  TEST_CASE("line-sphere intersection classifies secants") {
    const QuadricForm s = QuadricForm::unit_sphere();
    const auto poles = line_sphere_intersect(kZ, s);
    REQUIRE(poles.size() == 2);
    const bool order = poles[0].vec4()[3] / poles[0].vec4()[0] > 0;
    CHECK(projectively_equal(poles[order ? 0 : 1].coords(), Eigen::Vector4d(1, 0, 0, 1)));
    CHECK(projectively_equal(poles[order ? 1 : 0].coords(), Eigen::Vector4d(1, 0, 0, -1)));
    CHECK(line_sphere_intersect(PLine::join(Vec4(0, 1, 0, 0), Vec4(0, 0, 1, 0)), s).empty());
    CHECK(line_sphere_intersect(PLine::join(Vec4(1, 1, 0, 0), Vec4(0, 0, 1, 0)), s).size() == 1);
  }

  TEST_CASE("polar and meet") {
    const QuadricForm s = QuadricForm::unit_sphere();
    Eigen::MatrixXd z(4, 2);
    z << 1, 0, 0, 0, 0, 0, 0, 1;
    const Subspace zs = Subspace::span(z);
    const Subspace p = polar(zs, s);
    Eigen::MatrixXd inf(4, 2);
    inf << 0, 0, 1, 0, 0, 1, 0, 0;
    CHECK(p.equals(Subspace::span(inf)));
    CHECK(polar(p, s).equals(zs));

    std::mt19937_64 rng(4);
    Eigen::MatrixXd r(6, 3);
    for (int j = 0; j < 3; ++j) r.col(j) = Eigen::VectorXd::NullaryExpr(6, [&] { return std::normal_distribution<>(0, 1)(rng); });
    const Subspace rs = Subspace::span(r);
    const Subspace pr = polar(rs, QuadricForm::klein());
    CHECK(pr.rank() == 3);
    CHECK(polar(pr, QuadricForm::klein()).equals(rs));

    // Tangent hyperplane of a Klein point contains it.
    const Subspace tangent = polar(Subspace::span(kX.klein()), QuadricForm::klein());
    CHECK(tangent.rank() == 5);
    CHECK(tangent.contains(kX.klein()));

    Eigen::MatrixXd a(4, 2), b(4, 2);
    a << 1, 0, 0, 1, 0, 0, 0, 0;
    b << 0, 0, 1, 0, 0, 1, 0, 0;
    CHECK(meet(Subspace::span(a), Subspace::span(b)).rank() == 1);
    CHECK(meet(rs, rs).equals(rs));
    Eigen::MatrixXd r4(6, 4);
    for (int j = 0; j < 4; ++j) r4.col(j) = Eigen::VectorXd::NullaryExpr(6, [&] { return std::normal_distribution<>(0, 1)(rng); });
    CHECK(meet(rs, Subspace::span(r4)).rank() == 1);
    CHECK_THROWS_AS(polar(zs, QuadricForm(Eigen::Matrix4d(Eigen::Vector4d(1, 1, 1, 0).asDiagonal()))), SingularForm);
  }

  TEST_CASE("signatures") {
    CHECK(QuadricForm::klein().signature() == Signature{3, 3, 0});
    CHECK(QuadricForm::unit_sphere().signature() == Signature{3, 1, 0});
    std::mt19937_64 rng(5);
    Eigen::MatrixXd r(6, 4);
    for (int j = 0; j < 4; ++j) r.col(j) = Eigen::VectorXd::NullaryExpr(6, [&] { return std::normal_distribution<>(0, 1)(rng); });
    Eigen::MatrixXd mix = Eigen::MatrixXd::NullaryExpr(4, 4, [&] { return std::normal_distribution<>(0, 1)(rng); });
    CHECK(signature_on(QuadricForm::klein(), r) == signature_on(QuadricForm::klein(), Eigen::MatrixXd(r * mix)));
  }

  TEST_CASE("rotation about z") {
    CHECK(rotate_z(Vec3(1, 0, 0), std::numbers::pi / 2).isApprox(Vec3(0, 1, 0)));
    CHECK((rotation_z4(0.3) * Vec4(1, 0, 0, 2)).isApprox(Vec4(1, 0, 0, 2)));
  }
}
