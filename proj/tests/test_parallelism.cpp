#include <doctest.h>

#include <cmath>
#include <numbers>

#include "glstar/constructions.hpp"
#include "glstar/parallelism.hpp"

using namespace glstar;

namespace {

const PLine kZ = PLine::join(Vec4(1, 0, 0, 0), Vec4(0, 0, 0, 1));

GlStar band_star() {
  return GlStar("band", [](const Vec3& q) {
    const double z = std::abs(q.z());
    return z >= 0.4 && z <= 0.6 ? Vec3(-q.x(), -q.y(), q.z()) : Vec3(-q);
  });
}

}  // namespace

TEST_SUITE("parallelism") {
  TEST_CASE("canonical embedding") {
    const EmbeddedStar es = embed_star(clifford(Vec3::Zero()));
    Eigen::MatrixXd g = es.basis.transpose() * klein_gram() * es.basis;
    Eigen::VectorXd diag(6);
    diag << 1, 1, 1, -1, -1, -1;
    CHECK(g.isApprox(Eigen::MatrixXd(diag.asDiagonal())));
    CHECK(signature_on(QuadricForm::klein(), es.U) == Signature{3, 1, 0});
    CHECK(signature_on(QuadricForm::klein(), es.C) == Signature{0, 2, 0});
    // iso is an isometry from the sphere form.
    const QuadricForm s = QuadricForm::unit_sphere();
    const Vec4 w(0.3, -1, 2, 0.5), v(1, 0.2, 0.1, -0.7);
    CHECK(klein_form(es.iso(w), es.iso(v)) == doctest::Approx(s(w, v)));
    CHECK(es.project(es.iso(w)).isApprox(w));
    CHECK(es.project(kZ.klein()).isApprox(Vec4(0, 0, 0, 0.5)));
  }

  TEST_CASE("H-lines of the Clifford star") {
    const EmbeddedStar es = embed_star(clifford(Vec3::Zero()));
    const HfdLineSet hfd(es);
    const Line5 hz = hfd.of(kZ);
    CHECK(secant_discriminant(hz) < 0);
    const ParallelClass cls = class_from_hfd_line(hz);
    CHECK(cls.contains(kZ));
    CHECK(is_elliptic(signature_on(QuadricForm::klein(), cls.W)));
    const DimResult d = dim_parallelism(hfd);
    CHECK(d.dim == 2);
    CHECK(d.gap_ratio > 1e6);
    CHECK(check_zero_secants(hfd).passed);
    // A line meeting K is refused.
    CHECK_THROWS_AS(class_from_hfd_line({kZ.unit(), es.basis.col(0).normalized()}), NotZeroSecant);
  }

  TEST_CASE("spread lines in the Clifford class of Z") {
    const EmbeddedStar es = embed_star(clifford(Vec3::Zero()));
    const Parallelism par(es);
    const ParallelClass cls = par.parallel_class_of(kZ);
    CHECK(same_line(spread_line_through(cls, HPoint(Eigen::Vector4d(1, 0, 0, 0))), kZ));
    const PLine m = spread_line_through(cls, HPoint(Eigen::Vector4d(1, 1, 0, 0)));
    CHECK(m.contains(Vec4(1, 1, 0, 0), 1e-9));
    CHECK(std::abs(klein_form(m.unit(), kZ.unit())) > 0.1);
    CHECK(cls.contains(m));
    CHECK(same_line(par.parallel_through(HPoint(Eigen::Vector4d(1, 1, 0, 0)), kZ), m));
  }

  TEST_CASE("dimension separates Clifford from non-Clifford stars") {
    CHECK(dim_parallelism(HfdLineSet(embed_star(builtin_example()))).dim == 3);
    CHECK(dim_parallelism(HfdLineSet(embed_star(symmetric_star(Fn1::moebius01())))).dim == 3);
    CHECK(dim_parallelism(HfdLineSet(embed_star(clifford(Vec3(0.3, 0.2, -0.1))))).dim == 2);
    CHECK_THROWS_AS(dim_parallelism(HfdLineSet(embed_star(builtin_example())), 5), InvalidInput);
  }

  TEST_CASE("class checks on the builtin example") {
    const EmbeddedStar es = embed_star(builtin_example());
    const Parallelism par(es);
    CHECK(check_hfd(par, 30).passed);
    CHECK(check_class_signatures(par, 20).passed);
    CHECK(check_spread_disjoint(par, 30).passed);
    CHECK(check_parallel_queries(par, 30).passed);
  }

  TEST_CASE("torus action") {
    const EmbeddedStar es = embed_star(builtin_example());
    CHECK(check_torus_fixes_classes(es, 50).passed);
    const Mat6 t = torus_rotation(es, 0.7);
    CHECK((t.transpose() * klein_gram() * t - klein_gram()).cwiseAbs().maxCoeff() < 1e-12);
    // Rotating d4 into d5 moves the H-lines of a non-Clifford star.
    const auto wrong = [&](double th) { return plane_rotation(es, 3, 4, th); };
    CHECK_FALSE(check_torus_fixes_classes(es, 50, wrong).passed);
  }

  TEST_CASE("two star lines through an encoded point raise HfdViolation") {
    const EmbeddedStar es = embed_star(band_star());
    const Parallelism par(es);
    // Lift the exterior point x = (1.5, 0, 0.5), which lies on two lines of
    // the band star, to a line whose projection to U is iso(x).
    const Vec4 x(1, 1.5, 0, 0.5);
    const double s = QuadricForm::unit_sphere()(x, x);
    const Vec6 k = es.iso(x) + std::sqrt(s) * es.basis.col(4);
    const PLine l = klein_lift(k, 1e-8).line;
    CHECK_THROWS_AS(par.parallel_class_of(l), HfdViolation);
  }

  TEST_CASE("random lines are seeded") {
    const auto a = random_lines(5, 3), b = random_lines(5, 3), c = random_lines(5, 4);
    for (int i = 0; i < 5; ++i) CHECK(a[static_cast<std::size_t>(i)].coords() == b[static_cast<std::size_t>(i)].coords());
    CHECK_FALSE(a[0].coords() == c[0].coords());
  }
}
