#include <doctest.h>

#include <cmath>
#include <numbers>

#include "glstar/constructions.hpp"
#include "glstar/star.hpp"

using namespace glstar;

TEST_SUITE("glstar") {
  TEST_CASE("clifford at the origin is antipodal") {
    const GlStar c = clifford(Vec3::Zero());
    for (const Vec3& q : {Vec3(1, 0, 0), Vec3(0, 0, 1), Vec3(0.6, 0, 0.8), Vec3(0, 0.28, 0.96)}) {
      CHECK((c.sigma(q) + q).norm() < 1e-15);
    }
    CHECK(same_line(c.line_through(Vec3(1, 0, 0)), PLine::through_affine(Vec3(0, 0, 0), Vec3(1, 0, 0))));
  }

  TEST_CASE("meridian lines of rotational stars") {
    const GlStar s = symmetric_star(Fn1::moebius01());
    const auto& prof = *s.profile();
    const PLine z = PLine::through_affine(Vec3(0, 0, 0), Vec3(0, 0, 1));
    const PLine x = PLine::through_affine(Vec3(0, 0, 0), Vec3(1, 0, 0));
    CHECK(same_line(meridian_line(prof, 1.0), z));
    CHECK(same_line(meridian_line(prof, 0.0), x));
    CHECK(same_line(s.line_through(Vec3(0, 0, 1)), z));
    // Equator maps antipodally.
    const Vec3 e(std::cos(0.7), std::sin(0.7), 0);
    CHECK((s.sigma(e) + e).norm() < 1e-12);

    // L_{1/2} passes through p_{1/2} and lies on x^2 + y^2 - z^2 = 1/2.
    const PLine l = meridian_line(prof, 0.5);
    CHECK(l.contains(homogeneous(Vec3(std::sqrt(3.0) / 2, 0, 0.5))));
    const SurfaceEntry e12 = prof.entry_at(0.5);
    CHECK(e12.kind == SurfaceKind::Hyperboloid);
    CHECK(e12.a == doctest::Approx(1.0));
    CHECK(e12.b == doctest::Approx(0.0));
    CHECK(e12.c * e12.c == doctest::Approx(0.5));
    const auto pts = l.spanning_points();
    for (double s2 : {-2.0, 0.3, 5.0}) {
      const Vec4 w = pts[0] + s2 * pts[1];
      const Vec3 p = w.tail<3>() / w[0];
      CHECK(p.x() * p.x() + p.y() * p.y() - p.z() * p.z() == doctest::Approx(0.5));
    }
    // z(sigma(p_t)) = -t for symmetric stars.
    CHECK(s.sigma(meridian_point(0.5)).z() == doctest::Approx(-0.5));
  }

  TEST_CASE("ordinary star from t/sqrt(1-t^2) passes through the origin") {
    const GlStar s = symmetric_star(Fn1::tan_sin(1));
    for (double t : {0.1, 0.4, 0.8}) CHECK(meridian_line(*s.profile(), t).contains(Vec4(1, 0, 0, 0), 1e-9));
  }

  TEST_CASE("handedness") {
    const PLine z = PLine::through_affine(Vec3(0, 0, 0), Vec3(0, 0, 1));
    CHECK(handedness_of(z) == LineHandedness::MeetsAxis);
    const GlStar fg = fg_star(Fn1::power(2), Fn1::affine(1, -1));
    for (double t : {0.2, 0.5, 0.8}) {
      const PLine l = meridian_line(*fg.profile(), t);
      CHECK(handedness_of(l) == LineHandedness::Right);
      const Vec3 p = meridian_point(t);
      const Vec3 q = fg.sigma(p);
      const Vec3 pm(p.x(), -p.y(), p.z()), qm(q.x(), -q.y(), q.z());
      CHECK(handedness_of(PLine::through_affine(pm, qm)) == LineHandedness::Left);
    }
  }

  TEST_CASE("second intersection") {
    const PLine z = PLine::through_affine(Vec3(0, 0, 0), Vec3(0, 0, 1));
    CHECK(projectively_equal(second_intersection(z, Vec3(0, 0, 1)).coords(), Eigen::Vector4d(1, 0, 0, -1)));
    const PLine x = PLine::through_affine(Vec3(0, 0, 0), Vec3(1, 0, 0));
    CHECK(projectively_equal(second_intersection(x, Vec3(1, 0, 0)).coords(), Eigen::Vector4d(1, -1, 0, 0)));
    const PLine tangent = PLine::through_affine(Vec3(0, 0, 1), Vec3(1, 0, 1));
    CHECK_THROWS_AS(second_intersection(tangent, Vec3(0, 0, 1)), NotTwoSecant);
  }

  TEST_CASE("surface entries and meshes") {
    const SurfaceEntry h = SurfaceEntry::quadric(1.0, 0.0, 1.0 / std::sqrt(2.0));
    CHECK(h.kind == SurfaceKind::Hyperboloid);
    const Mesh m = surface_mesh(h, 8, 12);
    CHECK_FALSE(m.triangles.empty());
    for (const Vec3& v : m.vertices) CHECK(std::abs(h.residual(v)) < 1e-9);
    const Mesh cone = surface_mesh(SurfaceEntry::quadric(1.0, 0.0, 0.0), 8, 12);
    CHECK(SurfaceEntry::quadric(1.0, 0.0, 0.0).kind == SurfaceKind::Cone);
    CHECK_FALSE(cone.triangles.empty());
    const Mesh axis = surface_mesh(SurfaceEntry::axis(), 5, 5);
    CHECK(axis.triangles.empty());
    CHECK(axis.segments.size() == 4);
    CHECK_THROWS_AS(surface_mesh(h, 1, 5), InvalidInput);
  }

  TEST_CASE("entry_of_line recovers a cone through the origin") {
    const SurfaceEntry e = entry_of_line(Vec3(0.6, 0, 0.8), Vec3(-0.6, 0, -0.8));
    CHECK(e.kind == SurfaceKind::Cone);
    CHECK(e.a == doctest::Approx(0.8 / 0.6));
    CHECK(std::abs(e.b) < 1e-12);
  }
}
