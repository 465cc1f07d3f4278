#include <doctest.h>

#include <cmath>

#include "glstar/constructions.hpp"
#include "glstar/line_search.hpp"
#include "glstar/verify.hpp"

using namespace glstar;

namespace {

// Antipodal except on the band 0.4 <= |z| <= 0.6, where q is paired with the
// point across the z-axis at the same height. Still a rotational fixed point
// free involution, but horizontal chords at height 0.5 meet the lines through
// the origin outside the sphere.
GlStar band_star() {
  return GlStar("band", [](const Vec3& q) {
    const double z = std::abs(q.z());
    return z >= 0.4 && z <= 0.6 ? Vec3(-q.x(), -q.y(), q.z()) : Vec3(-q);
  });
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("fibonacci sphere and formatting") {
    const auto pts = fibonacci_sphere(100);
    REQUIRE(pts.size() == 100);
    for (const Vec3& p : pts) CHECK(p.norm() == doctest::Approx(1.0));
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(0.1) == "0.10000000000000001");
    CHECK(format_point(Eigen::Vector3d(1, -0.0, 0.5)) == "(1,0,0.5)");
  }

  TEST_CASE("involution") {
    const CheckReport c = check_involution(clifford(Vec3::Zero()), 500);
    CHECK(c.passed);
    CHECK(c.max_residual < 1e-15);
    CHECK(c.samples_used == 500);
    CHECK(check_involution(builtin_example(), 1000).max_residual < 1e-9);

    const GlStar rotated("rotated", [](const Vec3& q) { return rotate_z(Vec3(-q), 0.01); });
    const CheckReport r = check_involution(rotated, 500);
    CHECK_FALSE(r.passed);
    CHECK(r.witness.has_value());
  }

  TEST_CASE("fixed point freeness") {
    const CheckReport c = check_fixed_point_free(clifford(Vec3::Zero()));
    CHECK(c.passed);
    CHECK(c.max_residual == doctest::Approx(2.0));
    CHECK(check_fixed_point_free(builtin_example(), 1000, 0.1).passed);
    const GlStar id("identity", [](const Vec3& q) { return q; });
    CHECK_FALSE(check_fixed_point_free(id).passed);
  }

  TEST_CASE("exterior meets") {
    CHECK(check_no_exterior_meet(clifford(Vec3::Zero()), 1000).passed);
    CHECK(check_no_exterior_meet(builtin_example(), 1000).passed);
    const GlStar bad = band_star();
    CHECK(check_involution(bad).passed);
    const CheckReport r = check_no_exterior_meet(bad, 2000);
    CHECK_FALSE(r.passed);
    CHECK(r.max_residual > 0.1);
    CHECK(r.witness.has_value());
  }

  TEST_CASE("coverage") {
    CHECK(check_coverage(clifford(Vec3::Zero()), 100).passed);
    CHECK(check_coverage(builtin_example(), 100).passed);
    CHECK_FALSE(check_coverage(band_star(), 200).passed);
  }

  TEST_CASE("line search finds the lines through a point") {
    const LineSearch ls(clifford(Vec3::Zero()));
    const auto hits = ls.lines_through(Vec4(1, 2, 0, 0));
    REQUIRE(hits.size() == 1);
    CHECK(same_line(hits[0].line, PLine::through_affine(Vec3(0, 0, 0), Vec3(1, 0, 0))));

    const GlStar b = builtin_example();
    const LineSearch lb(b);
    const Vec3 q(0.3, -0.5, std::sqrt(1 - 0.34));
    const PLine l = b.line_through(q);
    const Vec3 s = b.sigma(q);
    const Vec4 x = homogeneous(q + 1.7 * (q - s));
    const auto hb = lb.lines_through(x);
    REQUIRE(hb.size() == 1);
    CHECK(line_distance(hb[0].line, l) < 1e-7);
    CHECK(lb.lines_through(Vec4(1, 1.5, 0, 0.5)).size() == 1);
    CHECK(LineSearch(band_star()).lines_through(Vec4(1, 1.5, 0, 0.5)).size() == 2);
  }

  TEST_CASE("symmetry classifiers") {
    const GlStar c0 = clifford(Vec3::Zero());
    const GlStar b = builtin_example();
    const GlStar lat = latitudinal(pencil_from_mu(Fn1::power(2)));
    const GlStar sym = symmetric_star(Fn1::moebius01());
    CHECK(check_rotational(c0).passed);
    CHECK(check_rotational(b).passed);
    CHECK(check_rotational(clifford(Vec3(0, 0, 0.5))).passed);
    CHECK_FALSE(check_rotational(clifford(Vec3(0.5, 0, 0))).passed);

    CHECK(check_axial(c0).passed);
    CHECK(check_axial(lat).passed);
    CHECK_FALSE(check_axial(b).passed);
    CHECK_FALSE(check_axial(sym).passed);

    CHECK(check_symmetric(c0).passed);
    CHECK(check_symmetric(sym).passed);
    CHECK_FALSE(check_symmetric(b).passed);
    CHECK_FALSE(check_symmetric(lat).passed);
  }

  TEST_CASE("p_z and h root checks for the builtin functions") {
    const Fn1 t = Fn1::phi_r(1.5), s = Fn1::phi_r(2.0);
    // p_z(a) = (a^2 + 1)/a^2 (z - t)(z + s).
    CHECK(p_z(t, s, 0.5, 1.0) == doctest::Approx(2 * (0.5 - 0.625) * (0.5 + 0.6)));
    CHECK(std::isinf(a_z(t, s, 1.5)));
    CHECK(t(a_z(t, s, 0.5)) == doctest::Approx(0.5));
    CHECK(check_pz_monotone(t, s, {-0.9, -0.5, -0.1, 0.1, 0.5, 0.9, 1.5, -2.0}).passed);
    CHECK(check_h_roots(t, s, {0.2, 1.0, 2.5}, {-2.0, -1.1, 1.1, 2.0}).passed);
  }

  TEST_CASE("pencil separation") {
    CHECK(check_pencil_separation(pencil_from_mu(Fn1::power(2))).passed);
    CHECK(check_pencil_separation(pencil_from_mu(Fn1::identity())).passed);
  }

  TEST_CASE("checks are reproducible for a fixed seed") {
    const GlStar b = builtin_example();
    const CheckReport r1 = check_coverage(b, 50, 1e-9, 7);
    const CheckReport r2 = check_coverage(b, 50, 1e-9, 7);
    CHECK(r1.max_residual == r2.max_residual);
    CHECK(r1.passed == r2.passed);
  }
}
