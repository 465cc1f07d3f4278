#include <doctest.h>

#include <cmath>
#include <numbers>

#include "glstar/constructions.hpp"

using namespace glstar;

namespace {

std::string failed_condition(const std::function<void()>& build) {
  try {
    build();
  } catch (const ConditionFailed& e) {
    return e.condition();
  }
  return "";
}

double sigma_distance(const GlStar& a, const GlStar& b, int n = 500) {
  double worst = 0;
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / n;
    const double r = std::sqrt(1 - z * z);
    const double phi = 2.399963229728653 * i;
    const Vec3 q(r * std::cos(phi), r * std::sin(phi), z);
    worst = std::max(worst, (a.sigma(q) - b.sigma(q)).norm());
  }
  return worst;
}

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("clifford with an off-origin center") {
    const GlStar c = clifford(Vec3(0, 0, 0.5));
    CHECK((c.sigma(Vec3(0, 0, 1)) - Vec3(0, 0, -1)).norm() < 1e-12);
    CHECK((c.sigma(Vec3(1, 0, 0)) - Vec3(-0.6, 0, 0.8)).norm() < 1e-12);
    CHECK_THROWS_AS(clifford(Vec3(1, 0, 0)), InvalidCenter);
    CHECK_THROWS_AS(clifford(Vec3(0, 2, 0)), InvalidCenter);
  }

  TEST_CASE("symmetric stars") {
    CHECK(symmetric_c_squared(1.0, 0.5) == doctest::Approx(0.5));
    // c^2 = 2t^3 / (1 - t) for the Moebius profile.
    for (double t : {0.2, 0.5, 0.7}) {
      const double a = t / (1 - t);
      CHECK(symmetric_c_squared(a, t) == doctest::Approx(2 * t * t * t / (1 - t)));
    }
    CHECK(failed_condition([] { symmetric_star(Fn1::tan_sin(2)); }) == "(2)");
    CHECK(failed_condition([] { symmetric_star(Fn1::power(2)); }) != "");
    CHECK(sigma_distance(symmetric_star(Fn1::tan_sin(1)), clifford(Vec3::Zero())) < 1e-9);
  }

  TEST_CASE("fg stars") {
    const GlStar s = fg_star(Fn1::power(2), Fn1::affine(1, -1));
    const Vec3 img = s.sigma(meridian_point(0.5));
    CHECK(img.x() == doctest::Approx(-0.5));
    CHECK(img.y() == doctest::Approx(-std::sqrt(0.6875)));
    CHECK(img.z() == doctest::Approx(-0.25));
    CHECK(failed_condition([] { fg_star(Fn1::power(2), Fn1::affine(0.5, -1)); }) == "g-boundary");
    CHECK(sigma_distance(fg_star(Fn1::identity(), Fn1::neg_circle()), clifford(Vec3::Zero())) < 1e-9);
  }

  TEST_CASE("eqn stars") {
    // b = 0 with c from the Moebius profile reproduces the symmetric star.
    const Fn1 c = Fn1::custom("moebius_c", [](double a) {
      const double t = a / (1 + a);
      return std::sqrt(std::max(0.0, a * a - t * t * (1 + a * a)));
    });
    const GlStar e = eqn_star(Fn1::affine(0, 0), c);
    CHECK(sigma_distance(e, symmetric_star(Fn1::moebius01()), 200) < 1e-7);
    CHECK(failed_condition([] { eqn_star(Fn1::affine(0.5, 0), Fn1::affine(0.5, 0)); }) == "(2)");
    CHECK(failed_condition([] { eqn_star(Fn1::affine(0, 0), Fn1::affine(1.5, 0)); }) == "(1)");
  }

  TEST_CASE("param stars and the builtin example") {
    const ParamCoefficients pc = param_coefficients(0.625, 0.6, 1.0);
    CHECK(pc.b == doctest::Approx(0.025));
    CHECK(pc.c_squared == doctest::Approx(0.249375));
    // Inequality (7) at a = 1: a^2/(a^2+1) - ts >= a^2 ((t - s)/2)^2 ... holds with margin.
    CHECK(0.5 - 0.625 * 0.6 >= 2 * 0.0125 * 0.0125);

    const GlStar b = builtin_example();
    const SurfaceEntry e = b.profile()->entry_at(0.5);
    CHECK(e.a == doctest::Approx((-1.5 + std::sqrt(8.25)) / 2).epsilon(1e-9));

    CHECK(param_h(Fn1::phi_r(1.5), Fn1::phi_r(2.0), 1.0, 0.5, 1.0) == doctest::Approx(0.525));
    CHECK(builtin_numerator(1.0, 0.5)(1.0) / builtin_denominator()(1.0) == doctest::Approx(21.0 / 40.0));
    const Polynomial l = builtin_numerator(1.0, 0.5);
    const std::vector<double> expect{2, 7, 8, 5.25, 3.25, -3, -1.5};
    REQUIRE(l.coeffs.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) CHECK(l.coeffs[i] == doctest::Approx(expect[i]));
    CHECK(l.descartes_sign_changes() == 1);
  }

  TEST_CASE("param star with t = s is symmetric") {
    for (double a : {1e-3, 0.1, 1.0, 10.0, 1e3}) {
      const double t = Fn1::phi_r(1.5)(a);
      CHECK(std::abs(param_coefficients(t, t, a).b) < 1e-12);
    }
    CHECK(failed_condition([] { param_star(Fn1::phi_r(1.5), Fn1::phi_r(1.5)); }) == "");
  }

  TEST_CASE("pencils") {
    const GlPencil p = pencil_from_mu(Fn1::power(2));
    constexpr double kPi = std::numbers::pi;
    CHECK(p.sigma1_angle(0.0) == doctest::Approx(kPi));
    CHECK(p.sigma1_angle(kPi / 2) == doctest::Approx(3 * kPi / 2));
    for (double phi : {0.1, 1.0, 2.0, 3.5, 5.0}) {
      CHECK(p.sigma1_angle(p.sigma1_angle(phi)) == doctest::Approx(phi).epsilon(1e-9));
      // Commutes with the reflection in the z-axis: phi -> pi - phi.
      const double lhs = p.sigma1_angle(std::fmod(3 * kPi - phi, 2 * kPi));
      const double rhs = std::fmod(3 * kPi - p.sigma1_angle(phi), 2 * kPi);
      CHECK(std::abs(std::remainder(lhs - rhs, 2 * kPi)) < 1e-9);
    }
    CHECK(failed_condition([] { pencil_from_mu(Fn1::affine(-1, 1)); }) == "endpoint");

    const GlStar diam = latitudinal(pencil_from_mu(Fn1::identity()));
    CHECK(sigma_distance(diam, clifford(Vec3::Zero()), 200) < 1e-9);

    // The star restricted to the meridian plane is sigma1.
    const GlStar lat = latitudinal(p);
    for (double ang : {0.2, 1.0, 1.4}) {
      const Vec3 q(std::cos(ang), 0, std::sin(ang));
      const double s1 = p.sigma1_angle(ang);
      CHECK((lat.sigma(q) - Vec3(std::cos(s1), 0, std::sin(s1))).norm() < 1e-9);
    }
  }

  TEST_CASE("omega and parabola interpolation") {
    const auto w = omega(1, 0);
    CHECK(w.isApprox(Eigen::Vector2d(0, 1)));
    CHECK(omega(std::sqrt(3.0) / 2, 0.5).isApprox(Eigen::Vector2d(0.5, 0.75)));
    CHECK(omega_inv(0.5, 0.75).isApprox(Vec3(std::sqrt(0.75), 0, 0.5)));
    CHECK_THROWS_AS(omega_inv(0, -1), InvalidInput);

    const Parabola p{1.0, 0.0, 0.5};
    const Parabola q{2.0, 0.4, 0.1};
    const Parabola m = interpolate(p, q, 0.5);
    CHECK(m.beta >= 0.0);
    CHECK(m.beta <= 0.4);
    for (double u : {-1.0, 0.3, 2.0}) CHECK(m(u) == doctest::Approx(0.5 * p(u) + 0.5 * q(u)));

    const Parabola h = Parabola::from_hyperbola(2.0, 0.1, 0.6);
    CHECK(h.alpha == doctest::Approx(0.25));
    CHECK(h.beta == doctest::Approx(0.1));
    CHECK(h.gamma == doctest::Approx(0.09));
  }

  TEST_CASE("parabola stars") {
    const ParabolaSeq seq = builtin_parabola_sequence();
    REQUIRE(seq.items.size() == 13);
    const GlStar ps = parabola_star(seq);
    const GlStar b = builtin_example();
    for (double t : {0.1, 0.5, 0.9}) CHECK((ps.profile()->image(t) - b.profile()->image(t)).norm() < 0.05);

    // Reversed order is accepted (alpha monotone either way).
    ParabolaSeq rev = seq;
    std::reverse(rev.items.begin(), rev.items.end());
    CHECK(failed_condition([&] { parabola_star(rev); }) == "");

    ParabolaSeq shifted = seq;
    shifted.items.front().beta = 0.1;
    CHECK(failed_condition([&] { parabola_star(shifted); }) == "(5)");

    ParabolaSeq unsorted = seq;
    std::swap(unsorted.items[4], unsorted.items[5]);
    CHECK(failed_condition([&] { parabola_star(unsorted); }) == "(1)");
  }
}
