#include <doctest.h>

#include <cmath>

#include "glstar/error.hpp"
#include "glstar/fn1.hpp"
#include "glstar/roots.hpp"
#include "glstar/threading.hpp"

using namespace glstar;

TEST_SUITE("roots") {
  TEST_CASE("polynomial evaluation and Descartes bound") {
    const Polynomial p{{1, 0, -7, 6}};  // (x - 1)(x - 2)(x + 3)
    CHECK(p(1.0) == 0.0);
    CHECK(p(2.0) == 0.0);
    CHECK(p(0.0) == 6.0);
    CHECK(p.descartes_sign_changes() == 2);
    const RootCount rc = positive_root_count(p);
    CHECK(rc.count == 2);
    REQUIRE(rc.roots.size() == 2);
    CHECK(rc.roots[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(rc.roots[1] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(rc.descartes_bound == 2);
  }

  TEST_CASE("double roots are found through exact zeros or clustered") {
    const RootCount rc = positive_root_count([](double a) { return (a - 1) * (a - 1) * (a - 1); });
    CHECK(rc.count == 1);
  }

  TEST_CASE("no positive roots") {
    CHECK(positive_root_count(Polynomial{{1, 2, 3}}).count == 0);
    CHECK(positive_root_count([](double a) { return a + 1; }).count == 0);
  }

  TEST_CASE("log grid endpoints") {
    const auto g = log_grid(1e-2, 1e2, 5);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == doctest::Approx(1e-2));
    CHECK(g[2] == doctest::Approx(1.0));
    CHECK(g.back() == doctest::Approx(1e2));
  }
}

TEST_SUITE("fn1") {
  TEST_CASE("phi_r values") {
    CHECK(Fn1::phi_r(1.5)(1.0) == doctest::Approx(0.625));
    CHECK(Fn1::phi_r(2.0)(1.0) == doctest::Approx(0.6));
    CHECK(Fn1::phi_r(2.0)(0.0) == 0.0);
    CHECK(Fn1::phi_r(2.0)(1e8) == doctest::Approx(1.0).epsilon(1e-7));
  }

  TEST_CASE("builtin kinds") {
    CHECK(Fn1::moebius01()(0.5) == doctest::Approx(1.0));
    CHECK(Fn1::power(2)(0.5) == doctest::Approx(0.25));
    CHECK(Fn1::affine(2, -1)(0.5) == doctest::Approx(0.0));
    CHECK(Fn1::tan_sin(1)(0.6) == doctest::Approx(0.75));
    CHECK(Fn1::neg_circle()(0.6) == doctest::Approx(-0.8));
    CHECK(Fn1::identity()(0.3) == 0.3);
  }

  TEST_CASE("tables interpolate monotonically and reject non-monotone data") {
    const Fn1 t = Fn1::table({0, 1, 2}, {0, 10, 11});
    CHECK(t(0.5) == doctest::Approx(5));
    CHECK(t(1.5) == doctest::Approx(10.5));
    CHECK(t(-1) == 0.0);
    CHECK(t(3) == 11.0);
    CHECK_THROWS_AS(Fn1::table({0, 1, 2}, {0, 2, 1}), InvalidInput);
    CHECK_THROWS_AS(Fn1::table({0}, {0}), InvalidInput);
  }

  TEST_CASE("inverse and monotonicity scan") {
    const Fn1 p = Fn1::power(3);
    CHECK(p.inverse(0.125, 0, 1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_FALSE(p.find_non_increase(0, 1).has_value());
    const auto bad = Fn1::affine(-1, 0).find_non_increase(0, 1);
    REQUIRE(bad.has_value());
  }
}

TEST_SUITE("threading") {
  TEST_CASE("parallel_for fills every slot and rethrows the lowest failure") {
    std::vector<int> out(1000, 0);
    parallel_for(out.size(), [&](std::size_t i) { out[i] = static_cast<int>(i) * 2; });
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i) * 2);
    try {
      parallel_for(100, [](std::size_t i) {
        if (i == 17 || i == 60) throw InvalidInput(std::to_string(i));
      });
      FAIL("expected an exception");
    } catch (const InvalidInput& e) {
      CHECK(std::string(e.what()).find("17") != std::string::npos);
    }
    CHECK(thread_count() >= 1);
  }
}
