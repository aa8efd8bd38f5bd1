#include <doctest.h>

#include <random>

#include "bgk/limiters.hpp"

using namespace bgk;

TEST_CASE("minmod3 picks the smallest magnitude of a common sign") {
  CHECK(minmod3(1.0, 2.0, 3.0) == 1.0);
  CHECK(minmod3(-3.0, -1.0, -2.0) == -1.0);
  CHECK(minmod3(1.0, -2.0, 3.0) == 0.0);
  CHECK(minmod3(0.0, 2.0, 3.0) == 0.0);
}

TEST_CASE("minmod3 matches the branching definition") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 1000; ++i) {
    const double a = u(rng), b = u(rng), c = u(rng);
    double ref = 0.0;
    if (a > 0 && b > 0 && c > 0) ref = std::min({a, b, c});
    if (a < 0 && b < 0 && c < 0) ref = std::max({a, b, c});
    CHECK(minmod3(a, b, c) == ref);
  }
}

TEST_CASE("upwind flux") {
  CHECK(upwind_flux(3.0, 7.0, 2.0) == 6.0);
  CHECK(upwind_flux(3.0, 7.0, -2.0) == -14.0);
  CHECK(upwind_flux(5.0, 5.0, -1.5) == -7.5);
}

TEST_CASE("yee flux") {
  SUBCASE("constant data gives v c") { CHECK(yee_flux(2.0, 2.0, 2.0, 2.0, 3.0) == 6.0); }
  SUBCASE("linear data gives the midpoint value") {
    // f_j = j around i = 5
    CHECK(yee_limiter(4.0, 5.0, 6.0, 7.0) == 1.0);
    CHECK(yee_flux(4.0, 5.0, 6.0, 7.0, 1.0) == doctest::Approx(5.5));
    CHECK(yee_flux(4.0, 5.0, 6.0, 7.0, -1.0) == doctest::Approx(-5.5));
  }
  SUBCASE("extremum falls back to upwind") {
    CHECK(yee_limiter(0.0, 1.0, 0.0, 1.0) == 0.0);
    CHECK(yee_flux(0.0, 1.0, 0.0, 1.0, 2.0) == 2.0);
  }
  SUBCASE("ghost pair equal to the first ghost kills the wall limiter") {
    CHECK(yee_limiter(0.3, 0.3, 0.9, 1.4) == 0.0);
  }
}

TEST_CASE("MC slopes") {
  CHECK(centered_slope(0.0, 2.0, 1.0) == 1.0);
  CHECK(mc_limited_slope(0.0, 1.0, 2.0, 1.0, 0.5) == 1.0);
  CHECK(mc_limited_slope(0.0, 1.0, 0.0, 1.0, 0.5) == 0.0);
  CHECK(mc_limited_slope(0.0, 1.0, 4.0, 1.0, 0.5) == 1.0);
  CHECK(mc_limited_slope(0.0, 1.0, 4.0, 1.0, 1.0) == 2.0);
  CHECK_THROWS_WITH_AS(mc_limited_slope(0.0, 1.0, 4.0, 1.0, 0.3),
                       doctest::Contains("alpha >= 1/2 required"), std::invalid_argument);
  CHECK_THROWS_AS(check_mc_alpha(1.5), std::invalid_argument);
}

TEST_CASE("linear data keeps its slope for every admissible alpha") {
  for (double alpha : {0.5, 0.75, 1.0})
    CHECK(mc_limited_slope(1.0, 1.5, 2.0, 0.25, alpha) == doctest::Approx(2.0));
}
