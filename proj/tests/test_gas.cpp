#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "bgk/gas_physics.hpp"

using namespace bgk;

TEST_CASE("viscosity power law") {
  const GasModel g = argon();
  CHECK(viscosity(g, g.T0) == doctest::Approx(g.mu0));
  CHECK(viscosity(g, 273.15) == doctest::Approx(2.117e-5));
  GasModel half = g;
  half.omega_visc = 0.5;
  CHECK(viscosity(half, 4 * half.T0) == doctest::Approx(2 * half.mu0));
}

TEST_CASE("relaxation time") {
  const GasModel g = argon();
  const double T = 300.0;
  CHECK(relaxation_time(g, viscosity(g, T) / (g.R * T), T) == doctest::Approx(1.0));
  CHECK(relaxation_time(g, 1e-3, 273.0) == doctest::Approx(3.7222095928735685e-07).epsilon(1e-12));
  CHECK(relaxation_time(g, 2e-3, 273.0) == doctest::Approx(0.5 * relaxation_time(g, 1e-3, 273.0)));
}

TEST_CASE("hard-sphere diameter and mean free path") {
  const GasModel g = argon();
  CHECK(vhs_diameter(g) == doctest::Approx(4.1690082113787845e-10).epsilon(1e-12));
  CHECK(mean_free_path(g, 2e-5, 273.0) == doctest::Approx(0.5 * mean_free_path(g, 1e-5, 273.0)));
}

TEST_CASE("Knudsen inversion") {
  const GasModel g = argon();
  const double rho = density_from_knudsen(g, 9.25e-3, 1.0, 273.0);
  CHECK(rho == doctest::Approx(9.280416577276605e-06).epsilon(1e-12));
  CHECK(mean_free_path(g, rho, 273.0) == doctest::Approx(9.25e-3).epsilon(1e-12));
  CHECK(density_from_knudsen(g, 2 * 9.25e-3, 1.0, 273.0) == doctest::Approx(0.5 * rho));

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> kn(1e-4, 1.0), L(1e-3, 10.0), T(50.0, 2000.0);
  for (int i = 0; i < 200; ++i) {
    const double k = kn(rng), l = L(rng), t = T(rng);
    const double back = mean_free_path(g, density_from_knudsen(g, k, l, t), t) / l;
    CHECK(std::abs(back - k) <= 1e-12 * k);
  }
  CHECK_THROWS_AS(density_from_knudsen(g, 0.0, 1.0, 273.0), std::invalid_argument);
}

TEST_CASE("gas model consistency") {
  CHECK_NOTHROW(argon().validate());
  GasModel g = argon();
  g.R = 300.0;
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  CHECK_THROWS_AS((WallSpec{-1.0, 0.0, 1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((WallSpec{273.0, 0.0, 0}.validate()), std::invalid_argument);
}
