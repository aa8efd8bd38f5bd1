#include <doctest.h>

#include <random>

#include "bgk/equilibrium.hpp"
#include "helpers.hpp"

using namespace bgk;

namespace {

const double kR = 208.24;

Moments target(double rho, double ux, double uy, double T) {
  Moments m;
  m.rho = rho;
  m.ux = ux;
  m.uy = uy;
  m.T = T;
  m.E = rho * (0.5 * (ux * ux + uy * uy) + 1.5 * kR * T);
  return m;
}

}  // namespace

TEST_CASE("conservative equilibrium reproduces the target sums") {
  const VelocityGrid g = test::couette_grid();
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> rho(1e-6, 1e-3), u(-150, 150), uy(-300, 300),
      T(150, 400);
  for (int i = 0; i < 200; ++i) {
    const Moments m = target(rho(rng), u(rng), uy(rng), T(rng));
    const EquilibriumResult r = conservative_equilibrium(m, g, kR);
    const Eigen::Vector4d c = conserved_moments(r.state.F, r.state.G, r.state.H, g);
    const double scale = m.rho * std::sqrt(kR * m.T);
    CHECK(std::abs(c[0] - m.rho) <= 1e-12 * m.rho);
    CHECK(std::abs(c[1] - m.rho * m.ux) <= 1e-12 * scale);
    CHECK(std::abs(c[2] - m.rho * m.uy) <= 1e-12 * scale);
    CHECK(std::abs(c[3] - m.E) <= 1e-12 * m.E);
    CHECK(r.residual <= kEquilibriumTolerance);
  }
}

TEST_CASE("discrete Maxwellian sums are a fixed point") {
  const VelocityGrid g = test::couette_grid();
  const CellState s = reduced_maxwellians(1e-4, 20.0, 100.0, 280.0, g, kR);
  const Moments m = compute_moments(s, g, kR);
  const MaxwellianParams exact{1e-4, 20.0, 100.0, 280.0};
  const EquilibriumResult r = conservative_equilibrium(m, g, kR, &exact);
  CHECK(r.iterations == 0);
  CHECK(((r.state.F - s.F).abs() <= 1e-12 * s.F.maxCoeff()).all());
}

TEST_CASE("correction is small on a fine grid") {
  const VelocityGrid g = build_uniform_grid(400, -3000.0, 3000.0);
  const Moments m = target(1e-3, 30.0, 80.0, 273.0);
  const EquilibriumResult r = conservative_equilibrium(m, g, kR);
  CHECK(test::rel_diff(r.params.rho, m.rho) < 1e-6);
  CHECK(test::rel_diff(r.params.T, m.T) < 1e-6);
  CHECK(std::abs(r.params.ux - m.ux) < 1e-6 * std::sqrt(kR * m.T));
}

TEST_CASE("non-convergence carries the residual") {
  const VelocityGrid g = test::couette_grid();
  // Far outside the velocity bounds: the grid cannot carry this state.
  const Moments m = target(1.0, 5000.0, 0.0, 273.0);
  try {
    conservative_equilibrium(m, g, kR);
    FAIL("expected EquilibriumError");
  } catch (const EquilibriumError& e) {
    CHECK(e.residual() > kEquilibriumTolerance);
  }
}

TEST_CASE("relaxation field") {
  const VelocityGrid g = test::couette_grid();
  const GasModel gas = argon();
  Eigen::ArrayXXd F(3, 40), G(3, 40), H(3, 40), M, N, P;
  Eigen::ArrayXd tau;
  for (int i = 0; i < 3; ++i) {
    const CellState s = reduced_maxwellians(1e-5 * (i + 1), 10.0 * i, 50.0, 260.0 + 10 * i, g, kR);
    F.row(i) = s.F.transpose();
    G.row(i) = s.G.transpose();
    H.row(i) = s.H.transpose();
  }
  RelaxationField field(g, kR, true);
  field.evaluate(F, G, H, gas, M, N, P, tau);
  for (int i = 0; i < 3; ++i) {
    const Eigen::Vector4d a = conserved_moments(F.row(i).transpose(), G.row(i).transpose(),
                                                H.row(i).transpose(), g);
    const Eigen::Vector4d b = conserved_moments(M.row(i).transpose(), N.row(i).transpose(),
                                                P.row(i).transpose(), g);
    CHECK(std::abs(a[0] - b[0]) <= 1e-12 * a[0]);
    CHECK(std::abs(a[3] - b[3]) <= 1e-12 * a[3]);
    const Moments m = compute_moments(F.row(i).transpose(), G.row(i).transpose(),
                                      H.row(i).transpose(), g, kR);
    CHECK(tau[i] == doctest::Approx(relaxation_time(gas, m.rho, m.T)));
  }

  SUBCASE("bad state names the row") {
    F.row(1).setZero();
    G.row(1).setZero();
    H.row(1).setZero();
    try {
      field.evaluate(F, G, H, gas, M, N, P, tau);
      FAIL("expected StateError");
    } catch (const StateError& e) {
      CHECK(e.point() == 1);
      CHECK(e.reason() == "vacuum state");
    }
  }
}
