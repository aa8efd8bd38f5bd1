#include <doctest.h>

#include <random>

#include "bgk/fv_schemes.hpp"
#include "bgk/steady_driver.hpp"
#include "helpers.hpp"

using namespace bgk;

namespace {

const Scheme kFvSchemes[] = {Scheme::O1, Scheme::O2Flux, Scheme::O2Slope, Scheme::O2SlopeNoLim,
                             Scheme::O2SlopeBcO1};

struct Setup {
  GasModel gas = argon();
  VelocityGrid grid = test::couette_grid();
  WallModel left = make_wall_model(WallSpec{273.0, 0.0, +1}, grid, gas.R);
  WallModel right = make_wall_model(WallSpec{273.0, 0.0, -1}, grid, gas.R);
  double rho0 = density_from_knudsen(gas, 9.25e-3, 1.0, 273.0);
};

double total_variation(const Eigen::ArrayXd& f) {
  double tv = 0;
  for (Eigen::Index i = 0; i < f.size(); ++i) tv += std::abs(f[(i + 1) % f.size()] - f[i]);
  return tv;
}

}  // namespace

TEST_CASE("scheme names round-trip") {
  for (Scheme s : kFvSchemes) CHECK(parse_scheme(scheme_name(s)) == s);
  CHECK(parse_scheme("DG") == Scheme::DG);
  CHECK(parse_scheme("o2-slope") == Scheme::O2Slope);
  CHECK_THROWS_AS(parse_scheme("O3"), std::invalid_argument);
}

TEST_CASE("reconstruction") {
  Eigen::ArrayXd linear(9);
  for (int j = 0; j < 9; ++j) linear[j] = 0.5 + 0.25 * j;  // cell centers at unit spacing
  SUBCASE("zero slopes give cell values") {
    const InterfaceStates s = reconstruct_interface_states(linear, 1.0, SlopeMode::Zero, 0.5);
    for (int j = 0; j <= 5; ++j) {
      CHECK(s.left[j] == linear[j + 1]);
      CHECK(s.right[j] == linear[j + 2]);
    }
  }
  SUBCASE("linear data is reproduced") {
    for (SlopeMode mode : {SlopeMode::Centered, SlopeMode::Limited}) {
      const InterfaceStates s = reconstruct_interface_states(linear, 1.0, mode, 0.5);
      for (int j = 0; j <= 5; ++j) {
        const double exact = 0.5 * (linear[j + 1] + linear[j + 2]);
        CHECK(s.left[j] == doctest::Approx(exact));
        CHECK(s.right[j] == doctest::Approx(exact));
      }
    }
  }
}

TEST_CASE("uniform equilibrium at rest is a steady state") {
  Setup c;
  const Mesh1D mesh(20, 1.0);
  const ReducedState eq = uniform_equilibrium(20, c.rho0, 273.0, c.grid, c.gas.R);
  // Rates against the state over one transport time dx / max|v|.
  const double t = mesh.dx() / c.grid.max_speed();
  for (Scheme s : kFvSchemes) {
    CAPTURE(scheme_name(s));
    const ReducedState r = fv_rhs(eq, mesh, c.grid, c.gas, c.left, c.right, s, 0.5);
    CHECK(t * r.F.abs().maxCoeff() <= 1e-12 * eq.F.abs().maxCoeff());
    CHECK(t * r.G.abs().maxCoeff() <= 1e-12 * eq.G.abs().maxCoeff());
  }
}

TEST_CASE("wall fluxes vanish and mass is conserved by the semi-discretisation") {
  Setup c;
  c.right = make_wall_model(WallSpec{300.0, 300.0, -1}, c.grid, c.gas.R);
  const Mesh1D mesh(12, 1.0);
  std::mt19937 rng(29);
  ReducedState st(12, 40);
  for (int i = 0; i < 12; ++i) {
    const CellState s = test::random_state(rng, 40);
    const CellState eq = reduced_maxwellians(c.rho0, 0.0, 0.0, 273.0, c.grid, c.gas.R);
    st.set_cell(i, CellState(eq.F * s.F, eq.G * s.G, eq.H * s.H));
  }
  for (Scheme s : kFvSchemes) {
    CAPTURE(scheme_name(s));
    FvOptions o;
    o.scheme = s;
    FvOperator op(mesh, c.grid, c.gas, c.left, c.right, o);
    ReducedState r;
    op.rhs(st, r);
    const double flux_scale = c.rho0 * std::sqrt(c.gas.R * 273.0);
    CHECK(std::abs(op.diagnostics().left_wall_flux) <= 1e-12 * flux_scale);
    CHECK(std::abs(op.diagnostics().right_wall_flux) <= 1e-12 * flux_scale);
    // Transport and relaxation rates of the total mass, for scale.
    const double rate_scale =
        c.rho0 * (c.grid.max_speed() / mesh.dx() + 1.0 / op.diagnostics().min_tau);
    const double dm = (r.F.matrix() * c.grid.weights().matrix()).sum() * mesh.dx();
    CHECK(std::abs(dm) <= 1e-12 * rate_scale);
  }
}

TEST_CASE("collisionless flag leaves pure transport") {
  Setup c;
  const Mesh1D mesh(10, 1.0);
  FvOptions o;
  o.scheme = Scheme::O1;
  o.collisionless = true;
  o.periodic = true;
  FvOperator op(mesh, c.grid, c.gas, c.left, c.right, o);
  ReducedState st = uniform_equilibrium(10, c.rho0, 273.0, c.grid, c.gas.R);
  st.F.row(3) *= 2.0;
  ReducedState r;
  op.rhs(st, r);
  const auto& v = c.grid.nodes();
  for (int k = 0; k < 40; ++k) {
    const double f2 = st.F(2, k), f3 = st.F(3, k), f4 = st.F(4, k);
    const double expect = v[k] > 0 ? -v[k] * (f3 - f2) / mesh.dx() : -v[k] * (f4 - f3) / mesh.dx();
    CHECK(r.F(3, k) == doctest::Approx(expect));
  }
}

TEST_CASE("Yee flux limiter is TVD under Euler at CFL 2/3") {
  Setup c;
  const int n = 40;
  const Mesh1D mesh(n, 1.0);
  FvOptions o;
  o.scheme = Scheme::O2Flux;
  o.collisionless = true;
  o.periodic = true;
  FvOperator op(mesh, c.grid, c.gas, c.left, c.right, o);
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ReducedState st(n, 40);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < 40; ++k) st.F(i, k) = st.G(i, k) = st.H(i, k) = u(rng) + (i > n / 2);
  const double dt = cfl_timestep(mesh, c.grid, stable_cfl(Scheme::O2Flux, 0.5,
                                                          TimeIntegrator::ForwardEuler), 1e9);
  ReducedState r;
  for (int step = 0; step < 30; ++step) {
    Eigen::ArrayXd tv(40);
    for (int k = 0; k < 40; ++k) tv[k] = total_variation(st.F.col(k));
    op.rhs(st, r);
    st.F += dt * r.F;
    st.G += dt * r.G;
    st.H += dt * r.H;
    for (int k = 0; k < 40; ++k) CHECK(total_variation(st.F.col(k)) <= tv[k] * (1 + 1e-12));
  }
}

TEST_CASE("total mass") {
  Setup c;
  const Mesh1D mesh(8, 2.0);
  const ReducedState eq = uniform_equilibrium(8, 3e-5, 273.0, c.grid, c.gas.R);
  CHECK(total_mass(eq, mesh, c.grid) == doctest::Approx(6e-5).epsilon(1e-12));
}

TEST_CASE("operator validation") {
  Setup c;
  FvOptions o;
  o.alpha = 0.3;
  CHECK_THROWS_AS(FvOperator(Mesh1D(10, 1.0), c.grid, c.gas, c.left, c.right, o),
                  std::invalid_argument);
  o.alpha = 0.5;
  o.scheme = Scheme::DG;
  CHECK_THROWS_AS(FvOperator(Mesh1D(10, 1.0), c.grid, c.gas, c.left, c.right, o),
                  std::invalid_argument);
  o.scheme = Scheme::O1;
  CHECK_THROWS_AS(FvOperator(Mesh1D(10, 1.0), c.grid, c.gas, c.right, c.left, o),
                  std::invalid_argument);
}

TEST_CASE("bad cell state names the cell") {
  Setup c;
  ReducedState st = uniform_equilibrium(6, c.rho0, 273.0, c.grid, c.gas.R);
  st.F.row(4).setZero();
  st.G.row(4).setZero();
  st.H.row(4).setZero();
  CHECK_THROWS_WITH_AS(fv_rhs(st, Mesh1D(6, 1.0), c.grid, c.gas, c.left, c.right, Scheme::O1, 0.5),
                       doctest::Contains("cell 4"), StateError);
}
