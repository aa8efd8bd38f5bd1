// End-to-end Couette runs; slower than the unit suites.
#include <doctest.h>

#include "bgk/couette.hpp"
#include "bgk/study.hpp"

using namespace bgk;

TEST_CASE("O1 self-convergence on a short ladder") {
  RunConfig cfg;
  cfg.scheme = Scheme::O1;
  cfg.study_meshes = {25, 50, 100};
  cfg.study_reference = 200;
  const StudyResult r = run_convergence_study(cfg);
  CHECK(r.runs.size() == 4);
  for (const auto& run : r.runs) CHECK(run.status.converged);
  CHECK(order_of(r, Scheme::O1, Quantity::T) == doctest::Approx(1.0).epsilon(0.2));
  CHECK(r.errors.size() == 9);
}

TEST_CASE("O2_slope Couette profile") {
  RunConfig cfg;
  const CouetteResult r = run_couette(cfg);
  REQUIRE(r.status.converged);
  const auto& p = r.profile.records;
  CHECK(p.size() == 100);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    CHECK(p[i + 1].uy > p[i].uy);
    CHECK(p[i].uy > 0.0);
    CHECK(p[i].uy < 300.0);
  }
  // Antisymmetric about the midplane up to the 150 m/s offset.
  CHECK(p[49].uy + p[50].uy == doctest::Approx(300.0).epsilon(1e-3));
  CHECK(r.status.mass_drift < 1e-8);
}

TEST_CASE("Linear schemes give antisymmetric wall heat fluxes") {
  // Limiting G componentwise is not Galilean invariant, so only the linear
  // schemes keep the mirror symmetry exactly.
  RunConfig cfg;
  cfg.scheme = Scheme::O2SlopeNoLim;
  const CouetteResult r = run_couette(cfg);
  REQUIRE(r.status.converged);
  CHECK(r.profile.left.qx < 0.0);
  CHECK(r.profile.left.qx == doctest::Approx(-r.profile.right.qx).epsilon(1e-6));
}
