#pragma once

#include "bgk/config.hpp"
#include "bgk/dg_scheme.hpp"
#include "bgk/fv_schemes.hpp"
#include "bgk/profile.hpp"
#include "bgk/steady_driver.hpp"

namespace bgk {

/// Discrete ingredients of a configured Couette problem.
struct CouetteCase {
  VelocityGrid grid;
  WallModel left, right;
  Mesh1D mesh;
  double rho0;  // initial uniform density from the Knudsen number
};

CouetteCase make_case(const RunConfig& cfg);

FvOptions fv_options(const RunConfig& cfg);
DgOptions dg_options(const RunConfig& cfg);
MarchOptions march_options(const RunConfig& cfg);

struct CouetteResult {
  Scheme scheme = Scheme::O2Slope;
  int cells = 0;
  RunStatus status;
  Profile profile;
  ReducedState fv;  // final state of an FV run
  DGState dg;       // final state of a DG run
};

/// Marches cfg to steady state from the uniform equilibrium at rest, or from
/// `start` prolonged onto cfg.cells when given (same scheme, cell count
/// dividing cfg.cells).
CouetteResult run_couette(const RunConfig& cfg, const CouetteResult* start = nullptr);

/// Mass-preserving prolongation by an integer factor: minmod-limited linear
/// reconstruction of each coarse cell, sampled at the fine cell centers.
ReducedState prolong(const ReducedState& coarse, int factor);

/// Exact prolongation of a piecewise-linear DG state.
DGState prolong(const DGState& coarse, int factor);

}  // namespace bgk
