#pragma once

#include <Eigen/Core>

#include "bgk/gas_physics.hpp"
#include "bgk/velocity_grid.hpp"

namespace bgk {

/// A diffuse wall together with its discrete unit-density Maxwellian triple
/// M[1, uw, Tw] (and N, P) and the half-range flux that normalises sigma_w.
struct WallModel {
  WallSpec spec;
  CellState maxwellian;
  double emitted_flux = 0.0;  // sum over incoming k of v_k n M_k w_k, > 0
};

/// With `conservative` the wall triple is the discrete conservative
/// equilibrium of (1, 0, uw, Tw), so that a gas at rest at wall conditions is
/// reflected onto itself exactly.
WallModel make_wall_model(const WallSpec& wall, const VelocityGrid& grid, double R,
                          bool conservative = true);

/// Reflected density sigma_w from the outgoing half of `F`:
/// -(sum_{v n < 0} v n F w) / (sum_{v n > 0} v n M w).
double sigma_w(const Eigen::Ref<const Eigen::ArrayXd>& F, const WallModel& wall,
               const VelocityGrid& grid);

/// Ghost values and wall-interface states of one wall.
///
/// `gas_side` and `wall_side` are the two interface states at the wall
/// (f^{+}_{1/2} and f^{-}_{1/2} at the left wall). Each is filled for every
/// velocity; the wall side equals sigma * (M, N, P) on incoming velocities
/// and the gas side on outgoing ones. `ghost0` is the ghost cell adjacent to
/// the wall, `ghost1` the next one out.
struct WallClosure {
  CellState ghost0, ghost1;
  CellState gas_side, wall_side;
  double sigma = 0.0;
  int negative_count = 0;  // negative F among the outgoing interface values
};

/// Zeroth-order extrapolation for outgoing velocities, diffuse reflection
/// for incoming ones.
WallClosure ghost_first_order(const CellState& first_cell, const WallModel& wall,
                              const VelocityGrid& grid);

/// As ghost_first_order, with ghost1 = ghost0 so that the Yee limiter
/// vanishes at the wall interface.
WallClosure ghost_flux_limiter(const CellState& first_cell, const WallModel& wall,
                               const VelocityGrid& grid);

/// Second-order closure for the linear-reconstruction scheme. `cell1` is the
/// cell adjacent to the wall and `cell2` the next one inward.
///
///  1. outgoing interface value 3/2 f1 - 1/2 f2,
///  2. incoming interface value sigma_w(step 1) times the wall triple,
///  3. ghosts: outgoing f0 = 2 f1 - f2, f-1 = 3 f1 - 2 f2; incoming
///     f0 = 2 s - f1, f-1 = 4 s - 3 f1 with s the step-2 value.
///
/// The ghost values are collinear with the interface values, so the
/// MC-limited slopes (alpha in [1/2, 1]) reconstruct both interface states
/// exactly.
WallClosure wall_closure_slope_scheme(const CellState& cell1, const CellState& cell2,
                                      const WallModel& wall, const VelocityGrid& grid);

/// Same as ghost_first_order but keeping the zero-slope interface states of
/// the reconstruction scheme.
inline WallClosure wall_closure_slope_first_order(const CellState& cell1, const WallModel& wall,
                                                  const VelocityGrid& grid) {
  return ghost_first_order(cell1, wall, grid);
}

/// Wall state seen by the DG boundary flux: the interior trace on outgoing
/// velocities, sigma * (M, N, P) on incoming ones.
struct WallTrace {
  CellState state;
  double sigma = 0.0;
};

WallTrace dg_wall_trace(const CellState& interior_trace, const WallModel& wall,
                        const VelocityGrid& grid);

/// Upwind mass flux sum_k v_k F_k w_k through the wall (positive along +x).
double wall_mass_flux(const WallClosure& closure, const WallModel& wall,
                      const VelocityGrid& grid);

/// Mass flux sum_k v_k F_k w_k of a single-valued wall state.
double wall_mass_flux(const Eigen::Ref<const Eigen::ArrayXd>& F, const VelocityGrid& grid);

}  // namespace bgk
