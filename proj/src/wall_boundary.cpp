#include "bgk/wall_boundary.hpp"

#include "bgk/equilibrium.hpp"
#include "bgk/limiters.hpp"

namespace bgk {

WallModel make_wall_model(const WallSpec& wall, const VelocityGrid& grid, double R,
                          bool conservative) {
  wall.validate();
  WallModel model;
  model.spec = wall;
  if (conservative) {
    Moments target;
    target.rho = 1.0;
    target.uy = wall.uw;
    target.T = wall.Tw;
    model.maxwellian = conservative_equilibrium(target, grid, R).state;
  } else {
    model.maxwellian = reduced_maxwellians(1.0, 0.0, wall.uw, wall.Tw, grid, R);
  }
  const auto& v = grid.nodes();
  const auto& w = grid.weights();
  for (Eigen::Index k = 0; k < grid.size(); ++k)
    if (!is_outgoing(v[k], wall.normal))
      model.emitted_flux += v[k] * wall.normal * model.maxwellian.F[k] * w[k];
  return model;
}

double sigma_w(const Eigen::Ref<const Eigen::ArrayXd>& F, const WallModel& wall,
               const VelocityGrid& grid) {
  const auto& v = grid.nodes();
  const auto& w = grid.weights();
  const int n = wall.spec.normal;
  double absorbed = 0.0;
  for (Eigen::Index k = 0; k < grid.size(); ++k)
    if (is_outgoing(v[k], n)) absorbed -= v[k] * n * F[k] * w[k];
  return absorbed / wall.emitted_flux;
}

namespace {

// Overwrites the incoming entries of `s` with sigma times the wall triple.
void reflect_into(CellState& s, double sigma, const WallModel& wall, const VelocityGrid& grid) {
  const auto& v = grid.nodes();
  for (Eigen::Index k = 0; k < grid.size(); ++k) {
    if (is_outgoing(v[k], wall.spec.normal)) continue;
    s.F[k] = sigma * wall.maxwellian.F[k];
    s.G[k] = sigma * wall.maxwellian.G[k];
    s.H[k] = sigma * wall.maxwellian.H[k];
  }
}

int count_negative_outgoing(const Eigen::ArrayXd& F, const WallModel& wall,
                            const VelocityGrid& grid) {
  int count = 0;
  for (Eigen::Index k = 0; k < grid.size(); ++k)
    if (is_outgoing(grid.nodes()[k], wall.spec.normal) && F[k] < 0.0) ++count;
  return count;
}

}  // namespace

WallClosure ghost_first_order(const CellState& first_cell, const WallModel& wall,
                              const VelocityGrid& grid) {
  WallClosure c;
  c.gas_side = first_cell;
  c.sigma = sigma_w(first_cell.F, wall, grid);
  c.wall_side = first_cell;
  reflect_into(c.wall_side, c.sigma, wall, grid);
  c.ghost0 = c.wall_side;
  c.ghost1 = c.ghost0;
  c.negative_count = count_negative_outgoing(first_cell.F, wall, grid);
  return c;
}

WallClosure ghost_flux_limiter(const CellState& first_cell, const WallModel& wall,
                               const VelocityGrid& grid) {
  // ghost1 = ghost0 makes the first difference outside the wall vanish.
  return ghost_first_order(first_cell, wall, grid);
}

WallClosure wall_closure_slope_scheme(const CellState& cell1, const CellState& cell2,
                                      const WallModel& wall, const VelocityGrid& grid) {
  WallClosure c;
  c.gas_side = CellState(1.5 * cell1.F - 0.5 * cell2.F, 1.5 * cell1.G - 0.5 * cell2.G,
                         1.5 * cell1.H - 0.5 * cell2.H);
  c.sigma = sigma_w(c.gas_side.F, wall, grid);
  c.wall_side = c.gas_side;
  reflect_into(c.wall_side, c.sigma, wall, grid);

  c.ghost0 = CellState(grid.size());
  c.ghost1 = CellState(grid.size());
  const auto& v = grid.nodes();
  auto fill = [&](const Eigen::ArrayXd& f1, const Eigen::ArrayXd& f2, const Eigen::ArrayXd& s,
                  Eigen::ArrayXd& g0, Eigen::ArrayXd& g1) {
    for (Eigen::Index k = 0; k < grid.size(); ++k) {
      if (is_outgoing(v[k], wall.spec.normal)) {
        g0[k] = 2.0 * f1[k] - f2[k];
        g1[k] = 3.0 * f1[k] - 2.0 * f2[k];
      } else {
        g0[k] = 2.0 * s[k] - f1[k];
        g1[k] = 4.0 * s[k] - 3.0 * f1[k];
      }
    }
  };
  fill(cell1.F, cell2.F, c.wall_side.F, c.ghost0.F, c.ghost1.F);
  fill(cell1.G, cell2.G, c.wall_side.G, c.ghost0.G, c.ghost1.G);
  fill(cell1.H, cell2.H, c.wall_side.H, c.ghost0.H, c.ghost1.H);
  c.negative_count = count_negative_outgoing(c.gas_side.F, wall, grid);
  return c;
}

WallTrace dg_wall_trace(const CellState& interior_trace, const WallModel& wall,
                        const VelocityGrid& grid) {
  WallTrace t;
  t.sigma = sigma_w(interior_trace.F, wall, grid);
  t.state = interior_trace;
  reflect_into(t.state, t.sigma, wall, grid);
  return t;
}

double wall_mass_flux(const WallClosure& closure, const WallModel& wall,
                      const VelocityGrid& grid) {
  const auto& v = grid.nodes();
  const auto& w = grid.weights();
  const bool left = wall.spec.normal > 0;
  const Eigen::ArrayXd& l = left ? closure.wall_side.F : closure.gas_side.F;
  const Eigen::ArrayXd& r = left ? closure.gas_side.F : closure.wall_side.F;
  double flux = 0.0;
  for (Eigen::Index k = 0; k < grid.size(); ++k) flux += upwind_flux(l[k], r[k], v[k]) * w[k];
  return flux;
}

double wall_mass_flux(const Eigen::Ref<const Eigen::ArrayXd>& F, const VelocityGrid& grid) {
  return (grid.nodes() * F * grid.weights()).sum();
}

}  // namespace bgk
