#include "bgk/couette.hpp"

#include <stdexcept>

#include "bgk/limiters.hpp"

namespace bgk {

CouetteCase make_case(const RunConfig& cfg) {
  cfg.validate();
  VelocityGrid grid = build_uniform_grid(cfg.velocities, cfg.vmin, cfg.vmax);
  WallModel left = make_wall_model(cfg.left, grid, cfg.gas.R, cfg.conservative);
  WallModel right = make_wall_model(cfg.right, grid, cfg.gas.R, cfg.conservative);
  const double rho0 = density_from_knudsen(cfg.gas, cfg.knudsen, cfg.length, cfg.left.Tw);
  return {std::move(grid), std::move(left), std::move(right), Mesh1D(cfg.cells, cfg.length), rho0};
}

FvOptions fv_options(const RunConfig& cfg) {
  FvOptions o;
  o.scheme = cfg.scheme;
  o.alpha = cfg.alpha;
  o.collisionless = cfg.collisionless;
  o.periodic = cfg.periodic;
  o.conservative = cfg.conservative;
  o.equilibrium_fallback = cfg.equilibrium_fallback;
  return o;
}

DgOptions dg_options(const RunConfig& cfg) {
  DgOptions o;
  o.collisionless = cfg.collisionless;
  o.periodic = cfg.periodic;
  o.conservative = cfg.conservative;
  o.equilibrium_fallback = cfg.equilibrium_fallback;
  return o;
}

MarchOptions march_options(const RunConfig& cfg) {
  MarchOptions m;
  m.cfl = cfg.cfl;
  m.tolerance = cfg.tolerance;
  m.max_steps = cfg.max_steps;
  m.progress_every = cfg.progress_every;
  return m;
}

namespace {

int refinement(int coarse, int fine) {
  if (coarse <= 0 || fine % coarse != 0)
    throw std::invalid_argument("prolongation needs a cell count that divides " +
                                std::to_string(fine) + ", got " + std::to_string(coarse));
  return fine / coarse;
}

Eigen::ArrayXXd prolong_component(const Eigen::ArrayXXd& c, int factor) {
  const Eigen::Index n = c.rows();
  Eigen::ArrayXXd fine(n * factor, c.cols());
  for (Eigen::Index k = 0; k < c.cols(); ++k) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double back = i > 0 ? c(i, k) - c(i - 1, k) : 0.0;
      const double fwd = i + 1 < n ? c(i + 1, k) - c(i, k) : 0.0;
      const double slope = minmod3(back, fwd, 0.5 * (back + fwd));
      for (int j = 0; j < factor; ++j) {
        const double xi = (j + 0.5) / factor - 0.5;
        fine(i * factor + j, k) = c(i, k) + xi * slope;
      }
    }
  }
  return fine;
}

Eigen::ArrayXXd split_edges(const Eigen::ArrayXXd& a, const Eigen::ArrayXXd& b, int factor,
                            int offset) {
  const Eigen::Index n = a.rows();
  Eigen::ArrayXXd fine(n * factor, a.cols());
  for (Eigen::Index i = 0; i < n; ++i)
    for (int j = 0; j < factor; ++j) {
      const double t = static_cast<double>(j + offset) / factor;
      fine.row(i * factor + j) = (1.0 - t) * a.row(i) + t * b.row(i);
    }
  return fine;
}

}  // namespace

ReducedState prolong(const ReducedState& coarse, int factor) {
  if (factor < 1) throw std::invalid_argument("prolongation factor must be positive");
  ReducedState fine;
  fine.F = prolong_component(coarse.F, factor);
  fine.G = prolong_component(coarse.G, factor);
  fine.H = prolong_component(coarse.H, factor);
  return fine;
}

DGState prolong(const DGState& coarse, int factor) {
  if (factor < 1) throw std::invalid_argument("prolongation factor must be positive");
  DGState fine;
  fine.left.F = split_edges(coarse.left.F, coarse.right.F, factor, 0);
  fine.left.G = split_edges(coarse.left.G, coarse.right.G, factor, 0);
  fine.left.H = split_edges(coarse.left.H, coarse.right.H, factor, 0);
  fine.right.F = split_edges(coarse.left.F, coarse.right.F, factor, 1);
  fine.right.G = split_edges(coarse.left.G, coarse.right.G, factor, 1);
  fine.right.H = split_edges(coarse.left.H, coarse.right.H, factor, 1);
  return fine;
}

CouetteResult run_couette(const RunConfig& cfg, const CouetteResult* start) {
  const CouetteCase c = make_case(cfg);
  if (start && start->scheme != cfg.scheme)
    throw std::invalid_argument("run_couette: start state comes from a different scheme");
  const MarchOptions march = march_options(cfg);

  CouetteResult res;
  res.scheme = cfg.scheme;
  res.cells = cfg.cells;
  if (cfg.scheme == Scheme::DG) {
    res.dg = start ? prolong(start->dg, refinement(start->cells, cfg.cells))
                   : dg_from_averages(uniform_equilibrium(cfg.cells, c.rho0, cfg.left.Tw, c.grid,
                                                          cfg.gas.R, cfg.conservative));
    DgOperator op(c.mesh, c.grid, cfg.gas, c.left, c.right, dg_options(cfg));
    res.status = run_to_steady(op, res.dg, march);
    res.profile = make_profile(op, res.dg, cfg.gas.R);
  } else {
    res.fv = start ? prolong(start->fv, refinement(start->cells, cfg.cells))
                   : uniform_equilibrium(cfg.cells, c.rho0, cfg.left.Tw, c.grid, cfg.gas.R,
                                         cfg.conservative);
    FvOperator op(c.mesh, c.grid, cfg.gas, c.left, c.right, fv_options(cfg));
    res.status = run_to_steady(op, res.fv, march);
    res.profile = make_profile(op, res.fv, cfg.gas.R);
  }
  return res;
}

}  // namespace bgk
