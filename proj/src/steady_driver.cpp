#include "bgk/steady_driver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>

#include "bgk/equilibrium.hpp"

namespace bgk {

TimeIntegrator default_integrator(Scheme scheme) {
  return scheme == Scheme::O1 ? TimeIntegrator::ForwardEuler : TimeIntegrator::SspRk2;
}

double stable_cfl(Scheme scheme, double alpha, TimeIntegrator integrator) {
  switch (scheme) {
    case Scheme::O1: return 1.0;
    case Scheme::O2Flux: return 2.0 / 3.0;
    case Scheme::O2Slope:
    case Scheme::O2SlopeBcO1:
      // MC slopes are bounded by 2 alpha times the one-sided differences.
      return 1.0 / (1.0 + alpha);
    case Scheme::O2SlopeNoLim:
      return integrator == TimeIntegrator::SspRk2 ? 1.0 : 0.0;
    case Scheme::DG:
      // 1/3 is the RK2 limit itself; keep a margin.
      return integrator == TimeIntegrator::SspRk2 ? 0.3 : 0.0;
  }
  return 0.0;
}

double steady_cfl(Scheme scheme, double alpha, TimeIntegrator integrator) {
  const double stable = stable_cfl(scheme, alpha, integrator);
  // At the TVD limit the MC limiter can lock into a limit cycle instead of
  // settling.
  if (scheme == Scheme::O2Slope || scheme == Scheme::O2SlopeBcO1) return 0.75 * stable;
  return stable;
}

double cfl_timestep(const Mesh1D& mesh, const VelocityGrid& grid, double cfl, double min_tau) {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw std::invalid_argument("cfl must lie in (0, 1]");
  const double dt = cfl * mesh.dx() / grid.max_speed();
  return std::min(dt, 0.5 * min_tau);
}

double relaxation_limited_timestep(const Mesh1D& mesh, const VelocityGrid& grid,
                                   double stable_cfl, double min_tau) {
  if (!(stable_cfl > 0.0)) throw std::invalid_argument("scheme is unstable with this integrator");
  // Both integrators reach -2 on the negative real axis; the transport
  // spectrum takes 2 cfl / stable_cfl of it and relaxation dt / tau.
  const double transport_rate = 2.0 * grid.max_speed() / (stable_cfl * mesh.dx());
  return 2.0 / (transport_rate + 1.0 / min_tau);
}

ReducedState uniform_equilibrium(int cells, double rho, double T, const VelocityGrid& grid,
                                 double R, bool conservative) {
  CellState eq = reduced_maxwellians(rho, 0.0, 0.0, T, grid, R);
  if (conservative) {
    Moments target;
    target.rho = rho;
    target.T = T;
    target.p = rho * R * T;
    target.E = 1.5 * target.p;
    eq = conservative_equilibrium(target, grid, R).state;
  }
  ReducedState s(cells, grid.size());
  for (int i = 0; i < cells; ++i) s.set_cell(i, eq);
  return s;
}

namespace {

// Relative change rate ||a - b|| / (dt ||b||) of F and of G, larger of the
// two. F alone stays frozen while the tangential wall motion first heats the
// gas through G.
double change_rate(const Eigen::ArrayXXd& a, const Eigen::ArrayXXd& b) {
  return (a - b).matrix().norm() / b.matrix().norm();
}
double residual(const ReducedState& a, const ReducedState& b, double dt) {
  return std::max(change_rate(a.F, b.F), change_rate(a.G, b.G)) / dt;
}
double residual(const DGState& a, const DGState& b, double dt) {
  const auto rate = [](const ReducedState& x1, const ReducedState& x2, const ReducedState& y1,
                       const ReducedState& y2, auto member) {
    const double num = std::sqrt((x1.*member - y1.*member).matrix().squaredNorm() +
                                 (x2.*member - y2.*member).matrix().squaredNorm());
    const double den =
        std::sqrt((y1.*member).matrix().squaredNorm() + (y2.*member).matrix().squaredNorm());
    return num / den;
  };
  return std::max(rate(a.left, a.right, b.left, b.right, &ReducedState::F),
                  rate(a.left, a.right, b.left, b.right, &ReducedState::G)) /
         dt;
}

void axpy(ReducedState& y, double a, const ReducedState& x) {
  y.F += a * x.F;
  y.G += a * x.G;
  y.H += a * x.H;
}
void axpy(DGState& y, double a, const DGState& x) {
  axpy(y.left, a, x.left);
  axpy(y.right, a, x.right);
}

// y = a y + b x
void blend(ReducedState& y, double a, double b, const ReducedState& x) {
  y.F = a * y.F + b * x.F;
  y.G = a * y.G + b * x.G;
  y.H = a * y.H + b * x.H;
}
void blend(DGState& y, double a, double b, const DGState& x) {
  blend(y.left, a, b, x.left);
  blend(y.right, a, b, x.right);
}

// NaN and infinity both survive summation.
bool all_finite(const ReducedState& s) {
  return std::isfinite(s.F.sum() + s.G.sum() + s.H.sum());
}
bool all_finite(const DGState& s) { return all_finite(s.left) && all_finite(s.right); }

Scheme scheme_of(const FvOperator& op) { return op.options().scheme; }
Scheme scheme_of(const DgOperator&) { return Scheme::DG; }
double alpha_of(const FvOperator& op) { return op.options().alpha; }
double alpha_of(const DgOperator&) { return 0.5; }
int negatives_of(const FvOperator& op) { return op.diagnostics().negative_wall_values; }
int negatives_of(const DgOperator&) { return 0; }

template <typename Op, typename State>
RunStatus march(Op& op, State& state, const MarchOptions& opt) {
  if (!(opt.cfl > 0.0 && opt.cfl <= 1.0)) throw std::invalid_argument("cfl must lie in (0, 1]");
  if (!(opt.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (opt.max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  const Scheme scheme = scheme_of(op);
  const TimeIntegrator integrator = opt.integrator.value_or(default_integrator(scheme));
  const double stable = stable_cfl(scheme, alpha_of(op), integrator);
  const double cfl = std::min(opt.cfl, steady_cfl(scheme, alpha_of(op), integrator));

  RunStatus st;
  st.cfl = cfl;
  const double mass0 = total_mass(state, op.mesh(), op.grid());
  auto record = [&] {
    const auto& d = op.diagnostics();
    st.max_wall_flux = std::max({st.max_wall_flux, std::abs(d.left_wall_flux),
                                 std::abs(d.right_wall_flux)});
    st.max_negative_wall_values = std::max(st.max_negative_wall_values, negatives_of(op));
  };

  State k1, k2, stage, previous;
  for (long n = 1; n <= opt.max_steps; ++n) {
    op.rhs(state, k1);
    record();
    const double min_tau = op.diagnostics().min_tau;
    const double dt =
        std::min(cfl_timestep(op.mesh(), op.grid(), cfl, min_tau),
                 relaxation_limited_timestep(op.mesh(), op.grid(), stable, min_tau));
    previous = state;
    if (integrator == TimeIntegrator::ForwardEuler) {
      axpy(state, dt, k1);
    } else {
      stage = state;
      axpy(stage, dt, k1);
      op.rhs(stage, k2);
      record();
      axpy(stage, dt, k2);
      blend(state, 0.5, 0.5, stage);
    }
    if (!all_finite(state))
      throw DivergenceError("non-finite value after step " + std::to_string(n), n);

    st.steps = n;
    st.dt = dt;
    st.residual = residual(state, previous, dt);
    if (n == 1) st.initial_residual = st.residual;
    if (st.residual > opt.divergence_factor * st.initial_residual)
      throw DivergenceError("residual " + std::to_string(st.residual) + " at step " +
                                std::to_string(n) + " exceeds the divergence bound",
                            n);
    if (opt.progress_every > 0 && n % opt.progress_every == 0)
      std::cerr << scheme_name(scheme) << " step " << n << " residual " << st.residual << "\n";
    if (st.residual < opt.tolerance) {
      st.converged = true;
      break;
    }
  }
  const double mass1 = total_mass(state, op.mesh(), op.grid());
  st.mass_drift = std::abs(mass1 - mass0) / mass0;
  st.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return st;
}

}  // namespace

RunStatus run_to_steady(FvOperator& op, ReducedState& state, const MarchOptions& options) {
  return march(op, state, options);
}

RunStatus run_to_steady(DgOperator& op, DGState& state, const MarchOptions& options) {
  return march(op, state, options);
}

}  // namespace bgk
