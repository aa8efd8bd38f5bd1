#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "bgk/dg_scheme.hpp"
#include "bgk/fv_schemes.hpp"
#include "bgk/gas_physics.hpp"
#include "bgk/mesh.hpp"
#include "bgk/velocity_grid.hpp"

namespace bgk {

enum class TimeIntegrator { ForwardEuler, SspRk2 };

/// Forward Euler for first-order upwind, SSP-RK2 otherwise. Under Euler the
/// centered slopes are unstable at every CFL number and the limited schemes
/// settle into limiter chatter instead of a steady state.
TimeIntegrator default_integrator(Scheme scheme);

/// Largest CFL number for which `scheme` advanced by `integrator` is
/// stable (TVD for the limited schemes). Returns 0 for a combination that
/// is unstable at every CFL number.
double stable_cfl(Scheme scheme, double alpha, TimeIntegrator integrator);

/// CFL number used by run_to_steady: stable_cfl, with a 3/4 margin for the
/// MC-limited schemes, which may otherwise oscillate around the steady
/// state indefinitely.
double steady_cfl(Scheme scheme, double alpha, TimeIntegrator integrator);

/// dt = cfl * dx / max|v|, capped by min_tau / 2. Rejects cfl outside (0, 1].
double cfl_timestep(const Mesh1D& mesh, const VelocityGrid& grid, double cfl, double min_tau);

/// Largest step for which the transport spectrum at `stable_cfl`, shifted
/// by the relaxation rate 1 / min_tau, stays inside the integrator's
/// stability interval on the negative real axis.
double relaxation_limited_timestep(const Mesh1D& mesh, const VelocityGrid& grid,
                                   double stable_cfl, double min_tau);

/// Raised when a march produces NaN or its residual blows up.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, long step) : std::runtime_error(what), step_(step) {}
  long step() const { return step_; }

 private:
  long step_;
};

struct MarchOptions {
  double cfl = 0.9;           // requested; reduced to steady_cfl
  double tolerance = 1e-8;    // on ||f^{n+1} - f^n|| / (dt ||f^n||) for F and G, 1/s
  long max_steps = 1000000;
  long progress_every = 0;    // 0 disables progress lines on stderr
  double divergence_factor = 1e6;
  std::optional<TimeIntegrator> integrator;  // default_integrator(scheme) if unset
};

struct RunStatus {
  long steps = 0;
  double residual = 0.0;
  double initial_residual = 0.0;
  double wall_seconds = 0.0;
  double mass_drift = 0.0;      // |m_end - m_0| / m_0
  bool converged = false;
  double dt = 0.0;              // last step
  double cfl = 0.0;             // effective CFL number
  double max_wall_flux = 0.0;   // max |sum v F w| at either wall over all evaluations
  int max_negative_wall_values = 0;
};

RunStatus run_to_steady(FvOperator& op, ReducedState& state, const MarchOptions& options);
RunStatus run_to_steady(DgOperator& op, DGState& state, const MarchOptions& options);

/// Uniform equilibrium at rest: the conservative discrete equilibrium of
/// (rho, 0, 0, T) in every cell.
ReducedState uniform_equilibrium(int cells, double rho, double T, const VelocityGrid& grid,
                                 double R, bool conservative = true);

}  // namespace bgk
