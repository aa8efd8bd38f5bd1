#pragma once

#include <Eigen/Core>
#include <string>
#include <string_view>
#include <utility>

#include "bgk/equilibrium.hpp"
#include "bgk/gas_physics.hpp"
#include "bgk/mesh.hpp"
#include "bgk/velocity_grid.hpp"
#include "bgk/wall_boundary.hpp"

namespace bgk {

enum class Scheme {
  O1,            // first-order upwind
  O2Flux,        // Yee flux limiter, first-order wall closure
  O2Slope,       // MC-limited linear reconstruction, second-order wall closure
  O2SlopeNoLim,  // raw centered slopes, second-order wall closure
  O2SlopeBcO1,   // MC-limited slopes, zero-slope wall states
  DG,            // P1 upwind discontinuous Galerkin
};

std::string_view scheme_name(Scheme s);
/// Accepts the names printed by scheme_name (case-insensitive, '-' or '_').
Scheme parse_scheme(std::string_view name);
inline bool is_finite_volume(Scheme s) { return s != Scheme::DG; }

enum class SlopeMode { Zero, Limited, Centered };

/// Left and right states at the cells+1 interfaces of a ghost-padded column.
struct InterfaceStates {
  Eigen::ArrayXd left, right;
};

/// Linear reconstruction f_i +- dx/2 delta_i at every interface.
///
/// `padded` holds two ghost values on each side (size cells + 4, interior
/// cell i at index i + 2). Slopes are computed for the interior cells and
/// the first ghost on each side.
InterfaceStates reconstruct_interface_states(const Eigen::Ref<const Eigen::ArrayXd>& padded,
                                             double dx, SlopeMode mode, double alpha);

struct FvOptions {
  Scheme scheme = Scheme::O2Slope;
  double alpha = 0.5;
  bool collisionless = false;
  bool periodic = false;
  bool conservative = true;
  bool equilibrium_fallback = false;  // see RelaxationField::set_fallback
};

/// Per-evaluation wall diagnostics.
struct FvDiagnostics {
  double left_wall_flux = 0.0;   // sum_k F_{1/2,k} w_k
  double right_wall_flux = 0.0;  // sum_k F_{imax+1/2,k} w_k
  double left_sigma = 0.0;
  double right_sigma = 0.0;
  int negative_wall_values = 0;
  double min_tau = 0.0;
};

/// Finite-volume semi-discretisation of the reduced BGK system
///   d f_i / dt = -(F_{i+1/2} - F_{i-1/2}) / dx + (M_i - f_i) / tau_i
/// applied to F, G and H with their equilibria M, N, P.
class FvOperator {
 public:
  FvOperator(const Mesh1D& mesh, const VelocityGrid& grid, const GasModel& gas,
             const WallModel& left, const WallModel& right, const FvOptions& options);

  /// Throws StateError naming the cell when moments cannot be evaluated.
  void rhs(const ReducedState& state, ReducedState& dfdt);

  const FvDiagnostics& diagnostics() const { return diag_; }
  const Eigen::ArrayXd& relaxation_times() const { return tau_; }
  const FvOptions& options() const { return options_; }
  const Mesh1D& mesh() const { return mesh_; }
  const VelocityGrid& grid() const { return *grid_; }

  /// Wall closures for the current state (empty in periodic mode).
  std::pair<WallClosure, WallClosure> wall_closures(const ReducedState& state) const;

 private:
  // Adds -(flux difference) / dx of one component to `out`; returns the
  // weighted wall fluxes of that component.
  std::pair<double, double> transport(const Eigen::ArrayXXd& f, int component,
                                      const std::pair<WallClosure, WallClosure>* walls,
                                      Eigen::ArrayXXd& out);

  Mesh1D mesh_;
  const VelocityGrid* grid_;
  GasModel gas_;
  WallModel left_, right_;
  FvOptions options_;
  RelaxationField relax_;
  FvDiagnostics diag_;
  Eigen::ArrayXXd M_, N_, P_;
  Eigen::ArrayXd tau_;
  Eigen::ArrayXd padded_, flux_, slope_;
};

/// Convenience wrapper: one right-hand-side evaluation with a fresh operator.
ReducedState fv_rhs(const ReducedState& state, const Mesh1D& mesh, const VelocityGrid& grid,
                    const GasModel& gas, const WallModel& left, const WallModel& right,
                    Scheme scheme, double alpha);

/// Total mass sum_i dx_i rho_i.
double total_mass(const ReducedState& state, const Mesh1D& mesh, const VelocityGrid& grid);

}  // namespace bgk
