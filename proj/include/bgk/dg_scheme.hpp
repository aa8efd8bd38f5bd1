#pragma once

#include <Eigen/Core>
#include <vector>

#include "bgk/equilibrium.hpp"
#include "bgk/gas_physics.hpp"
#include "bgk/mesh.hpp"
#include "bgk/velocity_grid.hpp"
#include "bgk/wall_boundary.hpp"

namespace bgk {

/// P1 nodal DG unknowns: `left` holds f_{i,k,1} (value at x_{i-1/2}) and
/// `right` holds f_{i,k,2} (value at x_{i+1/2}) for every cell i and
/// velocity k.
struct DGState {
  ReducedState left, right;

  DGState() = default;
  DGState(Eigen::Index cells, Eigen::Index velocities)
      : left(cells, velocities), right(cells, velocities) {}

  Eigen::Index cells() const { return left.cells(); }
  Eigen::Index velocities() const { return left.velocities(); }
};

/// Element mass matrix |cell| / 6 [[2, 1], [1, 2]] of the edge basis.
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 2> dg_mass_matrix(Scalar width) {
  Eigen::Matrix<Scalar, 2, 2> m;
  m << 2, 1, 1, 2;
  return m * (width / Scalar(6));
}

/// Closed-form inverse 2 / |cell| [[2, -1], [-1, 2]].
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 2> dg_mass_inverse(Scalar width) {
  Eigen::Matrix<Scalar, 2, 2> m;
  m << 2, -1, -1, 2;
  return m * (Scalar(2) / width);
}

/// Volume term -v int f dphi_p/dx: (v / 2) [[1, 1], [-1, -1]].
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 2> dg_volume_matrix(Scalar v) {
  Eigen::Matrix<Scalar, 2, 2> m;
  m << 1, 1, -1, -1;
  return m * (v / Scalar(2));
}

struct ElementMatrices {
  Eigen::Matrix2d mass, mass_inverse;
  // Per velocity: volume term and the upwind couplings to cells i-1, i, i+1.
  std::vector<Eigen::Matrix2d> d, a, b, c;
};

ElementMatrices assemble_element_matrices(const Mesh1D& mesh, const VelocityGrid& grid);

struct DgOptions {
  bool collisionless = false;
  bool periodic = false;
  bool conservative = true;
  bool equilibrium_fallback = false;  // see RelaxationField::set_fallback
};

struct DgDiagnostics {
  double left_wall_flux = 0.0;
  double right_wall_flux = 0.0;
  double left_sigma = 0.0;
  double right_sigma = 0.0;
  double min_tau = 0.0;
};

/// Semi-discrete P1 upwind DG operator with nodal BGK relaxation.
class DgOperator {
 public:
  enum class Assembly { Block, WeakForm };

  DgOperator(const Mesh1D& mesh, const VelocityGrid& grid, const GasModel& gas,
             const WallModel& left, const WallModel& right, const DgOptions& options);

  /// `Block` uses the expanded mass-inverse form; `WeakForm` applies the
  /// inverse mass matrix to the assembled weak-form terms.
  /// Throws StateError naming (cell, node) when moments cannot be evaluated.
  void rhs(const DGState& state, DGState& dfdt, Assembly assembly = Assembly::Block);

  const DgDiagnostics& diagnostics() const { return diag_; }
  const Mesh1D& mesh() const { return mesh_; }
  const VelocityGrid& grid() const { return *grid_; }
  const ElementMatrices& matrices() const { return mats_; }
  const DgOptions& options() const { return options_; }
  const WallModel& left_wall() const { return left_; }
  const WallModel& right_wall() const { return right_; }

 private:
  void relax(const DGState& state, DGState& dfdt);

  Mesh1D mesh_;
  const VelocityGrid* grid_;
  GasModel gas_;
  WallModel left_, right_;
  DgOptions options_;
  ElementMatrices mats_;
  RelaxationField relax_;
  DgDiagnostics diag_;
  Eigen::ArrayXXd nodesF_, nodesG_, nodesH_, M_, N_, P_;
  Eigen::ArrayXd tau_;
};

/// One right-hand-side evaluation with a fresh operator.
DGState dg_rhs(const DGState& state, const Mesh1D& mesh, const VelocityGrid& grid,
               const GasModel& gas, const WallModel& left, const WallModel& right);

/// Cell averages (f1 + f2) / 2.
ReducedState dg_cell_averages(const DGState& state);

/// DG state that is piecewise constant equal to `averages`.
DGState dg_from_averages(const ReducedState& averages);

double total_mass(const DGState& state, const Mesh1D& mesh, const VelocityGrid& grid);

}  // namespace bgk
