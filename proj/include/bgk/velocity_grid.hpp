#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace bgk {

/// Raised when the macroscopic state of a cell cannot be evaluated.
/// `point` is the offending row of a batched evaluation, or -1.
class StateError : public std::runtime_error {
 public:
  explicit StateError(const std::string& reason, long point = -1, const std::string& where = "")
      : std::runtime_error(where.empty() ? reason : reason + " at " + where),
        reason_(reason),
        point_(point) {}

  const std::string& reason() const { return reason_; }
  long point() const { return point_; }

 private:
  std::string reason_;
  long point_;
};

/// Discrete velocity space of the reduced 1D model.
///
/// Nodes are strictly increasing with positive weights, and the grid always
/// holds at least one negative and one positive node so that both half-flux
/// sums at a wall are nonzero. A node exactly at zero is accepted from user
/// input but is classified with the negative set (see `is_negative`).
class VelocityGrid {
 public:
  VelocityGrid(Eigen::ArrayXd nodes, Eigen::ArrayXd weights);

  const Eigen::ArrayXd& nodes() const { return nodes_; }
  const Eigen::ArrayXd& weights() const { return weights_; }
  Eigen::Index size() const { return nodes_.size(); }
  double max_speed() const { return nodes_.abs().maxCoeff(); }

  /// Uniform spacing if the grid is uniform, 0 otherwise.
  double uniform_spacing() const { return spacing_; }

 private:
  Eigen::ArrayXd nodes_;
  Eigen::ArrayXd weights_;
  double spacing_ = 0.0;
};

/// Midpoint-rule grid: v_k = vmin + (k + 1/2) dv, all weights dv.
VelocityGrid build_uniform_grid(int n, double vmin, double vmax);

/// Tie-break for v = 0: it belongs to the negative set.
inline bool is_negative(double v) { return v <= 0.0; }

/// Outgoing (gas toward wall) test for a wall with gas-side normal `normal`.
inline bool is_outgoing(double v, int normal) {
  return normal > 0 ? is_negative(v) : !is_negative(v);
}

/// Reduced distributions (F, G, H) of one spatial location, one entry per
/// velocity node.
struct CellState {
  Eigen::ArrayXd F, G, H;

  CellState() = default;
  explicit CellState(Eigen::Index n)
      : F(Eigen::ArrayXd::Zero(n)), G(Eigen::ArrayXd::Zero(n)), H(Eigen::ArrayXd::Zero(n)) {}
  CellState(Eigen::ArrayXd f, Eigen::ArrayXd g, Eigen::ArrayXd h)
      : F(std::move(f)), G(std::move(g)), H(std::move(h)) {}

  Eigen::Index size() const { return F.size(); }
};

/// Reduced distributions over a mesh: rows are cells, columns velocities.
struct ReducedState {
  Eigen::ArrayXXd F, G, H;

  ReducedState() = default;
  ReducedState(Eigen::Index cells, Eigen::Index velocities)
      : F(Eigen::ArrayXXd::Zero(cells, velocities)),
        G(Eigen::ArrayXXd::Zero(cells, velocities)),
        H(Eigen::ArrayXXd::Zero(cells, velocities)) {}

  Eigen::Index cells() const { return F.rows(); }
  Eigen::Index velocities() const { return F.cols(); }

  CellState cell(Eigen::Index i) const {
    return CellState(F.row(i).transpose(), G.row(i).transpose(), H.row(i).transpose());
  }
  void set_cell(Eigen::Index i, const CellState& s) {
    F.row(i) = s.F.transpose();
    G.row(i) = s.G.transpose();
    H.row(i) = s.H.transpose();
  }
};

/// Macroscopic quantities at one location (SI units).
struct Moments {
  double rho = 0.0;
  double ux = 0.0;
  double uy = 0.0;
  double T = 0.0;
  double p = 0.0;
  double E = 0.0;
  double qx = 0.0;
};

/// Conserved sums (rho, rho ux, rho uy, E) of a reduced triple.
Eigen::Vector4d conserved_moments(const Eigen::Ref<const Eigen::ArrayXd>& F,
                                  const Eigen::Ref<const Eigen::ArrayXd>& G,
                                  const Eigen::Ref<const Eigen::ArrayXd>& H,
                                  const VelocityGrid& grid);

/// Density, velocity, temperature, pressure and energy of a reduced triple.
/// The heat flux is left at zero; see `compute_heat_flux`.
///
/// Throws StateError("vacuum state") for a non-positive density and
/// StateError("negative temperature") for a non-positive temperature.
Moments compute_moments(const Eigen::Ref<const Eigen::ArrayXd>& F,
                        const Eigen::Ref<const Eigen::ArrayXd>& G,
                        const Eigen::Ref<const Eigen::ArrayXd>& H,
                        const VelocityGrid& grid, double R);

inline Moments compute_moments(const CellState& s, const VelocityGrid& grid, double R) {
  return compute_moments(s.F, s.G, s.H, grid, R);
}

/// Normal heat flux q_x = sum [ (v-ux)^3 F / 2 + (v-ux)(G - uy H) ] w,
/// evaluated with the velocities carried by `moments`.
double compute_heat_flux(const Eigen::Ref<const Eigen::ArrayXd>& F,
                         const Eigen::Ref<const Eigen::ArrayXd>& G,
                         const Eigen::Ref<const Eigen::ArrayXd>& H,
                         const VelocityGrid& grid, const Moments& moments);

inline double compute_heat_flux(const CellState& s, const VelocityGrid& grid,
                                const Moments& moments) {
  return compute_heat_flux(s.F, s.G, s.H, grid, moments);
}

/// Moments including the heat flux.
Moments compute_full_moments(const CellState& s, const VelocityGrid& grid, double R);

}  // namespace bgk
