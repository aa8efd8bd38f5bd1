#include "bgk/velocity_grid.hpp"

#include <cmath>
#include <iostream>

namespace bgk {

VelocityGrid::VelocityGrid(Eigen::ArrayXd nodes, Eigen::ArrayXd weights)
    : nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.size() == 0 || nodes_.size() != weights_.size())
    throw std::invalid_argument("velocity grid: nodes and weights must be nonempty and of equal size");
  for (Eigen::Index k = 1; k < nodes_.size(); ++k)
    if (!(nodes_[k] > nodes_[k - 1]))
      throw std::invalid_argument("velocity grid: nodes must be strictly increasing");
  if (!(weights_ > 0.0).all())
    throw std::invalid_argument("velocity grid: weights must be positive");
  if (!(nodes_[0] < 0.0) || !(nodes_[nodes_.size() - 1] > 0.0))
    throw std::invalid_argument("velocity grid: needs both negative and positive nodes");
  if ((nodes_ == 0.0).any())
    std::clog << "warning: velocity grid has a node at v = 0; it is treated as negative\n";

  if (nodes_.size() > 1) {
    const double dv = nodes_[1] - nodes_[0];
    bool uniform = true;
    for (Eigen::Index k = 1; k < nodes_.size(); ++k)
      uniform = uniform && std::abs((nodes_[k] - nodes_[k - 1]) - dv) <= 1e-12 * std::abs(dv);
    spacing_ = uniform ? dv : 0.0;
  }
}

VelocityGrid build_uniform_grid(int n, double vmin, double vmax) {
  if (n < 4) throw std::invalid_argument("velocity grid: at least 4 nodes required");
  if (!(vmin < 0.0) || !(vmax > 0.0))
    throw std::invalid_argument("velocity grid: bounds must satisfy vmin < 0 < vmax");
  const double dv = (vmax - vmin) / n;
  Eigen::ArrayXd nodes(n);
  for (int k = 0; k < n; ++k) nodes[k] = vmin + (k + 0.5) * dv;
  return VelocityGrid(std::move(nodes), Eigen::ArrayXd::Constant(n, dv));
}

Eigen::Vector4d conserved_moments(const Eigen::Ref<const Eigen::ArrayXd>& F,
                                  const Eigen::Ref<const Eigen::ArrayXd>& G,
                                  const Eigen::Ref<const Eigen::ArrayXd>& H,
                                  const VelocityGrid& grid) {
  const auto& v = grid.nodes();
  const auto& w = grid.weights();
  Eigen::Vector4d m;
  m[0] = (F * w).sum();
  m[1] = (v * F * w).sum();
  m[2] = (H * w).sum();
  m[3] = ((0.5 * v.square() * F + G) * w).sum();
  return m;
}

Moments compute_moments(const Eigen::Ref<const Eigen::ArrayXd>& F,
                        const Eigen::Ref<const Eigen::ArrayXd>& G,
                        const Eigen::Ref<const Eigen::ArrayXd>& H,
                        const VelocityGrid& grid, double R) {
  const Eigen::Vector4d c = conserved_moments(F, G, H, grid);
  Moments m;
  m.rho = c[0];
  if (!(m.rho > 0.0)) throw StateError("vacuum state");
  m.ux = c[1] / m.rho;
  m.uy = c[2] / m.rho;
  m.E = c[3];
  // E = rho |u|^2 / 2 + 3 rho R T / 2; the tangential kinetic energy is
  // carried by G, so it is removed here together with the normal part.
  const double internal = m.E - 0.5 * m.rho * (m.ux * m.ux + m.uy * m.uy);
  m.T = internal / (1.5 * m.rho * R);
  if (!(m.T > 0.0)) throw StateError("negative temperature");
  m.p = m.rho * R * m.T;
  return m;
}

double compute_heat_flux(const Eigen::Ref<const Eigen::ArrayXd>& F,
                         const Eigen::Ref<const Eigen::ArrayXd>& G,
                         const Eigen::Ref<const Eigen::ArrayXd>& H,
                         const VelocityGrid& grid, const Moments& moments) {
  const Eigen::ArrayXd c = grid.nodes() - moments.ux;
  return ((0.5 * c.cube() * F + c * (G - moments.uy * H)) * grid.weights()).sum();
}

Moments compute_full_moments(const CellState& s, const VelocityGrid& grid, double R) {
  Moments m = compute_moments(s, grid, R);
  m.qx = compute_heat_flux(s, grid, m);
  return m;
}

}  // namespace bgk
