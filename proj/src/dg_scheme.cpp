#include "bgk/dg_scheme.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "bgk/limiters.hpp"

namespace bgk {

ElementMatrices assemble_element_matrices(const Mesh1D& mesh, const VelocityGrid& grid) {
  ElementMatrices m;
  m.mass = dg_mass_matrix(mesh.dx());
  m.mass_inverse = dg_mass_inverse(mesh.dx());
  for (Eigen::Index k = 0; k < grid.size(); ++k) {
    const double v = grid.nodes()[k];
    const double vp = positive_part(v), vm = negative_part(v);
    Eigen::Matrix2d a, b, c;
    a << 0, -vp, 0, 0;
    b << -vm, 0, 0, vp;
    c << 0, 0, vm, 0;
    m.d.push_back(dg_volume_matrix(v));
    m.a.push_back(a);
    m.b.push_back(b);
    m.c.push_back(c);
  }
  return m;
}

DgOperator::DgOperator(const Mesh1D& mesh, const VelocityGrid& grid, const GasModel& gas,
                       const WallModel& left, const WallModel& right, const DgOptions& options)
    : mesh_(mesh),
      grid_(&grid),
      gas_(gas),
      left_(left),
      right_(right),
      options_(options),
      mats_(assemble_element_matrices(mesh, grid)),
      relax_(grid, gas.R, options.conservative) {
  relax_.set_fallback(options.equilibrium_fallback);
  if (left.spec.normal != 1 || right.spec.normal != -1)
    throw std::invalid_argument("DgOperator: left wall needs normal +1 and right wall -1");
}

void DgOperator::relax(const DGState& state, DGState& dfdt) {
  const Eigen::Index n = state.cells();
  const Eigen::Index nv = state.velocities();
  if (options_.collisionless) {
    dfdt = DGState(n, nv);
    tau_ = Eigen::ArrayXd::Constant(2 * n, std::numeric_limits<double>::infinity());
    return;
  }
  // Nodes stacked as [left nodes of all cells; right nodes of all cells].
  nodesF_.resize(2 * n, nv);
  nodesG_.resize(2 * n, nv);
  nodesH_.resize(2 * n, nv);
  nodesF_ << state.left.F, state.right.F;
  nodesG_ << state.left.G, state.right.G;
  nodesH_ << state.left.H, state.right.H;
  try {
    relax_.evaluate(nodesF_, nodesG_, nodesH_, gas_, M_, N_, P_, tau_);
  } catch (const StateError& e) {
    const long point = e.point();
    throw StateError(e.reason(), point,
                     "cell " + std::to_string(point % n) + ", node " + std::to_string(point / n + 1));
  }
  const Eigen::ArrayXd rate = tau_.inverse();
  dfdt.left.F = (M_.topRows(n) - state.left.F).colwise() * rate.head(n);
  dfdt.left.G = (N_.topRows(n) - state.left.G).colwise() * rate.head(n);
  dfdt.left.H = (P_.topRows(n) - state.left.H).colwise() * rate.head(n);
  dfdt.right.F = (M_.bottomRows(n) - state.right.F).colwise() * rate.tail(n);
  dfdt.right.G = (N_.bottomRows(n) - state.right.G).colwise() * rate.tail(n);
  dfdt.right.H = (P_.bottomRows(n) - state.right.H).colwise() * rate.tail(n);
}

namespace {

Eigen::ArrayXXd& comp(ReducedState& s, int c) { return c == 0 ? s.F : (c == 1 ? s.G : s.H); }
const Eigen::ArrayXXd& comp(const ReducedState& s, int c) {
  return c == 0 ? s.F : (c == 1 ? s.G : s.H);
}
const Eigen::ArrayXd& comp(const CellState& s, int c) { return c == 0 ? s.F : (c == 1 ? s.G : s.H); }

}  // namespace

void DgOperator::rhs(const DGState& state, DGState& dfdt, Assembly assembly) {
  const int n = mesh_.cells();
  const Eigen::Index nv = grid_->size();
  if (state.cells() != n || state.velocities() != nv)
    throw std::invalid_argument("dg_rhs: state shape does not match mesh x grid");
  relax(state, dfdt);

  diag_ = DgDiagnostics{};
  diag_.min_tau = tau_.minCoeff();
  WallTrace lt, rt;
  if (!options_.periodic) {
    lt = dg_wall_trace(state.left.cell(0), left_, *grid_);
    rt = dg_wall_trace(state.right.cell(n - 1), right_, *grid_);
    diag_.left_sigma = lt.sigma;
    diag_.right_sigma = rt.sigma;
    diag_.left_wall_flux = wall_mass_flux(lt.state.F, *grid_);
    diag_.right_wall_flux = wall_mass_flux(rt.state.F, *grid_);
  }

  const double h = mesh_.dx();
  const auto& v = grid_->nodes();
  for (int c = 0; c < 3; ++c) {
    const Eigen::ArrayXXd& f1 = comp(state.left, c);
    const Eigen::ArrayXXd& f2 = comp(state.right, c);
    Eigen::ArrayXXd& d1 = comp(dfdt.left, c);
    Eigen::ArrayXXd& d2 = comp(dfdt.right, c);
    for (Eigen::Index k = 0; k < nv; ++k) {
      const double vk = v[k];
      const double vp = positive_part(vk), vm = negative_part(vk);
      // Upwind traces entering the first and last cells.
      const double inflow_left = options_.periodic ? f2(n - 1, k) : comp(lt.state, c)[k];
      const double inflow_right = options_.periodic ? f1(0, k) : comp(rt.state, c)[k];
      for (int i = 0; i < n; ++i) {
        const double a2 = i > 0 ? f2(i - 1, k) : inflow_left;
        const double c1 = i < n - 1 ? f1(i + 1, k) : inflow_right;
        const double x1 = f1(i, k), x2 = f2(i, k);
        if (assembly == Assembly::Block) {
          const double vol = 3.0 * vk / h * (x1 + x2);
          const double s = 2.0 / h;
          d1(i, k) += -vol - s * (-2.0 * vp * a2 - 2.0 * vm * x1 - vp * x2 - vm * c1);
          d2(i, k) += vol - s * (vp * a2 + vm * x1 + 2.0 * vp * x2 + 2.0 * vm * c1);
        } else {
          const Eigen::Vector2d fim1(0.0, a2), fi(x1, x2), fip1(c1, 0.0);
          const Eigen::Vector2d weak =
              -(mats_.d[k] * fi + mats_.a[k] * fim1 + mats_.b[k] * fi + mats_.c[k] * fip1);
          const Eigen::Vector2d rate = mats_.mass_inverse * weak;
          d1(i, k) += rate[0];
          d2(i, k) += rate[1];
        }
      }
    }
  }
}

DGState dg_rhs(const DGState& state, const Mesh1D& mesh, const VelocityGrid& grid,
               const GasModel& gas, const WallModel& left, const WallModel& right) {
  DgOperator op(mesh, grid, gas, left, right, DgOptions{});
  DGState out;
  op.rhs(state, out);
  return out;
}

ReducedState dg_cell_averages(const DGState& state) {
  ReducedState avg;
  avg.F = 0.5 * (state.left.F + state.right.F);
  avg.G = 0.5 * (state.left.G + state.right.G);
  avg.H = 0.5 * (state.left.H + state.right.H);
  return avg;
}

DGState dg_from_averages(const ReducedState& averages) {
  DGState s;
  s.left = averages;
  s.right = averages;
  return s;
}

double total_mass(const DGState& state, const Mesh1D& mesh, const VelocityGrid& grid) {
  const Eigen::ArrayXXd avg = 0.5 * (state.left.F + state.right.F);
  return mesh.dx() * (avg.matrix() * grid.weights().matrix()).sum();
}

}  // namespace bgk
