#include "bgk/equilibrium.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <iostream>
#include <string>
#include <vector>

namespace bgk {

CellState reduced_maxwellians(double rho, double ux, double uy, double T,
                              const VelocityGrid& grid, double R) {
  Eigen::ArrayXd M = reduced_maxwellian(grid.nodes(), rho, ux, T, R);
  Eigen::ArrayXd N = (R * T + 0.5 * uy * uy) * M;
  Eigen::ArrayXd P = uy * M;
  return CellState(std::move(M), std::move(N), std::move(P));
}

namespace {

// m_k = amp exp(-a (v_k - u)^2 / 2). On a uniform grid the ratio of
// neighbouring samples is itself geometric, so only a handful of
// exponentials are needed; the recurrence runs outward from the peak so
// that underflow in the tails is harmless.
void gaussian_samples(const VelocityGrid& grid, double u, double a, double amp, double* m) {
  const Eigen::Index nv = grid.size();
  const double dv = grid.uniform_spacing();
  const double* v = grid.nodes().data();
  if (dv <= 0.0) {
    Eigen::Map<Eigen::ArrayXd>(m, nv) = amp * (-0.5 * a * (grid.nodes() - u).square()).exp();
    return;
  }
  const Eigen::Index j = std::clamp<Eigen::Index>(
      static_cast<Eigen::Index>(std::lround((u - v[0]) / dv)), 0, nv - 1);
  const double c = v[j] - u;
  m[j] = amp * std::exp(-0.5 * a * c * c);
  const double g = std::exp(-a * dv * dv);
  double r = std::exp(-a * dv * (c + 0.5 * dv));
  for (Eigen::Index k = j + 1; k < nv; ++k) {
    m[k] = m[k - 1] * r;
    r *= g;
  }
  r = std::exp(a * dv * (c - 0.5 * dv));
  for (Eigen::Index k = j - 1; k >= 0; --k) {
    m[k] = m[k + 1] * r;
    r *= g;
  }
}

// Conserved sums (rho, rho ux, rho uy, E) of the triple with parameters q.
Eigen::Vector4d triple_moments(const VelocityGrid& grid, double R, const MaxwellianParams& q,
                               double* scratch) {
  const double rt = R * q.T;
  gaussian_samples(grid, q.ux, 1.0 / rt, q.rho / std::sqrt(2.0 * std::numbers::pi * rt), scratch);
  const auto m = Eigen::Map<const Eigen::ArrayXd>(scratch, grid.size()) * grid.weights();
  const double A0 = m.sum();
  const double A1 = (m * grid.nodes()).sum();
  const double A2 = 0.5 * (m * grid.nodes().square()).sum();
  return {A0, A1, q.uy * A0, A2 + (rt + 0.5 * q.uy * q.uy) * A0};
}

// Forward differences with relative step 1e-7.
Eigen::Matrix4d jacobian_fd(const VelocityGrid& grid, double R, const MaxwellianParams& q,
                            const Eigen::Vector4d& base, double* scratch) {
  Eigen::Matrix4d J;
  const double c = std::sqrt(R * q.T);
  const double h[4] = {1e-7 * q.rho, 1e-7 * c, 1e-7 * c, 1e-7 * q.T};
  for (int j = 0; j < 4; ++j) {
    MaxwellianParams p = q;
    (j == 0 ? p.rho : j == 1 ? p.ux : j == 2 ? p.uy : p.T) += h[j];
    J.col(j) = (triple_moments(grid, R, p, scratch) - base) / h[j];
  }
  return J;
}

struct Scales {
  double rho, momentum, energy;
};

MaxwellianParams params_from_conserved(const Eigen::Vector4d& c, double R) {
  MaxwellianParams p;
  p.rho = c[0];
  p.ux = c[1] / c[0];
  p.uy = c[2] / c[0];
  p.T = (c[3] - 0.5 * p.rho * (p.ux * p.ux + p.uy * p.uy)) / (1.5 * p.rho * R);
  return p;
}

Scales scales_of(const MaxwellianParams& p, double E, double R) {
  return {p.rho, p.rho * std::sqrt(R * p.T), E};
}

double scaled_norm(const Eigen::Vector4d& r, const Scales& s) {
  return std::max({std::abs(r[0]) / s.rho, std::abs(r[1]) / s.momentum,
                   std::abs(r[2]) / s.momentum, std::abs(r[3]) / s.energy});
}

struct NewtonOutcome {
  MaxwellianParams params;
  int iterations = 0;
  double residual = 0.0;
};

// Newton on the four conserved sums. On return m, n, p hold the triple at
// the final parameters.
NewtonOutcome solve_newton(const Eigen::Vector4d& target, const Scales& scales,
                           const VelocityGrid& grid, double R, MaxwellianParams q,
                           double tolerance, int max_iterations, double* m, double* n,
                           double* p) {
  const double* v = grid.nodes().data();
  const double* w = grid.weights().data();
  const Eigen::Index nv = grid.size();

  NewtonOutcome out;
  for (int iter = 0;; ++iter) {
    const double rt = R * q.T;
    const double a = 1.0 / rt;
    const double amp = q.rho / std::sqrt(2.0 * std::numbers::pi * rt);
    const double dT = 0.5 / q.T;
    gaussian_samples(grid, q.ux, a, amp, m);
    double A0 = 0, A1 = 0, A2 = 0;
    for (Eigen::Index k = 0; k < nv; ++k) {
      const double ew = m[k] * w[k];
      A0 += ew;
      A1 += v[k] * ew;
      A2 += 0.5 * v[k] * v[k] * ew;
    }
    const double K = rt + 0.5 * q.uy * q.uy;
    const Eigen::Vector4d mom(A0, A1, q.uy * A0, A2 + K * A0);
    const Eigen::Vector4d r = target - mom;
    out.residual = scaled_norm(r, scales);
    out.params = q;
    out.iterations = iter;
    if (out.residual <= tolerance || iter == max_iterations) {
      for (Eigen::Index k = 0; k < nv; ++k) {
        n[k] = K * m[k];
        p[k] = q.uy * m[k];
      }
      if (out.residual > tolerance)
        throw EquilibriumError("conservative equilibrium: Newton did not converge (residual " +
                                   std::to_string(out.residual) + ")",
                               out.residual);
      return out;
    }

    // Derivatives of the sums with respect to ux (B) and T (C).
    double B0 = 0, B1 = 0, B2 = 0, C0 = 0, C1 = 0, C2 = 0;
    for (Eigen::Index k = 0; k < nv; ++k) {
      const double c = v[k] - q.ux;
      const double ew = m[k] * w[k];
      const double vk = v[k];
      const double hv2 = 0.5 * vk * vk;
      const double ec = ew * c * a;
      B0 += ec;
      B1 += vk * ec;
      B2 += hv2 * ec;
      const double et = ew * (c * c * a - 1.0) * dT;
      C0 += et;
      C1 += vk * et;
      C2 += hv2 * et;
    }

    Eigen::Matrix4d J;
    const double ir = 1.0 / q.rho;
    J << A0 * ir, B0, 0.0, C0,
         A1 * ir, B1, 0.0, C1,
         q.uy * A0 * ir, q.uy * B0, A0, q.uy * C0,
         mom[3] * ir, B2 + K * B0, q.uy * A0, C2 + K * C0 + R * A0;
    Eigen::Vector4d step = J.partialPivLu().solve(r);
    if (!step.allFinite()) {
      std::vector<double> scratch(nv);
      step = jacobian_fd(grid, R, q, mom, scratch.data()).partialPivLu().solve(r);
    }
    if (!step.allFinite())
      throw EquilibriumError("conservative equilibrium: singular Jacobian", out.residual);
    double lambda = 1.0;
    while (q.rho + lambda * step[0] <= 0.0 || q.T + lambda * step[3] <= 0.0) lambda *= 0.5;
    q.rho += lambda * step[0];
    q.ux += lambda * step[1];
    q.uy += lambda * step[2];
    q.T += lambda * step[3];
  }
}

}  // namespace

EquilibriumResult conservative_equilibrium(const Moments& target, const VelocityGrid& grid,
                                           double R, const MaxwellianParams* guess,
                                           double tolerance, int max_iterations) {
  if (!(target.rho > 0.0)) throw StateError("vacuum state");
  if (!(target.T > 0.0)) throw StateError("negative temperature");
  const MaxwellianParams tp{target.rho, target.ux, target.uy, target.T};
  const double E = 0.5 * target.rho * (target.ux * target.ux + target.uy * target.uy) +
                   1.5 * target.rho * R * target.T;
  const Eigen::Vector4d conserved(target.rho, target.rho * target.ux, target.rho * target.uy, E);

  EquilibriumResult res;
  res.state = CellState(grid.size());
  const NewtonOutcome o =
      solve_newton(conserved, scales_of(tp, E, R), grid, R, guess ? *guess : tp, tolerance,
                   max_iterations, res.state.F.data(), res.state.G.data(), res.state.H.data());
  res.params = o.params;
  res.iterations = o.iterations;
  res.residual = o.residual;
  return res;
}

double equilibrium_mismatch(const CellState& s, const Moments& target, const VelocityGrid& grid,
                            double R) {
  const double E = 0.5 * target.rho * (target.ux * target.ux + target.uy * target.uy) +
                   1.5 * target.rho * R * target.T;
  const Eigen::Vector4d conserved(target.rho, target.rho * target.ux, target.rho * target.uy, E);
  const MaxwellianParams tp{target.rho, target.ux, target.uy, target.T};
  return scaled_norm(conserved - conserved_moments(s.F, s.G, s.H, grid), scales_of(tp, E, R));
}

void RelaxationField::evaluate(const Eigen::ArrayXXd& F, const Eigen::ArrayXXd& G,
                               const Eigen::ArrayXXd& H, const GasModel& gas,
                               Eigen::ArrayXXd& M, Eigen::ArrayXXd& N, Eigen::ArrayXXd& P,
                               Eigen::ArrayXd& tau) {
  const Eigen::Index points = F.rows();
  const Eigen::Index nv = F.cols();
  M.resize(points, nv);
  N.resize(points, nv);
  P.resize(points, nv);
  tau.resize(points);
  m_.resize(nv);
  n_.resize(nv);
  p_.resize(nv);
  if (corrections_.rows() != points) corrections_ = Eigen::ArrayXXd::Zero(points, 4);

  const auto& v = grid_->nodes();
  const auto& w = grid_->weights();
  for (Eigen::Index i = 0; i < points; ++i) {
    Eigen::Vector4d c = Eigen::Vector4d::Zero();
    for (Eigen::Index k = 0; k < nv; ++k) {
      const double f = F(i, k) * w[k];
      c[0] += f;
      c[1] += v[k] * f;
      c[2] += H(i, k) * w[k];
      c[3] += 0.5 * v[k] * v[k] * f + G(i, k) * w[k];
    }
    if (!(c[0] > 0.0)) throw StateError("vacuum state", i, "cell " + std::to_string(i));
    const MaxwellianParams tp = params_from_conserved(c, R_);
    if (!(tp.T > 0.0)) throw StateError("negative temperature", i, "cell " + std::to_string(i));
    tau[i] = relaxation_time(gas, tp.rho, tp.T);

    if (!conservative_) {
      const double rt = R_ * tp.T;
      const double amp = tp.rho / std::sqrt(2.0 * std::numbers::pi * rt);
      const double K = rt + 0.5 * tp.uy * tp.uy;
      for (Eigen::Index k = 0; k < nv; ++k) {
        const double d = v[k] - tp.ux;
        const double e = amp * std::exp(-0.5 * d * d / rt);
        M(i, k) = e;
        N(i, k) = K * e;
        P(i, k) = tp.uy * e;
      }
      continue;
    }

    MaxwellianParams guess = tp;
    guess.rho *= 1.0 + corrections_(i, 0);
    guess.ux += corrections_(i, 1);
    guess.uy += corrections_(i, 2);
    guess.T *= 1.0 + corrections_(i, 3);
    NewtonOutcome o;
    try {
      o = solve_newton(c, scales_of(tp, c[3], R_), *grid_, R_, guess, kEquilibriumTolerance,
                       kEquilibriumMaxIterations, m_.data(), n_.data(), p_.data());
    } catch (const EquilibriumError& e) {
      if (!fallback_)
        throw EquilibriumError(std::string(e.what()) + " at cell " + std::to_string(i),
                               e.residual());
      if (fallbacks_++ == 0)
        std::clog << "warning: " << e.what() << " at cell " << i
                  << "; using the uncorrected Maxwellian\n";
      corrections_.row(i).setZero();
      const CellState plain = reduced_maxwellians(tp, *grid_, R_);
      M.row(i) = plain.F.transpose();
      N.row(i) = plain.G.transpose();
      P.row(i) = plain.H.transpose();
      continue;
    }
    corrections_(i, 0) = o.params.rho / tp.rho - 1.0;
    corrections_(i, 1) = o.params.ux - tp.ux;
    corrections_(i, 2) = o.params.uy - tp.uy;
    corrections_(i, 3) = o.params.T / tp.T - 1.0;
    M.row(i) = m_.transpose();
    N.row(i) = n_.transpose();
    P.row(i) = p_.transpose();
  }
}

}  // namespace bgk
