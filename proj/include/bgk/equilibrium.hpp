#pragma once

#include <Eigen/Core>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bgk/gas_physics.hpp"
#include "bgk/velocity_grid.hpp"

namespace bgk {

/// Parameters (rho, ux, uy, T) of a reduced Maxwellian triple.
struct MaxwellianParams {
  double rho = 1.0;
  double ux = 0.0;
  double uy = 0.0;
  double T = 1.0;
};

/// Reduced Maxwellian M = rho / sqrt(2 pi R T) exp(-(v - ux)^2 / (2 R T))
/// evaluated at the entries of `v`.
template <typename Derived>
Eigen::Array<typename Derived::Scalar, Eigen::Dynamic, 1> reduced_maxwellian(
    const Eigen::ArrayBase<Derived>& v, typename Derived::Scalar rho,
    typename Derived::Scalar ux, typename Derived::Scalar T, typename Derived::Scalar R) {
  using Scalar = typename Derived::Scalar;
  const Scalar rt = R * T;
  const Scalar amp = rho / std::sqrt(Scalar(2) * std::numbers::pi_v<Scalar> * rt);
  return amp * (-(v.derived() - ux).square() / (Scalar(2) * rt)).exp();
}

/// The reduced triple (M, N, P) with N = (R T + uy^2 / 2) M and P = uy M.
CellState reduced_maxwellians(double rho, double ux, double uy, double T,
                              const VelocityGrid& grid, double R);

inline CellState reduced_maxwellians(const MaxwellianParams& p, const VelocityGrid& grid,
                                     double R) {
  return reduced_maxwellians(p.rho, p.ux, p.uy, p.T, grid, R);
}

/// Newton did not reach the requested tolerance.
class EquilibriumError : public std::runtime_error {
 public:
  EquilibriumError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

struct EquilibriumResult {
  CellState state;
  MaxwellianParams params;  // parameters of the returned triple
  int iterations = 0;       // Newton updates applied
  double residual = 0.0;    // scaled moment mismatch at `params`
};

inline constexpr double kEquilibriumTolerance = 1e-13;
inline constexpr int kEquilibriumMaxIterations = 50;

/// Discrete equilibrium whose quadrature moments (rho, rho ux, rho uy, E)
/// reproduce those of `target`.
///
/// The triple is a reduced Maxwellian with adjusted parameters, found by
/// Newton iteration on the four conserved sums with an analytic Jacobian
/// (forward differences if the analytic one is singular).
/// The mismatch is measured componentwise as
/// (d rho / rho, d(rho ux) / (rho c), d(rho uy) / (rho c), dE / E) with
/// c = sqrt(R T). `guess` defaults to the target parameters.
///
/// Throws EquilibriumError carrying the last residual when the iteration
/// does not converge within `max_iterations`.
EquilibriumResult conservative_equilibrium(const Moments& target, const VelocityGrid& grid,
                                           double R, const MaxwellianParams* guess = nullptr,
                                           double tolerance = kEquilibriumTolerance,
                                           int max_iterations = kEquilibriumMaxIterations);

/// Scaled mismatch between the conserved sums of `s` and `target`.
double equilibrium_mismatch(const CellState& s, const Moments& target, const VelocityGrid& grid,
                            double R);

/// Equilibria and relaxation times for a batch of sample points (FV cells or
/// DG nodes). Newton guesses are carried between calls, which makes repeated
/// evaluation on a slowly varying state cost one pass per point.
class RelaxationField {
 public:
  RelaxationField(const VelocityGrid& grid, double R, bool conservative)
      : grid_(&grid), R_(R), conservative_(conservative) {}

  /// Fills `M`, `N`, `P` (points x velocities) with the equilibrium of each
  /// row of (F, G, H) and `tau` with the relaxation times of `gas`.
  /// A StateError names the offending row.
  void evaluate(const Eigen::ArrayXXd& F, const Eigen::ArrayXXd& G, const Eigen::ArrayXXd& H,
                const GasModel& gas, Eigen::ArrayXXd& M, Eigen::ArrayXXd& N, Eigen::ArrayXXd& P,
                Eigen::ArrayXd& tau);

  bool conservative() const { return conservative_; }

  /// When set, a point whose Newton solve fails gets the uncorrected
  /// Maxwellian instead of an exception; the first failure is logged.
  void set_fallback(bool on) { fallback_ = on; }
  long fallbacks() const { return fallbacks_; }

 private:
  const VelocityGrid* grid_;
  double R_;
  bool conservative_;
  bool fallback_ = false;
  long fallbacks_ = 0;
  // Offsets of the fitted parameters from the target ones, per point.
  Eigen::ArrayXXd corrections_;
  Eigen::ArrayXd m_, n_, p_;
};

}  // namespace bgk
