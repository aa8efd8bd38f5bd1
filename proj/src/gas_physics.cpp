#include "bgk/gas_physics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bgk {

void GasModel::validate() const {
  if (!(m > 0 && R > 0 && mu0 > 0 && T0 > 0 && omega_visc > 0 && alpha_bird > 0 && kb > 0))
    throw std::invalid_argument("gas model: all constants must be positive");
  if (std::abs(R * m - kb) > 5e-3 * kb)
    throw std::invalid_argument("gas model: R * m must match kb within 0.5%");
}

void WallSpec::validate() const {
  if (!(Tw > 0)) throw std::invalid_argument("wall: temperature must be positive");
  if (normal != 1 && normal != -1) throw std::invalid_argument("wall: normal must be +1 or -1");
}

double viscosity(const GasModel& gas, double T) {
  return gas.mu0 * std::pow(T / gas.T0, gas.omega_visc);
}

double relaxation_time(const GasModel& gas, double rho, double T) {
  return viscosity(gas, T) / (rho * gas.R * T);
}

double vhs_diameter(const GasModel& gas) {
  using std::numbers::pi;
  const double a = gas.alpha_bird;
  const double w = gas.omega_visc;
  const double num = 5.0 * (a + 1.0) * (a + 2.0) * std::sqrt(gas.m * gas.kb * gas.T0 / pi);
  const double den = 4.0 * a * (5.0 - 2.0 * w) * (7.0 - 2.0 * w) * gas.mu0;
  return std::sqrt(num / den);
}

double mean_free_path(const GasModel& gas, double rho, double T) {
  using std::numbers::pi;
  const double d = vhs_diameter(gas);
  return 1.0 / (std::sqrt(2.0) * pi * d * d * (rho / gas.m) *
                std::pow(gas.T0 / T, gas.omega_visc - 0.5));
}

double density_from_knudsen(const GasModel& gas, double knudsen, double L, double T) {
  if (!(knudsen > 0) || !(L > 0))
    throw std::invalid_argument("density_from_knudsen: Kn and L must be positive");
  // lambda is inversely proportional to rho.
  return mean_free_path(gas, 1.0, T) / (knudsen * L);
}

}  // namespace bgk
