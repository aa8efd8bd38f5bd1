#pragma once

namespace bgk {

/// Monatomic gas with a power-law (VHS/VSS) viscosity.
struct GasModel {
  double m = 0.663e-25;       // molecular mass, kg
  double R = 208.24;          // specific gas constant, J/(kg K)
  double mu0 = 2.117e-5;      // reference viscosity, Pa s
  double T0 = 273.15;         // reference temperature, K
  double omega_visc = 0.81;   // viscosity exponent
  double alpha_bird = 1.0;    // VSS scattering parameter (1 = VHS)
  double kb = 1.380649e-23;   // Boltzmann constant, J/K

  /// Throws std::invalid_argument when a constant is non-positive or when
  /// R m differs from kb by more than 0.5 %.
  void validate() const;
};

/// Argon, as used for the Couette benchmark.
inline GasModel argon() { return GasModel{}; }

/// Isothermal diffuse wall. `normal` is +1 for the left wall (gas on the
/// right) and -1 for the right wall.
struct WallSpec {
  double Tw = 273.0;
  double uw = 0.0;
  int normal = +1;

  void validate() const;
};

/// mu = mu0 (T / T0)^omega.
double viscosity(const GasModel& gas, double T);

/// BGK relaxation time tau = mu(T) / (rho R T).
double relaxation_time(const GasModel& gas, double rho, double T);

/// Molecular diameter from Bird's VHS/VSS reference-viscosity relation.
double vhs_diameter(const GasModel& gas);

/// lambda = [ sqrt(2) pi d^2 (rho/m) (T0/T)^(omega - 1/2) ]^-1.
double mean_free_path(const GasModel& gas, double rho, double T);

/// Density for which mean_free_path(rho, T) / L equals `knudsen`.
double density_from_knudsen(const GasModel& gas, double knudsen, double L, double T);

}  // namespace bgk
