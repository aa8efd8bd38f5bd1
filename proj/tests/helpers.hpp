#pragma once

#include <Eigen/Core>
#include <random>

#include "bgk/equilibrium.hpp"
#include "bgk/velocity_grid.hpp"

namespace bgk::test {

inline VelocityGrid four_point_grid() { return build_uniform_grid(4, -2.0, 2.0); }
inline VelocityGrid couette_grid() { return build_uniform_grid(40, -953.0, 953.0); }

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

inline CellState random_state(std::mt19937& rng, Eigen::Index n) {
  std::uniform_real_distribution<double> u(0.1, 1.0);
  CellState s(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    s.F[k] = u(rng);
    s.G[k] = u(rng);
    s.H[k] = u(rng);
  }
  return s;
}

}  // namespace bgk::test
