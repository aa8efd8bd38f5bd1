#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bgk {

/// sgn(a) min(|a|, |b|, |c|) when a, b, c share a sign, 0 otherwise.
template <typename Scalar>
constexpr Scalar minmod3(Scalar a, Scalar b, Scalar c) {
  // Branch-free: at most one of the two terms is nonzero.
  return std::max(Scalar(0), std::min({a, b, c})) + std::min(Scalar(0), std::max({a, b, c}));
}

template <typename Scalar>
constexpr Scalar positive_part(Scalar v) {
  return Scalar(0.5) * (v + std::abs(v));
}

template <typename Scalar>
constexpr Scalar negative_part(Scalar v) {
  return Scalar(0.5) * (v - std::abs(v));
}

/// v+ left + v- right.
template <typename Scalar>
constexpr Scalar upwind_flux(Scalar left, Scalar right, Scalar v) {
  return positive_part(v) * left + negative_part(v) * right;
}

/// Yee's symmetric limiter term at i+1/2 from the stencil f_{i-1} .. f_{i+2}.
template <typename Scalar>
constexpr Scalar yee_limiter(Scalar fm1, Scalar f0, Scalar f1, Scalar f2) {
  return minmod3(f0 - fm1, f1 - f0, f2 - f1);
}

/// TVD flux at i+1/2: upwind flux plus |v| / 2 times the Yee limiter.
template <typename Scalar>
constexpr Scalar yee_flux(Scalar fm1, Scalar f0, Scalar f1, Scalar f2, Scalar v) {
  return upwind_flux(f0, f1, v) + Scalar(0.5) * std::abs(v) * yee_limiter(fm1, f0, f1, f2);
}

/// Least-squares slope on a regular mesh.
template <typename Scalar>
constexpr Scalar centered_slope(Scalar fm1, Scalar fp1, Scalar dx) {
  return (fp1 - fm1) / (Scalar(2) * dx);
}

/// Throws std::invalid_argument unless alpha lies in [1/2, 1], the range
/// over which the wall ghost cells reproduce the interface states.
inline void check_mc_alpha(double alpha) {
  if (!(alpha >= 0.5 && alpha <= 1.0))
    throw std::invalid_argument("MC limiter: alpha must lie in [1/2, 1] (alpha >= 1/2 required)");
}

/// MC-limited slope minmod(centered, 2 alpha backward, 2 alpha forward).
/// Does not validate alpha; see check_mc_alpha.
template <typename Scalar>
constexpr Scalar mc_slope_unchecked(Scalar fm1, Scalar f0, Scalar fp1, Scalar dx, Scalar alpha) {
  return minmod3(centered_slope(fm1, fp1, dx), Scalar(2) * alpha * (f0 - fm1) / dx,
                 Scalar(2) * alpha * (fp1 - f0) / dx);
}

template <typename Scalar>
Scalar mc_limited_slope(Scalar fm1, Scalar f0, Scalar fp1, Scalar dx, Scalar alpha) {
  check_mc_alpha(alpha);
  return mc_slope_unchecked(fm1, f0, fp1, dx, alpha);
}

}  // namespace bgk
