#include "bgk/fv_schemes.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>
#include <string>

#include "bgk/limiters.hpp"

namespace bgk {

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::O1: return "O1";
    case Scheme::O2Flux: return "O2_flux";
    case Scheme::O2Slope: return "O2_slope";
    case Scheme::O2SlopeNoLim: return "O2_slope_nolim";
    case Scheme::O2SlopeBcO1: return "O2_slope_BC_O1";
    case Scheme::DG: return "dg";
  }
  return "?";
}

Scheme parse_scheme(std::string_view name) {
  std::string key;
  for (char c : name) key += c == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (key == "o1") return Scheme::O1;
  if (key == "o2_flux") return Scheme::O2Flux;
  if (key == "o2_slope") return Scheme::O2Slope;
  if (key == "o2_slope_nolim") return Scheme::O2SlopeNoLim;
  if (key == "o2_slope_bc_o1") return Scheme::O2SlopeBcO1;
  if (key == "dg") return Scheme::DG;
  throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

InterfaceStates reconstruct_interface_states(const Eigen::Ref<const Eigen::ArrayXd>& padded,
                                             double dx, SlopeMode mode, double alpha) {
  const Eigen::Index cells = padded.size() - 4;
  if (cells < 1) throw std::invalid_argument("reconstruct_interface_states: padded column too short");
  if (mode == SlopeMode::Limited) check_mc_alpha(alpha);
  // slope[j] for padded index j = 1 .. cells + 2
  Eigen::ArrayXd slope = Eigen::ArrayXd::Zero(padded.size());
  for (Eigen::Index j = 1; j <= cells + 2; ++j) {
    if (mode == SlopeMode::Limited)
      slope[j] = mc_slope_unchecked(padded[j - 1], padded[j], padded[j + 1], dx, alpha);
    else if (mode == SlopeMode::Centered)
      slope[j] = centered_slope(padded[j - 1], padded[j + 1], dx);
  }
  InterfaceStates s{Eigen::ArrayXd(cells + 1), Eigen::ArrayXd(cells + 1)};
  for (Eigen::Index j = 0; j <= cells; ++j) {
    s.left[j] = padded[j + 1] + 0.5 * dx * slope[j + 1];
    s.right[j] = padded[j + 2] - 0.5 * dx * slope[j + 2];
  }
  return s;
}

FvOperator::FvOperator(const Mesh1D& mesh, const VelocityGrid& grid, const GasModel& gas,
                       const WallModel& left, const WallModel& right, const FvOptions& options)
    : mesh_(mesh),
      grid_(&grid),
      gas_(gas),
      left_(left),
      right_(right),
      options_(options),
      relax_(grid, gas.R, options.conservative) {
  relax_.set_fallback(options.equilibrium_fallback);
  if (!is_finite_volume(options.scheme))
    throw std::invalid_argument("FvOperator: scheme is not a finite-volume scheme");
  if (options.scheme == Scheme::O2Slope || options.scheme == Scheme::O2SlopeBcO1)
    check_mc_alpha(options.alpha);
  const bool needs_two = options.scheme != Scheme::O1;
  if (mesh.cells() < (needs_two ? 2 : 1))
    throw std::invalid_argument("FvOperator: too few cells for the selected scheme");
  if (left.spec.normal != 1 || right.spec.normal != -1)
    throw std::invalid_argument("FvOperator: left wall needs normal +1 and right wall -1");
  padded_.resize(mesh.cells() + 4);
  flux_.resize(mesh.cells() + 1);
  slope_.resize(mesh.cells() + 4);
}

std::pair<WallClosure, WallClosure> FvOperator::wall_closures(const ReducedState& state) const {
  const int n = mesh_.cells();
  const auto& grid = *grid_;
  switch (options_.scheme) {
    case Scheme::O1:
      return {ghost_first_order(state.cell(0), left_, grid),
              ghost_first_order(state.cell(n - 1), right_, grid)};
    case Scheme::O2Flux:
      return {ghost_flux_limiter(state.cell(0), left_, grid),
              ghost_flux_limiter(state.cell(n - 1), right_, grid)};
    case Scheme::O2SlopeBcO1:
      return {wall_closure_slope_first_order(state.cell(0), left_, grid),
              wall_closure_slope_first_order(state.cell(n - 1), right_, grid)};
    case Scheme::O2Slope:
    case Scheme::O2SlopeNoLim:
      return {wall_closure_slope_scheme(state.cell(0), state.cell(1), left_, grid),
              wall_closure_slope_scheme(state.cell(n - 1), state.cell(n - 2), right_, grid)};
    case Scheme::DG: break;
  }
  throw std::logic_error("FvOperator: unsupported scheme");
}

namespace {

const Eigen::ArrayXd& component_of(const CellState& s, int c) {
  return c == 0 ? s.F : (c == 1 ? s.G : s.H);
}

}  // namespace

std::pair<double, double> FvOperator::transport(const Eigen::ArrayXXd& f, int component,
                                                const std::pair<WallClosure, WallClosure>* walls,
                                                Eigen::ArrayXXd& out) {
  const int n = mesh_.cells();
  const double dx = mesh_.dx();
  const double inv_dx = 1.0 / dx;
  const auto& v = grid_->nodes();
  const auto& w = grid_->weights();
  const Scheme scheme = options_.scheme;
  const double alpha = options_.alpha;
  double left_flux = 0.0, right_flux = 0.0;

  for (Eigen::Index k = 0; k < f.cols(); ++k) {
    const double vk = v[k];
    double* p = padded_.data();
    for (int i = 0; i < n; ++i) p[i + 2] = f(i, k);
    if (walls) {
      p[1] = component_of(walls->first.ghost0, component)[k];
      p[0] = component_of(walls->first.ghost1, component)[k];
      p[n + 2] = component_of(walls->second.ghost0, component)[k];
      p[n + 3] = component_of(walls->second.ghost1, component)[k];
    } else {
      p[1] = f(n - 1, k);
      p[0] = f((n - 2 + n) % n, k);
      p[n + 2] = f(0, k);
      p[n + 3] = f(1 % n, k);
    }

    // Interface values are upwinded per velocity, so the sign test is
    // hoisted out of the cell loops.
    double* F = flux_.data();
    const bool forward = vk > 0.0;
    switch (scheme) {
      case Scheme::O1:
        for (int j = 0; j <= n; ++j) F[j] = vk * p[forward ? j + 1 : j + 2];
        break;
      case Scheme::O2Flux: {
        const double half = 0.5 * std::abs(vk);
        for (int j = 0; j <= n; ++j)
          F[j] = vk * (forward ? p[j + 1] : p[j + 2]) + half * yee_limiter(p[j], p[j + 1], p[j + 2], p[j + 3]);
        break;
      }
      case Scheme::O2Slope:
      case Scheme::O2SlopeBcO1:
      case Scheme::O2SlopeNoLim: {
        // s holds half the slope times dx, i.e. the offset to either face.
        double* s = slope_.data();
        if (scheme == Scheme::O2SlopeNoLim) {
          for (int j = 1; j <= n + 2; ++j) s[j] = 0.25 * (p[j + 1] - p[j - 1]);
        } else {
          for (int j = 1; j <= n + 2; ++j)
            s[j] = 0.5 * minmod3(0.5 * (p[j + 1] - p[j - 1]), 2.0 * alpha * (p[j] - p[j - 1]),
                                 2.0 * alpha * (p[j + 1] - p[j]));
        }
        if (forward) {
          for (int j = 0; j <= n; ++j) F[j] = vk * (p[j + 1] + s[j + 1]);
        } else {
          for (int j = 0; j <= n; ++j) F[j] = vk * (p[j + 2] - s[j + 2]);
        }
        if (walls) {
          F[0] = upwind_flux(component_of(walls->first.wall_side, component)[k],
                             component_of(walls->first.gas_side, component)[k], vk);
          F[n] = upwind_flux(component_of(walls->second.gas_side, component)[k],
                             component_of(walls->second.wall_side, component)[k], vk);
        }
        break;
      }
      case Scheme::DG: break;
    }

    for (int i = 0; i < n; ++i) out(i, k) -= (F[i + 1] - F[i]) * inv_dx;
    left_flux += F[0] * w[k];
    right_flux += F[n] * w[k];
  }
  return {left_flux, right_flux};
}

void FvOperator::rhs(const ReducedState& state, ReducedState& dfdt) {
  const int n = mesh_.cells();
  if (state.cells() != n || state.velocities() != grid_->size())
    throw std::invalid_argument("fv_rhs: state shape does not match mesh x grid");
  dfdt.F.resize(n, grid_->size());
  dfdt.G.resize(n, grid_->size());
  dfdt.H.resize(n, grid_->size());

  if (options_.collisionless) {
    dfdt.F.setZero();
    dfdt.G.setZero();
    dfdt.H.setZero();
    tau_ = Eigen::ArrayXd::Constant(n, std::numeric_limits<double>::infinity());
  } else {
    relax_.evaluate(state.F, state.G, state.H, gas_, M_, N_, P_, tau_);
    const Eigen::ArrayXd rate = tau_.inverse();
    dfdt.F = (M_ - state.F).colwise() * rate;
    dfdt.G = (N_ - state.G).colwise() * rate;
    dfdt.H = (P_ - state.H).colwise() * rate;
  }

  diag_ = FvDiagnostics{};
  diag_.min_tau = tau_.minCoeff();
  std::pair<WallClosure, WallClosure> walls;
  const bool walled = !options_.periodic;
  if (walled) {
    walls = wall_closures(state);
    diag_.left_sigma = walls.first.sigma;
    diag_.right_sigma = walls.second.sigma;
    diag_.negative_wall_values = walls.first.negative_count + walls.second.negative_count;
  }
  const auto* wp = walled ? &walls : nullptr;
  const auto mass = transport(state.F, 0, wp, dfdt.F);
  transport(state.G, 1, wp, dfdt.G);
  transport(state.H, 2, wp, dfdt.H);
  diag_.left_wall_flux = mass.first;
  diag_.right_wall_flux = mass.second;
}

ReducedState fv_rhs(const ReducedState& state, const Mesh1D& mesh, const VelocityGrid& grid,
                    const GasModel& gas, const WallModel& left, const WallModel& right,
                    Scheme scheme, double alpha) {
  FvOptions opt;
  opt.scheme = scheme;
  opt.alpha = alpha;
  FvOperator op(mesh, grid, gas, left, right, opt);
  ReducedState out;
  op.rhs(state, out);
  return out;
}

double total_mass(const ReducedState& state, const Mesh1D& mesh, const VelocityGrid& grid) {
  return mesh.dx() * (state.F.matrix() * grid.weights().matrix()).sum();
}

}  // namespace bgk
