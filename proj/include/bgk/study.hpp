#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bgk/config.hpp"
#include "bgk/couette.hpp"
#include "bgk/profile.hpp"

namespace bgk {

enum class Quantity { Rho, Ux, Uy, T, Qx };

std::string_view quantity_name(Quantity q);
double quantity_of(const ProfileRecord& r, Quantity q);

/// sqrt(sum_i dx_i (q_i - qbar_i)^2) where qbar is the reference profile
/// averaged over the cells of the coarse mesh. The reference cell count
/// must be an integer multiple of the coarse one.
double l2_error(const std::vector<ProfileRecord>& coarse,
                const std::vector<ProfileRecord>& reference, Quantity q);

/// sqrt(sum_i dx_i q_i^2), the error against an exact value of zero.
double l2_norm(const std::vector<ProfileRecord>& profile, Quantity q);

/// Least-squares slope of log e against log h over at least three levels.
double fit_order(const std::vector<std::pair<double, double>>& h_error);

struct ErrorRow {
  Scheme scheme;
  Quantity quantity;
  int cells;
  double h;
  double error;
};

struct OrderRow {
  Scheme scheme;
  Quantity quantity;
  double order;
};

struct StudyResult {
  std::vector<ErrorRow> errors;
  std::vector<OrderRow> orders;
  std::vector<CouetteResult> runs;  // every level of every scheme, reference last
};

/// Called after each finished run (for progress reporting).
using StudyObserver = std::function<void(const CouetteResult&)>;

/// Self-convergence study of T and q_x against the reference mesh, plus u_x
/// against its exact value 0, for every scheme of the study. With
/// sequencing, each level starts from the previous (coarser) converged one.
StudyResult run_convergence_study(const RunConfig& cfg, const StudyObserver& observer = {});

/// `scheme,quantity,order`
void write_order_csv(const std::vector<OrderRow>& orders, std::ostream& out);
/// `scheme,quantity,cells,h,error`
void write_error_csv(const std::vector<ErrorRow>& errors, std::ostream& out);

double order_of(const StudyResult& r, Scheme s, Quantity q);

}  // namespace bgk
