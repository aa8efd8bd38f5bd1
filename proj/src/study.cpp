#include "bgk/study.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace bgk {

std::string_view quantity_name(Quantity q) {
  switch (q) {
    case Quantity::Rho: return "rho";
    case Quantity::Ux: return "ux";
    case Quantity::Uy: return "uy";
    case Quantity::T: return "T";
    case Quantity::Qx: return "qx";
  }
  return "?";
}

double quantity_of(const ProfileRecord& r, Quantity q) {
  switch (q) {
    case Quantity::Rho: return r.rho;
    case Quantity::Ux: return r.ux;
    case Quantity::Uy: return r.uy;
    case Quantity::T: return r.T;
    case Quantity::Qx: return r.qx;
  }
  return 0.0;
}

namespace {

// Uniform cell width recovered from the cell centers.
double cell_width(const std::vector<ProfileRecord>& p) {
  if (p.empty()) throw std::invalid_argument("empty profile");
  if (p.size() == 1) return 2.0 * p[0].x;
  return (p.back().x - p.front().x) / static_cast<double>(p.size() - 1);
}

}  // namespace

double l2_error(const std::vector<ProfileRecord>& coarse,
                const std::vector<ProfileRecord>& reference, Quantity q) {
  if (coarse.empty() || reference.size() % coarse.size() != 0)
    throw std::invalid_argument("l2_error: incompatible mesh ratio (" +
                                std::to_string(reference.size()) + " reference cells, " +
                                std::to_string(coarse.size()) + " coarse cells)");
  const std::size_t r = reference.size() / coarse.size();
  const double dx = cell_width(coarse);
  double sum = 0.0;
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    double avg = 0.0;
    for (std::size_t j = 0; j < r; ++j) avg += quantity_of(reference[i * r + j], q);
    avg /= static_cast<double>(r);
    const double d = quantity_of(coarse[i], q) - avg;
    sum += dx * d * d;
  }
  return std::sqrt(sum);
}

double l2_norm(const std::vector<ProfileRecord>& profile, Quantity q) {
  const double dx = cell_width(profile);
  double sum = 0.0;
  for (const auto& r : profile) sum += dx * quantity_of(r, q) * quantity_of(r, q);
  return std::sqrt(sum);
}

double fit_order(const std::vector<std::pair<double, double>>& h_error) {
  if (h_error.size() < 3) throw std::invalid_argument("fit_order: at least three levels needed");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [h, e] : h_error) {
    if (!(h > 0)) throw std::invalid_argument("fit_order: non-positive mesh size");
    if (!(e > 0)) throw std::invalid_argument("fit_order: non-positive error " + std::to_string(e));
    const double x = std::log(h), y = std::log(e);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(h_error.size());
  const double den = n * sxx - sx * sx;
  if (!(den > 0)) throw std::invalid_argument("fit_order: mesh sizes must differ");
  return (n * sxy - sx * sy) / den;
}

StudyResult run_convergence_study(const RunConfig& cfg, const StudyObserver& observer) {
  std::vector<int> meshes = cfg.study_meshes;
  std::sort(meshes.begin(), meshes.end());
  if (meshes.size() < 3) throw std::invalid_argument("study needs at least three meshes");
  for (int m : meshes)
    if (cfg.study_reference % m != 0 || cfg.study_reference == m)
      throw std::invalid_argument("study reference must be a proper multiple of every mesh");
  std::vector<int> levels = meshes;
  levels.push_back(cfg.study_reference);

  const std::vector<Scheme> schemes =
      cfg.study_schemes.empty() ? std::vector<Scheme>{cfg.scheme} : cfg.study_schemes;

  StudyResult out;
  for (Scheme s : schemes) {
    std::vector<CouetteResult> runs;
    for (std::size_t l = 0; l < levels.size(); ++l) {
      RunConfig level = cfg;
      level.scheme = s;
      level.cells = levels[l];
      // Sequencing only across exact refinements.
      const CouetteResult* start = nullptr;
      if (cfg.study_sequencing && l > 0 && levels[l] % levels[l - 1] == 0) start = &runs.back();
      runs.push_back(run_couette(level, start));
      if (observer) observer(runs.back());
    }
    const auto& ref = runs.back().profile.records;
    for (Quantity q : {Quantity::T, Quantity::Qx, Quantity::Ux}) {
      std::vector<std::pair<double, double>> pairs;
      for (std::size_t l = 0; l + 1 < runs.size(); ++l) {
        const auto& prof = runs[l].profile.records;
        const double e = q == Quantity::Ux ? l2_norm(prof, q) : l2_error(prof, ref, q);
        const double h = cfg.length / levels[l];
        out.errors.push_back({s, q, levels[l], h, e});
        pairs.emplace_back(h, e);
      }
      out.orders.push_back({s, q, fit_order(pairs)});
    }
    for (auto& r : runs) out.runs.push_back(std::move(r));
  }
  return out;
}

void write_order_csv(const std::vector<OrderRow>& orders, std::ostream& out) {
  out << "scheme,quantity,order\n" << std::setprecision(6);
  for (const auto& o : orders)
    out << scheme_name(o.scheme) << ',' << quantity_name(o.quantity) << ',' << o.order << '\n';
}

void write_error_csv(const std::vector<ErrorRow>& errors, std::ostream& out) {
  out << "scheme,quantity,cells,h,error\n" << std::setprecision(17);
  for (const auto& e : errors)
    out << scheme_name(e.scheme) << ',' << quantity_name(e.quantity) << ',' << e.cells << ','
        << e.h << ',' << e.error << '\n';
}

double order_of(const StudyResult& r, Scheme s, Quantity q) {
  for (const auto& o : r.orders)
    if (o.scheme == s && o.quantity == q) return o.order;
  throw std::out_of_range("no order recorded for " + std::string(scheme_name(s)) + "/" +
                          std::string(quantity_name(q)));
}

}  // namespace bgk
