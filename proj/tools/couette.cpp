// Command line front end: `couette run` and `couette converge`.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "bgk/couette.hpp"
#include "bgk/study.hpp"

namespace fs = std::filesystem;

namespace {

struct Overrides {
  std::string config;
  std::string scheme;
  int cells = 0;
  std::string out;
};

bgk::RunConfig resolve(const Overrides& o) {
  bgk::RunConfig cfg = o.config.empty() ? bgk::RunConfig{} : bgk::load_config(o.config);
  if (!o.scheme.empty()) cfg.scheme = bgk::parse_scheme(o.scheme);
  if (o.cells > 0) cfg.cells = o.cells;
  if (!o.out.empty()) cfg.output = o.out;
  cfg.validate();
  return cfg;
}

// profile.csv -> profile.<suffix>.csv
std::string sidecar(const std::string& path, const std::string& suffix) {
  fs::path p(path);
  fs::path stem = p.stem();
  fs::path ext = p.has_extension() ? p.extension() : fs::path(".csv");
  return (p.parent_path() / (stem.string() + "." + suffix + ext.string())).string();
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

void report(const bgk::CouetteResult& r) {
  const auto& s = r.status;
  std::cerr << bgk::scheme_name(r.scheme) << " cells=" << r.cells << " steps=" << s.steps
            << " residual=" << s.residual << " time=" << s.wall_seconds << "s"
            << " mass_drift=" << s.mass_drift << (s.converged ? "" : " NOT CONVERGED") << '\n';
}

int cmd_run(const Overrides& o) {
  const bgk::RunConfig cfg = resolve(o);
  const bgk::CouetteResult r = bgk::run_couette(cfg);
  report(r);
  bgk::emit_csv(r.profile, cfg.output);
  if (!cfg.periodic) {
    auto walls = open_out(sidecar(cfg.output, "walls"));
    bgk::write_wall_csv(r.profile, walls);
  }
  return r.status.converged ? 0 : 3;
}

int cmd_converge(const Overrides& o) {
  const bgk::RunConfig cfg = resolve(o);
  const bgk::StudyResult st = bgk::run_convergence_study(cfg, report);
  auto orders = open_out(cfg.output);
  bgk::write_order_csv(st.orders, orders);
  const std::string errors = cfg.study_errors.empty() ? sidecar(cfg.output, "errors") : cfg.study_errors;
  auto err = open_out(errors);
  bgk::write_error_csv(st.errors, err);
  bgk::write_order_csv(st.orders, std::cout);
  bool ok = true;
  for (const auto& r : st.runs) ok = ok && r.status.converged;
  return ok ? 0 : 3;
}

void add_common(CLI::App* sub, Overrides& o) {
  sub->add_option("--config", o.config, "key = value configuration file")->check(CLI::ExistingFile);
  sub->add_option("--scheme", o.scheme, "O1, O2_flux, O2_slope, O2_slope_nolim, O2_slope_BC_O1, dg");
  sub->add_option("--cells", o.cells, "number of cells")->check(CLI::PositiveNumber);
  sub->add_option("--out", o.out, "output CSV path");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady BGK Couette flow solver"};
  app.require_subcommand(1);
  Overrides run_opts, conv_opts;
  auto* run = app.add_subcommand("run", "march one case to steady state and write its profile");
  add_common(run, run_opts);
  auto* conv = app.add_subcommand("converge", "mesh convergence study, writes the order table");
  add_common(conv, conv_opts);
  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(run_opts);
    return cmd_converge(conv_opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
