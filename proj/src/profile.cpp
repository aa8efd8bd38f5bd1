#include "bgk/profile.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace bgk {

ProfileRecord cell_record(double x, const CellState& s, const VelocityGrid& grid, double R) {
  const Moments m = compute_full_moments(s, grid, R);
  return {x, m.rho, m.ux, m.uy, m.T, m.qx};
}

namespace {

WallRecord wall_record(const CellState& wall_state, double sigma, const VelocityGrid& grid,
                       double R) {
  return {compute_full_moments(wall_state, grid, R).qx, sigma};
}

}  // namespace

Profile make_profile(const FvOperator& op, const ReducedState& state, double R) {
  const Mesh1D& mesh = op.mesh();
  Profile p;
  p.records.reserve(mesh.cells());
  for (int i = 0; i < mesh.cells(); ++i)
    p.records.push_back(cell_record(mesh.center(i), state.cell(i), op.grid(), R));
  if (!op.options().periodic) {
    const auto walls = op.wall_closures(state);
    p.left = wall_record(walls.first.wall_side, walls.first.sigma, op.grid(), R);
    p.right = wall_record(walls.second.wall_side, walls.second.sigma, op.grid(), R);
  }
  return p;
}

Profile make_profile(const DgOperator& op, const DGState& state, double R) {
  const Mesh1D& mesh = op.mesh();
  const ReducedState avg = dg_cell_averages(state);
  Profile p;
  p.records.reserve(mesh.cells());
  for (int i = 0; i < mesh.cells(); ++i)
    p.records.push_back(cell_record(mesh.center(i), avg.cell(i), op.grid(), R));
  if (!op.options().periodic) {
    const int n = mesh.cells();
    const WallTrace l = dg_wall_trace(state.left.cell(0), op.left_wall(), op.grid());
    const WallTrace r = dg_wall_trace(state.right.cell(n - 1), op.right_wall(), op.grid());
    p.left = wall_record(l.state, l.sigma, op.grid(), R);
    p.right = wall_record(r.state, r.sigma, op.grid(), R);
  }
  return p;
}

void write_profile_csv(const Profile& profile, std::ostream& out) {
  out << "x,rho,ux,uy,T,qx\n" << std::setprecision(17);
  for (const auto& r : profile.records)
    out << r.x << ',' << r.rho << ',' << r.ux << ',' << r.uy << ',' << r.T << ',' << r.qx << '\n';
}

void write_wall_csv(const Profile& profile, std::ostream& out) {
  out << "wall,qx,sigma\n" << std::setprecision(17);
  out << "left," << profile.left.qx << ',' << profile.left.sigma << '\n';
  out << "right," << profile.right.qx << ',' << profile.right.sigma << '\n';
}

void emit_csv(const Profile& profile, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "': " + std::strerror(errno));
  write_profile_csv(profile, out);
  if (!out) throw std::runtime_error("error writing '" + path + "'");
}

std::vector<ProfileRecord> read_profile_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "x,rho,ux,uy,T,qx")
    throw std::runtime_error("profile csv: missing header 'x,rho,ux,uy,T,qx'");
  std::vector<ProfileRecord> out;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    ProfileRecord r;
    double* fields[] = {&r.x, &r.rho, &r.ux, &r.uy, &r.T, &r.qx};
    for (int f = 0; f < 6; ++f) {
      std::string cell;
      if (!std::getline(row, cell, ',') || cell.empty())
        throw std::runtime_error("profile csv: line " + std::to_string(line_no) + " has too few fields");
      std::size_t used = 0;
      *fields[f] = std::stod(cell, &used);
      if (used != cell.size())
        throw std::runtime_error("profile csv: line " + std::to_string(line_no) + ": bad number '" + cell + "'");
    }
    out.push_back(r);
  }
  return out;
}

std::vector<ProfileRecord> read_profile_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "': " + std::strerror(errno));
  return read_profile_csv(in);
}

}  // namespace bgk
