#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bgk/dg_scheme.hpp"
#include "bgk/fv_schemes.hpp"

namespace bgk {

struct ProfileRecord {
  double x = 0.0;  // cell center, m
  double rho = 0.0;
  double ux = 0.0;
  double uy = 0.0;
  double T = 0.0;
  double qx = 0.0;
};

struct WallRecord {
  double qx = 0.0;     // heat flux of the wall state
  double sigma = 0.0;  // reflected density
};

/// Macroscopic profile of a run, one record per cell ordered by x.
struct Profile {
  std::vector<ProfileRecord> records;
  WallRecord left, right;
};

ProfileRecord cell_record(double x, const CellState& s, const VelocityGrid& grid, double R);

/// Cell moments plus the wall values of the operator's boundary closure.
Profile make_profile(const FvOperator& op, const ReducedState& state, double R);
/// DG cells are reported by their cell averages.
Profile make_profile(const DgOperator& op, const DGState& state, double R);

/// Header `x,rho,ux,uy,T,qx`, values with 17 significant digits.
void write_profile_csv(const Profile& profile, std::ostream& out);
void emit_csv(const Profile& profile, const std::string& path);

/// `wall,qx,sigma` with rows `left` and `right`.
void write_wall_csv(const Profile& profile, std::ostream& out);

/// Inverse of write_profile_csv (wall values are not part of the file).
std::vector<ProfileRecord> read_profile_csv(std::istream& in);
std::vector<ProfileRecord> read_profile_csv(const std::string& path);

}  // namespace bgk
