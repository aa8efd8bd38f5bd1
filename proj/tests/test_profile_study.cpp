#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <random>
#include <sstream>

#include "bgk/couette.hpp"
#include "bgk/study.hpp"
#include "helpers.hpp"

using namespace bgk;

namespace {

std::vector<ProfileRecord> constant_profile(int n, double value, double L = 1.0) {
  std::vector<ProfileRecord> p;
  for (int i = 0; i < n; ++i) p.push_back({(i + 0.5) * L / n, value, value, value, value, value});
  return p;
}

}  // namespace

TEST_CASE("profile CSV round trip") {
  std::mt19937 rng(47);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  Profile p;
  for (int i = 0; i < 25; ++i)
    p.records.push_back({u(rng), std::abs(u(rng)) * 1e-9, u(rng), u(rng), 1.0 / 3.0 + i, u(rng)});
  std::stringstream ss;
  write_profile_csv(p, ss);
  std::string header;
  std::getline(std::stringstream(ss.str()), header);
  CHECK(header == "x,rho,ux,uy,T,qx");
  const auto back = read_profile_csv(ss);
  REQUIRE(back.size() == p.records.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].x == p.records[i].x);
    CHECK(back[i].rho == p.records[i].rho);
    CHECK(back[i].T == p.records[i].T);
    CHECK(back[i].qx == p.records[i].qx);
  }
}

TEST_CASE("profile CSV errors") {
  std::stringstream bad_header("x,rho\n1,2\n");
  CHECK_THROWS_WITH(read_profile_csv(bad_header), doctest::Contains("header"));
  std::stringstream short_row("x,rho,ux,uy,T,qx\n1,2,3\n");
  CHECK_THROWS_WITH(read_profile_csv(short_row), doctest::Contains("line 2"));
  CHECK_THROWS(emit_csv(Profile{}, "/nonexistent-dir/profile.csv"));
}

TEST_CASE("l2 error") {
  const auto ref = constant_profile(40, 2.0, 4.0);
  CHECK(l2_error(ref, ref, Quantity::T) == 0.0);
  CHECK(l2_error(constant_profile(10, 1.5, 4.0), ref, Quantity::T) ==
        doctest::Approx(0.5 * std::sqrt(4.0)));

  // A linear reference restricts exactly onto the coarse cell centers.
  std::vector<ProfileRecord> fine, coarse;
  for (int i = 0; i < 32; ++i) {
    const double x = (i + 0.5) / 32;
    fine.push_back({x, 0, 0, 0, 1 + 3 * x, 0});
  }
  for (int i = 0; i < 8; ++i) {
    const double x = (i + 0.5) / 8;
    coarse.push_back({x, 0, 0, 0, 1 + 3 * x + (i == 2 ? 0.1 : 0.0), 0});
  }
  CHECK(l2_error(coarse, fine, Quantity::T) == doctest::Approx(0.1 * std::sqrt(1.0 / 8)));
  CHECK_THROWS_AS(l2_error(constant_profile(3, 1.0), ref, Quantity::T), std::invalid_argument);
  CHECK(l2_norm(constant_profile(4, -2.0, 9.0), Quantity::Ux) == doctest::Approx(6.0));
}

TEST_CASE("order fit") {
  std::vector<std::pair<double, double>> e1, e2;
  for (double h : {0.1, 0.05, 0.025, 0.0125}) {
    e1.emplace_back(h, 3 * h);
    e2.emplace_back(h, 7 * h * h);
  }
  CHECK(fit_order(e1) == doctest::Approx(1.0));
  CHECK(fit_order(e2) == doctest::Approx(2.0));
  CHECK_THROWS_AS(fit_order({{0.1, 1.0}, {0.05, 0.5}}), std::invalid_argument);
  CHECK_THROWS_AS(fit_order({{0.1, 1.0}, {0.05, 0.0}, {0.025, 0.1}}), std::invalid_argument);
}

TEST_CASE("order and error tables") {
  std::ostringstream orders, errors;
  write_order_csv({{Scheme::O1, Quantity::T, 0.98}}, orders);
  CHECK(orders.str() == "scheme,quantity,order\nO1,T,0.98\n");
  write_error_csv({{Scheme::DG, Quantity::Qx, 25, 0.04, 1.5}}, errors);
  CHECK(errors.str() == "scheme,quantity,cells,h,error\ndg,qx,25,0.040000000000000001,1.5\n");
}

TEST_CASE("FV prolongation conserves every cell") {
  ReducedState coarse(6, 3);
  coarse.F.setRandom();
  coarse.G.setRandom();
  coarse.H.setRandom();
  const ReducedState fine = prolong(coarse, 2);
  REQUIRE(fine.cells() == 12);
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 3; ++k) {
      CHECK(0.5 * (fine.F(2 * i, k) + fine.F(2 * i + 1, k)) == doctest::Approx(coarse.F(i, k)));
      CHECK(0.5 * (fine.H(2 * i, k) + fine.H(2 * i + 1, k)) == doctest::Approx(coarse.H(i, k)));
    }
  // Linear data away from the ends is prolonged exactly.
  ReducedState lin(5, 1);
  for (int i = 0; i < 5; ++i) lin.F(i, 0) = lin.G(i, 0) = lin.H(i, 0) = i;
  const ReducedState lf = prolong(lin, 4);
  CHECK(lf.F(9, 0) == doctest::Approx(1.875));
}
