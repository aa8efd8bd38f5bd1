#pragma once

#include <Eigen/Core>
#include <stdexcept>

namespace bgk {

/// Uniform 1D mesh of `cells` cells on [x0, x0 + length].
class Mesh1D {
 public:
  Mesh1D(int cells, double length, double x0 = 0.0) : cells_(cells), length_(length), x0_(x0) {
    if (cells < 1) throw std::invalid_argument("mesh: at least one cell required");
    if (!(length > 0)) throw std::invalid_argument("mesh: length must be positive");
  }

  int cells() const { return cells_; }
  double length() const { return length_; }
  double dx() const { return length_ / cells_; }

  /// Interface x_{i+1/2} for i = 0 .. cells (i = 0 is the left boundary).
  double node(int i) const { return x0_ + i * dx(); }
  double center(int i) const { return x0_ + (i + 0.5) * dx(); }

  Eigen::ArrayXd centers() const {
    return Eigen::ArrayXd::LinSpaced(cells_, x0_ + 0.5 * dx(), x0_ + length_ - 0.5 * dx());
  }
  Eigen::ArrayXd widths() const { return Eigen::ArrayXd::Constant(cells_, dx()); }

 private:
  int cells_;
  double length_;
  double x0_;
};

}  // namespace bgk
