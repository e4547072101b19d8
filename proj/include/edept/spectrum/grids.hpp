#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "edept/constants.hpp"
#include "edept/errors.hpp"
#include "edept/numerics/grid.hpp"

namespace edept::spectrum {

/// Cylindrical mode set (k_rho, k_z) for rotationally symmetric fields.
///
/// k_rho = j dk (j = 1..n), k_z = -k_max..k_max in steps of dk. The weight of
/// node (p, q) is the share of d^3k/(2 pi)^3 after the k_phi integral,
/// k_rho dk_rho dk_z / (4 pi^2). k_rho = 0 is left out: the integrands used
/// here vanish there like k_rho^3.
class ModeGrid {
 public:
  ModeGrid(double dk, double k_max, double c = 1.0) : dk_(dk), k_max_(k_max), c_(c) {
    if (!(dk > 0.0) || !(k_max > dk) || !(c > 0.0)) throw InvalidArgument("mode grid needs 0 < dk < k_max and c > 0");
    const auto n = static_cast<std::size_t>(std::llround(k_max / dk));
    if (std::abs(static_cast<double>(n) * dk - k_max) > 1e-9 * k_max)
      throw InvalidArgument("k_max must be a multiple of dk");
    for (std::size_t j = 1; j <= n; ++j) {
      k_rho_.push_back(static_cast<double>(j) * dk);
      w_rho_.push_back(j == n ? 0.5 * dk : dk);
    }
    for (std::size_t j = 0; j <= 2 * n; ++j) {
      k_z_.push_back((static_cast<double>(j) - static_cast<double>(n)) * dk);
      w_z_.push_back((j == 0 || j == 2 * n) ? 0.5 * dk : dk);
    }
  }

  /// dk = 0.1 / L, k_max = 25 / L.
  static ModeGrid defaults(double length, double c = 1.0) { return ModeGrid(0.1 / length, 25.0 / length, c); }

  /// Same band, half the spacing.
  ModeGrid doubled() const { return ModeGrid(0.5 * dk_, k_max_, c_); }

  std::size_t n_rho() const { return k_rho_.size(); }
  std::size_t n_z() const { return k_z_.size(); }
  std::size_t size() const { return n_rho() * n_z(); }
  const std::vector<double>& k_rho() const { return k_rho_; }
  const std::vector<double>& k_z() const { return k_z_; }
  double dk() const { return dk_; }
  double k_max() const { return k_max_; }
  double c() const { return c_; }
  /// Smallest |k| on the grid; everything inside this ball is excluded.
  double k_min() const { return dk_; }

  double k_norm(std::size_t p, std::size_t q) const { return std::hypot(k_rho_[p], k_z_[q]); }
  double omega(std::size_t p, std::size_t q) const { return c_ * k_norm(p, q); }
  double weight(std::size_t p, std::size_t q) const {
    return k_rho_[p] * w_rho_[p] * w_z_[q] / (4.0 * kPi * kPi);
  }
  /// Trapezoid weight in k_rho alone (no k_rho factor).
  double weight_rho(std::size_t p) const { return w_rho_[p]; }
  double weight_z(std::size_t q) const { return w_z_[q]; }

  friend bool operator==(const ModeGrid& a, const ModeGrid& b) {
    return a.dk_ == b.dk_ && a.k_max_ == b.k_max_ && a.c_ == b.c_;
  }

 private:
  double dk_, k_max_, c_;
  std::vector<double> k_rho_, w_rho_, k_z_, w_z_;
};

/// Position grid for the forward transforms: rho uniform from the axis,
/// z uniform and symmetric, same step.
struct TransformGrid {
  numerics::AxisGrid rho;
  numerics::AxisGrid z;

  static TransformGrid uniform(double step, double extent) {
    const auto n = static_cast<std::size_t>(std::llround(extent / step));
    if (n < 4) throw InvalidArgument("transform grid needs extent >= 4 steps");
    return {numerics::AxisGrid::from_origin(step, n),
            numerics::AxisGrid::uniform(-static_cast<double>(n) * step, static_cast<double>(n) * step, 2 * n + 1)};
  }

  /// step 0.05 L over [0, 50 L] x [-50 L, 50 L].
  static TransformGrid defaults(double length) { return uniform(0.05 * length, 50.0 * length); }
};

}  // namespace edept::spectrum
