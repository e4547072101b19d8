#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "edept/errors.hpp"

namespace edept::numerics {

enum class Spacing { Uniform, UniformFromOrigin, Logarithmic, SinhSymmetric };

/// One-dimensional node set with trapezoidal weights in the grid's natural
/// coordinate (x for uniform grids, ln x for logarithmic, asinh(x/scale) for
/// sinh grids). Every factory has a matching refinement that halves the
/// underlying step and keeps all existing nodes.
class AxisGrid {
 public:
  /// n >= 2 nodes on [a, b], endpoints included.
  static AxisGrid uniform(double a, double b, std::size_t n) {
    if (n < 2 || !(b > a)) throw InvalidArgument("uniform grid needs n >= 2 and b > a");
    AxisGrid g(Spacing::Uniform);
    g.lo_ = a;
    g.hi_ = b;
    g.step_ = (b - a) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      g.nodes_.push_back(i + 1 == n ? b : a + g.step_ * static_cast<double>(i));
      g.weights_.push_back((i == 0 || i + 1 == n) ? 0.5 * g.step_ : g.step_);
    }
    return g;
  }

  /// Nodes 0, h, 2h, ..., n*h. Transforms recognise this layout and apply
  /// the origin endpoint correction for odd integrands.
  static AxisGrid from_origin(double h, std::size_t n) {
    if (!(h > 0.0) || n < 2) throw InvalidArgument("from_origin grid needs h > 0 and n >= 2");
    AxisGrid g = uniform(0.0, h * static_cast<double>(n), n + 1);
    g.spacing_ = Spacing::UniformFromOrigin;
    return g;
  }

  /// n >= 2 nodes log-spaced on [a, b], a > 0.
  static AxisGrid logarithmic(double a, double b, std::size_t n) {
    if (!(a > 0.0) || !(b > a) || n < 2) throw InvalidArgument("log grid needs 0 < a < b and n >= 2");
    AxisGrid g(Spacing::Logarithmic);
    g.lo_ = a;
    g.hi_ = b;
    const double la = std::log(a), lb = std::log(b);
    g.step_ = (lb - la) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      const double x = i + 1 == n ? b : std::exp(la + g.step_ * static_cast<double>(i));
      g.nodes_.push_back(x);
      g.weights_.push_back(((i == 0 || i + 1 == n) ? 0.5 : 1.0) * g.step_ * x);
    }
    return g;
  }

  /// Odd n nodes x = scale*sinh(s), s uniform on [-S, S] with
  /// scale*sinh(S) = extent. Dense near 0, geometric in the tails.
  static AxisGrid sinh_symmetric(double scale, double extent, std::size_t n) {
    if (!(scale > 0.0) || !(extent > 0.0) || n < 3 || n % 2 == 0)
      throw InvalidArgument("sinh grid needs positive scale/extent and odd n >= 3");
    AxisGrid g(Spacing::SinhSymmetric);
    g.lo_ = scale;
    g.hi_ = extent;
    const double S = std::asinh(extent / scale);
    const std::size_t half = n / 2;
    g.step_ = S / static_cast<double>(half);
    for (std::size_t i = 0; i < n; ++i) {
      const double s = (static_cast<double>(i) - static_cast<double>(half)) * g.step_;
      double x = scale * std::sinh(s);
      if (i == 0) x = -extent;
      if (i + 1 == n) x = extent;
      if (i == half) x = 0.0;
      g.nodes_.push_back(x);
      g.weights_.push_back(((i == 0 || i + 1 == n) ? 0.5 : 1.0) * g.step_ * scale * std::cosh(s));
    }
    return g;
  }

  /// Halves the step in the natural coordinate; all current nodes survive.
  AxisGrid refined() const {
    const std::size_t n = nodes_.size();
    switch (spacing_) {
      case Spacing::Uniform: return uniform(lo_, hi_, 2 * n - 1);
      case Spacing::UniformFromOrigin: return from_origin(0.5 * step_, 2 * (n - 1));
      case Spacing::Logarithmic: return logarithmic(lo_, hi_, 2 * n - 1);
      case Spacing::SinhSymmetric: return sinh_symmetric(lo_, hi_, 2 * n - 1);
    }
    return *this;
  }

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return nodes_.size(); }
  Spacing spacing() const { return spacing_; }
  /// Step in the natural coordinate.
  double step() const { return step_; }
  double front() const { return nodes_.front(); }
  double back() const { return nodes_.back(); }

 private:
  explicit AxisGrid(Spacing s) : spacing_(s) {}

  std::vector<double> nodes_;
  std::vector<double> weights_;
  Spacing spacing_;
  double lo_ = 0.0;  // first parameter of the factory (a, h-origin, scale)
  double hi_ = 0.0;  // second parameter (b, extent)
  double step_ = 0.0;
};

/// Tensor grid over (rho, z) for azimuthally symmetric integrands.
class CylGrid {
 public:
  CylGrid(AxisGrid rho, AxisGrid z) : rho_(std::move(rho)), z_(std::move(z)) {
    if (rho_.front() <= 0.0) throw InvalidArgument("CylGrid rho nodes must be > 0");
  }

  /// Log-spaced rho over [1e-3, 1e3]*length, symmetric sinh-spaced z over
  /// +/-1e3*length with the same near-origin resolution.
  static CylGrid defaults(double length, std::size_t n_rho = 401, std::size_t n_z = 801) {
    return CylGrid(AxisGrid::logarithmic(1e-3 * length, 1e3 * length, n_rho),
                   AxisGrid::sinh_symmetric(0.5 * length, 1e3 * length, n_z));
  }

  CylGrid refined() const { return CylGrid(rho_.refined(), z_.refined()); }

  const AxisGrid& rho() const { return rho_; }
  const AxisGrid& z() const { return z_; }
  std::size_t n_rho() const { return rho_.size(); }
  std::size_t n_z() const { return z_.size(); }

 private:
  AxisGrid rho_;
  AxisGrid z_;
};

}  // namespace edept::numerics
