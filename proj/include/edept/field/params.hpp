#pragma once

#include <cmath>
#include <string>

#include "edept/errors.hpp"

namespace edept::field {

/// Which real solution is taken from the complex closed form. `Analytic`
/// keeps the complex field: its real projection is the real part and its
/// energy densities are those of the normally ordered one-photon state.
enum class Branch { RealPart, ImagPart, Analytic };

/// Odd alpha gives the clean real solution, even alpha the imaginary one.
constexpr Branch parity_branch(int alpha) { return alpha % 2 != 0 ? Branch::RealPart : Branch::ImagPart; }

inline std::string to_string(Branch b) {
  switch (b) {
    case Branch::RealPart: return "real";
    case Branch::ImagPart: return "imag";
    case Branch::Analytic: return "analytic";
  }
  return "?";
}

inline Branch branch_from_string(const std::string& s, int alpha) {
  if (s == "real") return Branch::RealPart;
  if (s == "imag") return Branch::ImagPart;
  if (s == "analytic") return Branch::Analytic;
  if (s == "default" || s.empty()) return parity_branch(alpha);
  throw InvalidArgument("unknown branch '" + s + "' (expected real, imag, analytic or default)");
}

/// Parameters of the focused pulse-train family: integer exponent alpha,
/// amplitude length g0, and the two focusing lengths g1, g2.
struct EdeptParams {
  int alpha = 1;
  double g0 = 1.0;
  double g1 = 1.0;
  double g2 = 1.0;
  Branch branch = Branch::RealPart;

  /// Parameters with the parity-rule branch.
  static EdeptParams make(int alpha, double g0 = 1.0, double g1 = 1.0, double g2 = 1.0) {
    EdeptParams p{alpha, g0, g1, g2, parity_branch(alpha)};
    p.validate();
    return p;
  }

  void validate() const {
    if (alpha < 1) throw InvalidArgument("alpha must be >= 1, got " + std::to_string(alpha));
    if (!(g0 > 0.0) || !(g1 > 0.0) || !(g2 > 0.0) || !std::isfinite(g0) || !std::isfinite(g1) ||
        !std::isfinite(g2))
      throw InvalidArgument("g0, g1, g2 must be positive and finite");
  }

  /// Largest focusing length; the natural unit for grids and fit windows.
  double length_scale() const { return g1 > g2 ? g1 : g2; }

  friend bool operator==(const EdeptParams&, const EdeptParams&) = default;
};

/// A spacetime point in cylindrical coordinates.
struct SpacetimePoint {
  double t = 0.0;
  double rho = 0.0;
  double theta = 0.0;
  double z = 0.0;

  static SpacetimePoint cylindrical(double t, double rho, double theta, double z) {
    if (!(rho >= 0.0)) throw InvalidArgument("rho must be >= 0");
    return {t, rho, theta, z};
  }

  static SpacetimePoint cartesian(double t, double x, double y, double z) {
    const double rho = std::hypot(x, y);
    double theta = rho > 0.0 ? std::atan2(y, x) : 0.0;
    if (theta < 0.0) theta += 2.0 * 3.14159265358979323846;
    return {t, rho, theta, z};
  }

  double x() const { return rho * std::cos(theta); }
  double y() const { return rho * std::sin(theta); }
  double r() const { return std::hypot(rho, z); }
  double tau(double c) const { return c * t; }
};

}  // namespace edept::field
