#pragma once

#include <cmath>

#include "edept/errors.hpp"

namespace edept {

/// Vacuum constants. The toolkit works in natural units by default, but the
/// formulas carry every constant explicitly so another consistent set can be
/// plugged in. mu0 is always derived so that eps0 * mu0 * c^2 == 1.
class PhysicalConstants {
 public:
  constexpr PhysicalConstants() = default;

  PhysicalConstants(double c, double epsilon0, double hbar)
      : c_(c), epsilon0_(epsilon0), mu0_(1.0 / (epsilon0 * c * c)), hbar_(hbar) {
    if (!(c > 0.0) || !(epsilon0 > 0.0) || !(hbar > 0.0))
      throw InvalidArgument("physical constants must be positive");
  }

  static constexpr PhysicalConstants natural() { return {}; }

  constexpr double c() const { return c_; }
  constexpr double epsilon0() const { return epsilon0_; }
  constexpr double mu0() const { return mu0_; }
  constexpr double hbar() const { return hbar_; }

 private:
  double c_ = 1.0;
  double epsilon0_ = 1.0;
  double mu0_ = 1.0;
  double hbar_ = 1.0;
};

inline constexpr PhysicalConstants kNaturalUnits{};

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace edept
