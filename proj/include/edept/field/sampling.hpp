#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "edept/constants.hpp"
#include "edept/field/params.hpp"

namespace edept::field {

/// Points with r log-uniform on [r_min, r_max], isotropic direction, t uniform on [-t_span, t_span].
inline std::vector<SpacetimePoint> random_points(std::size_t n, double r_min, double r_max, double t_span,
                                                 unsigned seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<SpacetimePoint> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = r_min * std::pow(r_max / r_min, u(gen));
    const double cos_pol = 2.0 * u(gen) - 1.0;
    const double sin_pol = std::sqrt(1.0 - cos_pol * cos_pol);
    const double phi = 2.0 * kPi * u(gen);
    const double t = t_span * (2.0 * u(gen) - 1.0);
    pts.push_back(SpacetimePoint::cylindrical(t, r * sin_pol, phi, r * cos_pol));
  }
  return pts;
}

}  // namespace edept::field
