#pragma once

#include <cmath>
#include <string>

#include "edept/constants.hpp"
#include "edept/errors.hpp"
#include "edept/numerics/grid.hpp"

namespace edept::numerics {

/// 2*pi * int int f(rho, z) rho drho dz for an azimuthally symmetric
/// integrand, using the tensor trapezoid weights of `grid`. The inner disc
/// [0, rho_0] below the first rho node is added with f frozen at rho_0,
/// which is exact to O(rho_0^4) for integrands smooth on the axis.
template <class F>
double integrate_cylindrical(F&& f, const CylGrid& grid) {
  const auto& r = grid.rho().nodes();
  const auto& wr = grid.rho().weights();
  const auto& z = grid.z().nodes();
  const auto& wz = grid.z().weights();
  double total = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    double column = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) {
      const double v = f(r[i], z[j]);
      if (!std::isfinite(v))
        throw RangeError("non-finite integrand at rho = " + std::to_string(r[i]) + ", z = " + std::to_string(z[j]));
      column += wz[j] * v;
    }
    total += wr[i] * r[i] * column;
    if (i == 0) total += 0.5 * r[0] * r[0] * column;
  }
  return 2.0 * kPi * total;
}

/// Same, for integrands already tabulated as values(i, j) on the grid.
template <class Matrix>
double integrate_cylindrical_samples(const Matrix& values, const CylGrid& grid) {
  const auto& r = grid.rho().nodes();
  const auto& wr = grid.rho().weights();
  const auto& wz = grid.z().weights();
  double total = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    double column = 0.0;
    for (std::size_t j = 0; j < wz.size(); ++j) column += wz[j] * values(i, j);
    total += wr[i] * r[i] * column;
    if (i == 0) total += 0.5 * r[0] * r[0] * column;
  }
  if (!std::isfinite(total)) throw RangeError("non-finite tabulated integrand");
  return 2.0 * kPi * total;
}

}  // namespace edept::numerics
