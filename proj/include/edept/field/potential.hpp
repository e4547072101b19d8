#pragma once

// Closed-form azimuthal vector potential of the focused pulse train,
//
//   A_theta = 2 alpha mu0 g0^alpha rho [g1 + i(z - tau)]^(alpha-1) / D^(alpha+1),
//   D = rho^2 + z^2 - tau^2 + i(g2 - g1) z - i(g2 + g1) tau + g1 g2,
//
// written as A_theta = rho * h(tau, rho^2, z) so that every derivative is
// regular on the axis. Re D >= g1 g2 whenever Im D = 0, so D never vanishes
// for real arguments.

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "edept/constants.hpp"
#include "edept/dual.hpp"
#include "edept/errors.hpp"
#include "edept/field/params.hpp"

namespace edept::field {

using cplx = std::complex<double>;
inline constexpr cplx kI{0.0, 1.0};

template <class S>
S denominator(const EdeptParams& p, const S& tau, const S& rho2, const S& z) {
  return rho2 + z * z - tau * tau + (kI * (p.g2 - p.g1)) * z - (kI * (p.g2 + p.g1)) * tau + p.g1 * p.g2;
}

/// h(tau, s = rho^2, z). S is cplx or a (nested) Dual over cplx.
template <class S>
S potential_profile(const EdeptParams& p, const PhysicalConstants& units, const S& tau, const S& rho2,
                    const S& z) {
  const S d = denominator(p, tau, rho2, z);
  const cplx dv = value_of(d);
  if (!std::isfinite(dv.real()) || !std::isfinite(dv.imag()))
    throw RangeError("denominator overflows at tau = " + std::to_string(value_of(tau).real()) +
                     ", rho^2 = " + std::to_string(value_of(rho2).real()) +
                     ", z = " + std::to_string(value_of(z).real()));
  // Grouped as (N/D)^(alpha-1) / D^2 so large |D| underflows instead of
  // overflowing.
  const S inv = S(1.0) / d;
  const S num = (z - tau) * kI + p.g1;
  const double prefactor = 2.0 * p.alpha * units.mu0() * std::pow(p.g0, p.alpha);
  S h = ipow(num * inv, p.alpha - 1) * (inv * inv) * prefactor;
  const cplx hv = value_of(h);
  if (!std::isfinite(hv.real()) || !std::isfinite(hv.imag()))
    throw RangeError("vector potential overflows");
  return h;
}

/// A_theta(tau, rho, z) for any scalar type (used for derivatives in rho).
template <class S>
S azimuthal_potential(const EdeptParams& p, const PhysicalConstants& units, const S& tau, const S& rho,
                      const S& z) {
  return rho * potential_profile(p, units, tau, rho * rho, z);
}

/// Complex azimuthal amplitude A_theta at a spacetime point.
inline cplx vector_potential(const EdeptParams& p, const SpacetimePoint& pt,
                             const PhysicalConstants& units = kNaturalUnits) {
  p.validate();
  const cplx tau = pt.tau(units.c());
  return azimuthal_potential<cplx>(p, units, tau, cplx(pt.rho), cplx(pt.z));
}

inline cplx denominator_at(const EdeptParams& p, const SpacetimePoint& pt,
                           const PhysicalConstants& units = kNaturalUnits) {
  return denominator<cplx>(p, cplx(pt.tau(units.c())), cplx(pt.rho * pt.rho), cplx(pt.z));
}

/// The two roots of D = 0 in the complex tau plane at fixed (rho, z).
inline std::array<cplx, 2> time_poles(const EdeptParams& p, double rho, double z) {
  // tau^2 + i(g1+g2) tau - (r^2 + i(g2-g1) z + g1 g2) = 0
  const cplx b = kI * (p.g1 + p.g2);
  const cplx c = -(rho * rho + z * z + kI * (p.g2 - p.g1) * z + p.g1 * p.g2);
  const cplx disc = std::sqrt(b * b - 4.0 * c);
  return {(-b + disc) / 2.0, (-b - disc) / 2.0};
}

/// max Im(tau_pole). Negative means the complex solution is analytic in the
/// upper half tau plane, i.e. it contains only exp(+i omega t) components.
inline double negative_frequency_margin(const EdeptParams& p, double rho, double z) {
  const auto poles = time_poles(p, rho, z);
  return std::max(poles[0].imag(), poles[1].imag());
}

}  // namespace edept::field
