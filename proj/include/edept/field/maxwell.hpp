#pragma once

// Pointwise residuals of the source-free Maxwell system for the closed-form
// solution:
//   (a) wave equation  d2A/dtau2 - (lap A_theta - A_theta/rho^2)   (cylindrical)
//   (b) Gauss          div E
//   (c) Faraday        curl E + dB/dt
//   (d) Ampere         c^2 curl B - dE/dt
// Each residual is divided by the sum of magnitudes of the terms that enter
// it, so 1e-16-level values mean cancellation to roundoff. (b)-(d) are
// evaluated on the Cartesian components A_x = -y h, A_y = x h, which is an
// independent route from the cylindrical formulas used by em_fields.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <initializer_list>

#include "edept/constants.hpp"
#include "edept/dual.hpp"
#include "edept/errors.hpp"
#include "edept/field/params.hpp"
#include "edept/field/potential.hpp"
#include "edept/numerics/differentiation.hpp"

namespace edept::field {

using numerics::DifferentiationScheme;
using numerics::DiffKind;

struct ResidualSet {
  double wave = 0.0;
  double gauss = 0.0;
  double faraday = 0.0;
  double ampere = 0.0;

  double max() const { return std::max({wave, gauss, faraday, ampere}); }
};

struct MaxwellResiduals {
  ResidualSet complex;
  ResidualSet real;
  ResidualSet imag;

  double max() const { return std::max({complex.max(), real.max(), imag.max()}); }
};

namespace detail {

/// Value, gradient and Hessian of a complex map of four real variables.
struct Jet {
  cplx v{};
  std::array<cplx, 4> g{};
  std::array<std::array<cplx, 4>, 4> H{};
};

using D4 = Dual<cplx, 4>;
using DD4 = Dual<D4, 4>;

inline DD4 seed(double x, std::size_t i) {
  DD4 r(D4::variable(cplx(x), i));
  r.d[i] = D4(1.0);
  return r;
}

inline Jet jet_of(const DD4& f) {
  Jet j;
  j.v = f.v.v;
  for (std::size_t a = 0; a < 4; ++a) {
    j.g[a] = f.v.d[a];
    for (std::size_t b = 0; b < 4; ++b) j.H[a][b] = f.d[a].d[b];
  }
  return j;
}

template <class F>
Jet jet_central(F&& f, const std::array<double, 4>& x, double h) {
  Jet j;
  auto at = [&](int a, double da, int b, double db) {
    std::array<double, 4> y = x;
    if (a >= 0) y[a] += da;
    if (b >= 0) y[b] += db;
    return f(y);
  };
  j.v = f(x);
  for (int a = 0; a < 4; ++a) {
    const cplx fp = at(a, h, -1, 0), fm = at(a, -h, -1, 0);
    j.g[a] = (fp - fm) / (2.0 * h);
    j.H[a][a] = (fp - 2.0 * j.v + fm) / (h * h);
    for (int b = a + 1; b < 4; ++b) {
      j.H[a][b] = (at(a, h, b, h) - at(a, h, b, -h) - at(a, -h, b, h) + at(a, -h, b, -h)) / (4.0 * h * h);
      j.H[b][a] = j.H[a][b];
    }
  }
  return j;
}

// Cartesian variables (tau, x, y, z): jets of A_x and A_y.
inline std::array<Jet, 2> cartesian_jets(const EdeptParams& p, const PhysicalConstants& u,
                                         const std::array<double, 4>& x, const DifferentiationScheme& scheme) {
  if (scheme.kind == DiffKind::DualNumber) {
    const DD4 tau = seed(x[0], 0), X = seed(x[1], 1), Y = seed(x[2], 2), Z = seed(x[3], 3);
    const DD4 h = potential_profile(p, u, tau, X * X + Y * Y, Z);
    return {jet_of(-(Y * h)), jet_of(X * h)};
  }
  if (scheme.kind == DiffKind::CentralDifference) {
    numerics::detail::check_step(std::max({std::abs(x[0]), std::abs(x[1]), std::abs(x[2]), std::abs(x[3])}),
                                 scheme.step);
    auto h = [&](const std::array<double, 4>& y) {
      return potential_profile<cplx>(p, u, cplx(y[0]), cplx(y[1] * y[1] + y[2] * y[2]), cplx(y[3]));
    };
    return {jet_central([&](const auto& y) { return -y[2] * h(y); }, x, scheme.step),
            jet_central([&](const auto& y) { return y[1] * h(y); }, x, scheme.step)};
  }
  throw SchemeError("complex-step differentiation does not apply to the complex-valued potential");
}

// Cylindrical variables (tau, rho, z, unused): jet of A_theta.
inline Jet cylindrical_jet(const EdeptParams& p, const PhysicalConstants& u, double tau, double rho, double z,
                           const DifferentiationScheme& scheme) {
  if (scheme.kind == DiffKind::DualNumber) {
    const DD4 T = seed(tau, 0), R = seed(rho, 1), Z = seed(z, 2);
    return jet_of(azimuthal_potential(p, u, T, R, Z));
  }
  auto A = [&](const std::array<double, 4>& y) {
    return azimuthal_potential<cplx>(p, u, cplx(y[0]), cplx(y[1]), cplx(y[2]));
  };
  return jet_central(A, {tau, rho, z, 0.0}, scheme.step);
}

// Residual vector components and per-component term scales.
struct Residual {
  std::array<cplx, 3> value{};
  double scale = 0.0;
};

inline double relative(const Residual& r, int part) {
  if (r.scale == 0.0) return 0.0;
  double s = 0.0;
  for (const auto& c : r.value) {
    const double x = part == 0 ? std::abs(c) : part == 1 ? c.real() : c.imag();
    s += x * x;
  }
  return std::sqrt(s) / r.scale;
}

inline double scale_of(std::initializer_list<cplx> terms) {
  double s = 0.0;
  for (const auto& t : terms) s += std::abs(t);
  return s;
}

}  // namespace detail

inline MaxwellResiduals maxwell_residuals(const EdeptParams& p, const SpacetimePoint& pt,
                                          const DifferentiationScheme& scheme = DifferentiationScheme::dual(),
                                          const PhysicalConstants& units = kNaturalUnits) {
  p.validate();
  using detail::Residual;
  const double c = units.c(), c2 = c * c;
  const double tau = pt.tau(c);
  const auto [Ax, Ay] = detail::cartesian_jets(p, units, {tau, pt.x(), pt.y(), pt.z}, scheme);
  // Index map: 0 = tau, 1 = x, 2 = y, 3 = z. d/dt = c d/dtau.
  const auto& Hx = Ax.H;
  const auto& Hy = Ay.H;

  // (a) wave equation, cylindrical form where rho > 0.
  Residual wave;
  if (pt.rho > 0.0) {
    const detail::Jet J = detail::cylindrical_jet(p, units, tau, pt.rho, pt.z, scheme);
    const double r = pt.rho;
    const cplx lap = J.H[1][1] + J.g[1] / r + J.H[2][2] - J.v / (r * r);
    wave.value = {J.H[0][0] - lap, 0.0, 0.0};
    wave.scale = detail::scale_of({J.H[0][0], J.H[1][1], J.g[1] / r, J.H[2][2], J.v / (r * r)});
  } else {
    wave.value = {Hx[0][0] - (Hx[1][1] + Hx[2][2] + Hx[3][3]), Hy[0][0] - (Hy[1][1] + Hy[2][2] + Hy[3][3]), 0.0};
    wave.scale = detail::scale_of({Hx[0][0], Hx[1][1], Hx[2][2], Hx[3][3], Hy[0][0], Hy[1][1], Hy[2][2], Hy[3][3]});
  }

  // (b) Gauss: E = -c dA/dtau.
  Residual gauss;
  gauss.value = {-c * (Hx[0][1] + Hy[0][2]), 0.0, 0.0};
  gauss.scale = c * detail::scale_of({Hx[0][1], Hy[0][2]});

  // (c) Faraday. B_x = -dz A_y, B_y = dz A_x, B_z = dx A_y - dy A_x.
  Residual faraday;
  {
    // curl E with E = -c dtau A, E_z = 0.
    const std::array<cplx, 3> curlE = {c * Hy[3][0], -c * Hx[3][0], -c * (Hy[1][0] - Hx[2][0])};
    const std::array<cplx, 3> dBdt = {-c * Hy[0][3], c * Hx[0][3], c * (Hy[0][1] - Hx[0][2])};
    for (int i = 0; i < 3; ++i) faraday.value[i] = curlE[i] + dBdt[i];
    faraday.scale = c * detail::scale_of({Hy[3][0], Hx[3][0], Hy[1][0], Hx[2][0], Hy[0][3], Hx[0][3], Hy[0][1], Hx[0][2]});
  }

  // (d) Ampere: c^2 curl B - dE/dt, dE/dt = -c^2 d2A/dtau2.
  Residual ampere;
  {
    const std::array<cplx, 3> curlB = {Hy[2][1] - Hx[2][2] - Hx[3][3], -Hy[3][3] - Hy[1][1] + Hx[1][2],
                                       Hx[3][1] + Hy[3][2]};
    const std::array<cplx, 3> dEdt = {-c2 * Hx[0][0], -c2 * Hy[0][0], 0.0};
    for (int i = 0; i < 3; ++i) ampere.value[i] = c2 * curlB[i] - dEdt[i];
    ampere.scale = c2 * detail::scale_of({Hy[2][1], Hx[2][2], Hx[3][3], Hy[3][3], Hy[1][1], Hx[1][2], Hx[3][1], Hy[3][2],
                                          Hx[0][0], Hy[0][0]});
  }

  // Branch residuals are normalized by the complex term scale: a branch whose
  // field vanishes at the point would otherwise divide roundoff by roundoff.
  MaxwellResiduals out;
  auto fill = [&](ResidualSet& set, int part) {
    set.wave = detail::relative(wave, part);
    set.gauss = detail::relative(gauss, part);
    set.faraday = detail::relative(faraday, part);
    set.ampere = detail::relative(ampere, part);
  };
  fill(out.complex, 0);
  fill(out.real, 1);
  fill(out.imag, 2);
  return out;
}

}  // namespace edept::field
