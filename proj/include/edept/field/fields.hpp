#pragma once

#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "edept/constants.hpp"
#include "edept/dual.hpp"
#include "edept/errors.hpp"
#include "edept/field/params.hpp"
#include "edept/field/potential.hpp"
#include "edept/numerics/differentiation.hpp"

namespace edept::field {

using numerics::DifferentiationScheme;
using numerics::DiffKind;

/// Nonzero cylindrical components of the complex fields at a point.
struct CylindricalFields {
  cplx A_theta;
  cplx E_theta;
  cplx B_rho;
  cplx B_z;
};

/// Fields at a point: complex Cartesian vectors of the analytic solution,
/// plus their branch projections.
struct FieldSample {
  Eigen::Vector3cd A, E, B;
  Eigen::Vector3d realA, realE, realB;
  CylindricalFields cyl;
};

struct EnergyDensitySample {
  double u_total = 0.0;
  double u_electric = 0.0;
  double u_magnetic = 0.0;
  /// eps0 |E+|^2; proportional to the count rate of an ideal point detector
  /// (the detector sensitivity is an undetermined positive factor).
  double detection_rate = 0.0;
};

inline double project(Branch b, cplx v) { return b == Branch::ImagPart ? v.imag() : v.real(); }

inline Eigen::Vector3d project(Branch b, const Eigen::Vector3cd& v) {
  return b == Branch::ImagPart ? Eigen::Vector3d(v.imag()) : Eigen::Vector3d(v.real());
}

inline Eigen::Vector3d unit_rho(double theta) { return {std::cos(theta), std::sin(theta), 0.0}; }
inline Eigen::Vector3d unit_theta(double theta) { return {-std::sin(theta), std::cos(theta), 0.0}; }
inline Eigen::Vector3d unit_z() { return {0.0, 0.0, 1.0}; }

namespace detail {

inline CylindricalFields fields_dual(const EdeptParams& p, const PhysicalConstants& u, double tau, double rho,
                                     double z) {
  using D3 = Dual<cplx, 3>;
  const double s = rho * rho;
  const D3 h = potential_profile(p, u, D3::variable(cplx(tau), 0), D3::variable(cplx(s), 1),
                                 D3::variable(cplx(z), 2));
  CylindricalFields f;
  f.A_theta = rho * h.v;
  f.E_theta = -u.c() * rho * h.d[0];
  f.B_rho = -rho * h.d[2];
  // (1/rho) d(rho A)/drho = (1/rho) d(rho^2 h)/drho = 2h + 2 rho^2 dh/ds;
  // on the axis this is the analytic limit 2 dA/drho.
  f.B_z = 2.0 * h.v + 2.0 * s * h.d[1];
  return f;
}

inline CylindricalFields fields_central(const EdeptParams& p, const PhysicalConstants& u, double tau, double rho,
                                        double z, double step) {
  auto A = [&](double t_, double r_, double z_) {
    return azimuthal_potential<cplx>(p, u, cplx(t_), cplx(r_), cplx(z_));
  };
  const DifferentiationScheme sch = DifferentiationScheme::central(step);
  CylindricalFields f;
  f.A_theta = A(tau, rho, z);
  const cplx dA_dtau = numerics::derivative<cplx>([&](cplx t_) { return A(t_.real(), rho, z); }, tau, sch);
  const cplx dA_dz = numerics::derivative<cplx>([&](cplx z_) { return A(tau, rho, z_.real()); }, z, sch);
  // A_theta is odd in rho, so central differences straddling the axis are valid.
  const cplx dA_drho = numerics::derivative<cplx>([&](cplx r_) { return A(tau, r_.real(), z); }, rho, sch);
  f.E_theta = -u.c() * dA_dtau;
  f.B_rho = -dA_dz;
  f.B_z = rho > 0.0 ? dA_drho + f.A_theta / rho : 2.0 * dA_drho;
  return f;
}

}  // namespace detail

/// Nonzero cylindrical field components. E = -dA/dt, B = curl A.
inline CylindricalFields cylindrical_fields(const EdeptParams& p, const SpacetimePoint& pt,
                                            const DifferentiationScheme& scheme,
                                            const PhysicalConstants& units = kNaturalUnits) {
  p.validate();
  const double tau = pt.tau(units.c());
  switch (scheme.kind) {
    case DiffKind::DualNumber: return detail::fields_dual(p, units, tau, pt.rho, pt.z);
    case DiffKind::CentralDifference: return detail::fields_central(p, units, tau, pt.rho, pt.z, scheme.step);
    case DiffKind::ComplexStep:
      throw SchemeError("complex-step differentiation does not apply to the complex-valued potential");
  }
  throw SchemeError("unknown differentiation scheme");
}

inline FieldSample em_fields(const EdeptParams& p, const SpacetimePoint& pt,
                             const DifferentiationScheme& scheme = DifferentiationScheme::dual(),
                             const PhysicalConstants& units = kNaturalUnits) {
  const CylindricalFields c = cylindrical_fields(p, pt, scheme, units);
  const Eigen::Vector3d eth = unit_theta(pt.theta);
  const Eigen::Vector3d erho = unit_rho(pt.theta);
  FieldSample s;
  s.cyl = c;
  s.A = c.A_theta * eth.cast<cplx>();
  s.E = c.E_theta * eth.cast<cplx>();
  s.B = c.B_rho * erho.cast<cplx>() + c.B_z * unit_z().cast<cplx>();
  s.realA = project(p.branch, s.A);
  s.realE = project(p.branch, s.E);
  s.realB = project(p.branch, s.B);
  return s;
}

/// Complex fields and their time derivatives at one point: the Cauchy data
/// from which the spectrum module builds positive-frequency amplitudes.
struct CauchyFields {
  CylindricalFields value;
  CylindricalFields rate;
};

inline CauchyFields cauchy_fields(const EdeptParams& p, const SpacetimePoint& pt,
                                  const PhysicalConstants& units = kNaturalUnits) {
  p.validate();
  // Inner level differentiates in (tau, s, z); the outer level in tau again.
  using D3 = Dual<cplx, 3>;
  using DD = Dual<D3, 1>;
  const double c = units.c(), s = pt.rho * pt.rho, rho = pt.rho;
  DD tau(D3::variable(cplx(pt.tau(c)), 0));
  tau.d[0] = D3(1.0);
  const DD h = potential_profile(p, units, tau, DD(D3::variable(cplx(s), 1)), DD(D3::variable(cplx(pt.z), 2)));
  const D3& v = h.v;
  const D3& dt = h.d[0];  // d/dtau of every inner quantity
  CauchyFields f;
  f.value.A_theta = rho * v.v;
  f.value.E_theta = -c * rho * v.d[0];
  f.value.B_rho = -rho * v.d[2];
  f.value.B_z = 2.0 * v.v + 2.0 * s * v.d[1];
  f.rate.A_theta = c * rho * dt.v;
  f.rate.E_theta = -c * c * rho * dt.d[0];
  f.rate.B_rho = -c * rho * dt.d[2];
  f.rate.B_z = c * (2.0 * dt.v + 2.0 * s * dt.d[1]);
  return f;
}

/// Positive-frequency part E+ of the branch-projected real electric field.
///
/// Both tau-poles of the closed form lie in the lower half plane (see
/// negative_frequency_margin), so the complex solution F carries only
/// exp(+i omega t) modes. Hence Re F has positive-frequency part conj(F)/2
/// and Im F has i conj(F)/2.
inline Eigen::Vector3cd positive_frequency_part(Branch b, const Eigen::Vector3cd& complex_field) {
  const Eigen::Vector3cd half_conj = 0.5 * complex_field.conjugate();
  return b == Branch::ImagPart ? Eigen::Vector3cd(kI * half_conj) : half_conj;
}

inline Eigen::Vector3cd positive_frequency_field(const EdeptParams& p, const SpacetimePoint& pt,
                                                 const DifferentiationScheme& scheme = DifferentiationScheme::dual(),
                                                 const PhysicalConstants& units = kNaturalUnits) {
  return positive_frequency_part(p.branch, em_fields(p, pt, scheme, units).E);
}

inline EnergyDensitySample energy_density(const FieldSample& s, Branch branch,
                                          const PhysicalConstants& units = kNaturalUnits) {
  const double eps0 = units.epsilon0(), c2 = units.c() * units.c();
  EnergyDensitySample u;
  if (branch == Branch::Analytic) {
    u.u_electric = 0.25 * eps0 * s.E.squaredNorm();
    u.u_magnetic = 0.25 * eps0 * c2 * s.B.squaredNorm();
  } else {
    u.u_electric = 0.5 * eps0 * s.realE.squaredNorm();
    u.u_magnetic = 0.5 * eps0 * c2 * s.realB.squaredNorm();
  }
  u.u_total = u.u_electric + u.u_magnetic;
  u.detection_rate = eps0 * positive_frequency_part(branch, s.E).squaredNorm();
  return u;
}

inline EnergyDensitySample energy_density(const EdeptParams& p, const SpacetimePoint& pt,
                                          const DifferentiationScheme& scheme = DifferentiationScheme::dual(),
                                          const PhysicalConstants& units = kNaturalUnits) {
  return energy_density(em_fields(p, pt, scheme, units), p.branch, units);
}

}  // namespace edept::field
