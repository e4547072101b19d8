#pragma once

#include <cmath>
#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "edept/constants.hpp"
#include "edept/errors.hpp"
#include "edept/field/params.hpp"
#include "edept/spectrum/amplitude.hpp"
#include "edept/spectrum/grids.hpp"
#include "edept/spectrum/polarization.hpp"

namespace edept::spectrum {

struct Transversality {
  double max_residual = 0.0;  // max |k^.a| / |a| over nodes above the floor
  std::size_t node_i = 0;
  std::size_t node_j = 0;
};

/// Longitudinal content of a spectrum. Nodes with |a| at or below
/// floor * max|a| are skipped: their direction is roundoff.
inline Transversality transversality(const SpectralAmplitude& s, const ModeGrid& modes, double floor = 1e-8) {
  double peak = 0.0;
  for (std::size_t p = 0; p < s.n_rho(); ++p)
    for (std::size_t q = 0; q < s.n_z(); ++q) peak = std::max(peak, s.vector(p, q).norm());
  Transversality t;
  if (peak == 0.0) return t;
  for (std::size_t p = 0; p < s.n_rho(); ++p)
    for (std::size_t q = 0; q < s.n_z(); ++q) {
      const Eigen::Vector3cd a = s.vector(p, q);
      const double an = a.norm();
      if (an <= floor * peak) continue;
      const double k = modes.k_norm(p, q);
      const cplx longitudinal = (modes.k_rho()[p] * a(0) + modes.k_z()[q] * a(2)) / k;
      const double r = std::abs(longitudinal) / an;
      if (r > t.max_residual) t = {r, p, q};
    }
  return t;
}

struct NormEnergy {
  double norm = 0.0;
  double spectral_energy = 0.0;
};

/// Photon amplitudes f_lambda = sqrt(eps0 omega / hbar) eps_lambda^* . a at
/// the representative azimuth k_phi = 0.
struct HelicityAmplitudes {
  Eigen::MatrixXcd f_plus, f_minus;
  double norm = 0.0;
  double spectral_energy = 0.0;
  /// Sum over nodes of w |f_lambda|^2 for each helicity separately.
  double norm_plus = 0.0;
  double norm_minus = 0.0;
  /// Estimate of the norm carried by |k| < k_min.
  double infrared_bound = 0.0;
  Eigen::Vector3d seam_axis = Eigen::Vector3d::UnitZ();
  PhysicalConstants units{};
};

/// norm = sum_lambda int d^3k/(2 pi)^3 |f_lambda|^2 and
/// spectral_energy = 2 eps0 int d^3k/(2 pi)^3 omega^2 |a|^2
///                 = 2 hbar int d^3k/(2 pi)^3 omega sum_lambda |f_lambda|^2.
inline NormEnergy norm_and_energy(const HelicityAmplitudes& h, const ModeGrid& modes) {
  NormEnergy r;
  for (std::size_t p = 0; p < modes.n_rho(); ++p)
    for (std::size_t q = 0; q < modes.n_z(); ++q) {
      const auto i = static_cast<Eigen::Index>(p), j = static_cast<Eigen::Index>(q);
      const double f2 = std::norm(h.f_plus(i, j)) + std::norm(h.f_minus(i, j));
      const double w = modes.weight(p, q);
      r.norm += w * f2;
      r.spectral_energy += 2.0 * h.units.hbar() * w * modes.omega(p, q) * f2;
    }
  return r;
}

inline HelicityAmplitudes helicity_amplitudes(const SpectralAmplitude& s, const ModeGrid& modes,
                                              const PhysicalConstants& units = kNaturalUnits,
                                              double tolerance = 1e-6, double floor = 1e-8,
                                              const Eigen::Vector3d& seam_axis = Eigen::Vector3d::UnitZ()) {
  if (s.n_rho() != modes.n_rho() || s.n_z() != modes.n_z())
    throw InvalidArgument("spectrum does not match the mode grid");
  const Transversality t = transversality(s, modes, floor);
  if (t.max_residual > tolerance)
    throw TransversalityError("spectral amplitude has a longitudinal part above tolerance", t.node_i, t.node_j,
                              t.max_residual);
  HelicityAmplitudes h;
  h.units = units;
  h.seam_axis = seam_axis;
  const auto nr = static_cast<Eigen::Index>(modes.n_rho()), nz = static_cast<Eigen::Index>(modes.n_z());
  h.f_plus.resize(nr, nz);
  h.f_minus.resize(nr, nz);
  for (std::size_t p = 0; p < modes.n_rho(); ++p)
    for (std::size_t q = 0; q < modes.n_z(); ++q) {
      const Eigen::Vector3d k(modes.k_rho()[p], 0.0, modes.k_z()[q]);
      const PolarizationBasis b = polarization_basis(k, seam_axis);
      const Eigen::Vector3cd a = s.vector(p, q);
      const double scale = std::sqrt(units.epsilon0() * modes.omega(p, q) / units.hbar());
      const auto i = static_cast<Eigen::Index>(p), j = static_cast<Eigen::Index>(q);
      // Eigen's dot conjugates its left operand: eps^* . a.
      h.f_plus(i, j) = scale * b.plus.dot(a);
      h.f_minus(i, j) = scale * b.minus.dot(a);
      const double w = modes.weight(p, q);
      h.norm_plus += w * std::norm(h.f_plus(i, j));
      h.norm_minus += w * std::norm(h.f_minus(i, j));
    }
  const NormEnergy ne = norm_and_energy(h, modes);
  h.norm = ne.norm;
  h.spectral_energy = ne.spectral_energy;

  // Density of the norm per d^3k/(2 pi)^3 near the cut, times the excluded volume.
  double density = 0.0;
  for (std::size_t p = 0; p < modes.n_rho(); ++p)
    for (std::size_t q = 0; q < modes.n_z(); ++q)
      if (modes.k_norm(p, q) <= 2.0 * modes.k_min() + 1e-12 * modes.k_min()) {
        const auto i = static_cast<Eigen::Index>(p), j = static_cast<Eigen::Index>(q);
        density = std::max(density, std::norm(h.f_plus(i, j)) + std::norm(h.f_minus(i, j)));
      }
  const double kmin = modes.k_min();
  h.infrared_bound = density * kmin * kmin * kmin / (6.0 * kPi * kPi);
  return h;
}

/// Reconstructs the transverse amplitude at node (p, q) from f_lambda.
inline Eigen::Vector3cd amplitude_from_helicity(const HelicityAmplitudes& h, const ModeGrid& modes, std::size_t p,
                                                std::size_t q) {
  const Eigen::Vector3d k(modes.k_rho()[p], 0.0, modes.k_z()[q]);
  const PolarizationBasis b = polarization_basis(k, h.seam_axis);
  const double scale = std::sqrt(h.units.hbar() / (h.units.epsilon0() * modes.omega(p, q)));
  const auto i = static_cast<Eigen::Index>(p), j = static_cast<Eigen::Index>(q);
  return scale * (h.f_plus(i, j) * b.plus + h.f_minus(i, j) * b.minus);
}

struct NormConvergence {
  double coarse = 0.0;
  double fine = 0.0;
  double relative_change = 0.0;
};

/// Photon norm on `modes` and on modes.doubled(). Throws DivergenceError
/// when the change exceeds `tolerance`.
inline NormConvergence converged_norm(const field::EdeptParams& p, double t0, const ModeGrid& modes,
                                      const TransformGrid& grid, double tolerance = 5e-3,
                                      const PhysicalConstants& units = kNaturalUnits,
                                      const ExtractionOptions& opt = {}) {
  auto norm_on = [&](const ModeGrid& m) {
    const SpectrumPlan plan(grid, m);
    return helicity_amplitudes(positive_frequency_spectrum(p, t0, plan, FieldKind::Potential, units, opt), m, units)
        .norm;
  };
  NormConvergence c;
  c.coarse = norm_on(modes);
  c.fine = norm_on(modes.doubled());
  if (!(c.fine > 0.0) || !std::isfinite(c.fine)) throw DivergenceError("photon norm is not finite and positive");
  c.relative_change = std::abs(c.fine - c.coarse) / c.fine;
  if (c.relative_change > tolerance)
    throw DivergenceError("photon norm changes by " + std::to_string(c.relative_change) +
                          " under mode-grid doubling");
  return c;
}

}  // namespace edept::spectrum
