#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "edept/constants.hpp"
#include "edept/field/fields.hpp"
#include "edept/field/params.hpp"
#include "edept/spectrum/amplitude.hpp"
#include "edept/spectrum/helicity.hpp"

namespace edept::spectrum {

struct SpectrumTolerances {
  double transversality = 1e-6;
  double relation = 1e-4;
  double round_trip = 1e-3;
  /// E+ from the spectrum against the closed-form positive-frequency part.
  double positive_frequency = 1e-3;
  double floor = 1e-8;
};

struct SpectrumReport {
  double transversality_A = 0.0;
  /// sqrt(sum w |k^.B~|^2 / sum w |B~|^2): Gauss's law for B, energy-weighted.
  double longitudinal_B = 0.0;
  double electric_relation = 0.0;  // E~ vs i omega A~, energy-weighted
  double magnetic_relation = 0.0;  // c B~ vs i omega k^ x A~, energy-weighted
  double round_trip_t0 = 0.0;
  double round_trip_t1 = 0.0;
  double t1 = 0.0;
  /// max |E+_spectrum - E+_closed| / max |E+_closed| at t0.
  double positive_frequency_error = 0.0;
  /// sum eps0 |E+_spectrum|^2 / sum eps0 |E_complex|^2 over the cloud.
  double complex_rate_ratio = 0.0;
  double norm_plus_fraction = 0.0;

  bool pass(const SpectrumTolerances& tol) const {
    return transversality_A < tol.transversality && longitudinal_B < tol.relation &&
           electric_relation < tol.relation && magnetic_relation < tol.relation && round_trip_t0 < tol.round_trip &&
           round_trip_t1 < tol.round_trip && positive_frequency_error < tol.positive_frequency;
  }
};

/// Random points with rho in [0, w], z in [-w, w].
inline std::vector<CylPoint> test_cloud(std::size_t n, double half_width, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<CylPoint> pts(n);
  for (auto& x : pts) {
    x.rho = half_width * u(gen);
    x.z = half_width * (2.0 * u(gen) - 1.0);
  }
  return pts;
}

/// max |reconstructed - direct| / max |direct| of the branch-projected A_theta at time t.
inline double round_trip_error(const SpectralAmplitude& a, const ModeGrid& modes, const field::EdeptParams& p,
                               double t, const std::vector<CylPoint>& cloud,
                               const PhysicalConstants& units = kNaturalUnits, unsigned threads = 0) {
  const auto rec = evolve_reconstruct(a, modes, t, cloud, threads);
  double err = 0.0, peak = 0.0;
  for (std::size_t n = 0; n < cloud.size(); ++n) {
    const auto pt = field::SpacetimePoint::cylindrical(t, cloud[n].rho, 0.0, cloud[n].z);
    const double direct = field::project(p.branch, field::vector_potential(p, pt, units));
    err = std::max(err, std::abs(rec[n].theta - direct));
    peak = std::max(peak, std::abs(direct));
  }
  return peak > 0.0 ? err / peak : err;
}

namespace detail {

/// sqrt(sum w |x - y|^2) / sqrt(sum w |x|^2) over every node and component.
inline double weighted_relative(const std::array<Eigen::MatrixXcd, 3>& x, const std::array<Eigen::MatrixXcd, 3>& y,
                                const ModeGrid& modes) {
  double num = 0.0, den = 0.0;
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t p = 0; p < modes.n_rho(); ++p)
      for (std::size_t q = 0; q < modes.n_z(); ++q) {
        const auto i = static_cast<Eigen::Index>(p), j = static_cast<Eigen::Index>(q);
        const double w = modes.weight(p, q);
        num += w * std::norm(x[c](i, j) - y[c](i, j));
        den += w * std::norm(x[c](i, j));
      }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

inline double weighted_longitudinal(const SpectralAmplitude& s, const ModeGrid& modes) {
  double num = 0.0, den = 0.0;
  for (std::size_t p = 0; p < modes.n_rho(); ++p)
    for (std::size_t q = 0; q < modes.n_z(); ++q) {
      const Eigen::Vector3cd v = s.vector(p, q);
      const double w = modes.weight(p, q);
      num += w * std::norm((modes.k_rho()[p] * v(0) + modes.k_z()[q] * v(2)) / modes.k_norm(p, q));
      den += w * v.squaredNorm();
    }
  return den > 0.0 ? std::sqrt(num / den) : 0.0;
}

}  // namespace detail

struct ValidationOptions {
  double t1 = 2.0;  // absolute time of the evolved round trip
  std::size_t cloud_points = 1000;
  double cloud_half_width = 4.0;
  unsigned seed = 12345;
  SpectrumTolerances tolerances{};
  ExtractionOptions extraction{};
};

/// Spectral consistency checks for the potential spectrum `a` (with its
/// helicity amplitudes `h`) of the solution `p`, extracted with `plan`.
inline SpectrumReport validate_spectrum(const SpectralAmplitude& a, const HelicityAmplitudes& h,
                                        const SpectrumPlan& plan, const field::EdeptParams& p,
                                        const ValidationOptions& opt = {},
                                        const PhysicalConstants& units = kNaturalUnits) {
  const ModeGrid& modes = plan.modes();
  SpectrumReport r;
  r.t1 = opt.t1;
  const double floor = opt.tolerances.floor;
  r.transversality_A = transversality(a, modes, floor).max_residual;

  const SpectralAmplitude e = positive_frequency_spectrum(p, a.t0, plan, FieldKind::Electric, units, opt.extraction);
  const SpectralAmplitude b = positive_frequency_spectrum(p, a.t0, plan, FieldKind::Magnetic, units, opt.extraction);
  // Per-node ratios of B~ are dominated by transform noise where |B~| is
  // tiny, so its longitudinal part is measured in aggregate.
  r.longitudinal_B = detail::weighted_longitudinal(b, modes);

  const SpectralAmplitude iwa = electric_from_potential(a, modes);
  r.electric_relation = detail::weighted_relative({e.c_rho, e.c_phi, e.c_z}, {iwa.c_rho, iwa.c_phi, iwa.c_z}, modes);

  // i omega k^ x (a phi^_k) = i omega a (-k_z rho^_k + k_rho z^) / |k|
  std::array<Eigen::MatrixXcd, 3> cb = {units.c() * b.c_rho, units.c() * b.c_phi, units.c() * b.c_z};
  std::array<Eigen::MatrixXcd, 3> pred;
  for (auto& m : pred) m.setZero(a.c_phi.rows(), a.c_phi.cols());
  for (std::size_t pp = 0; pp < modes.n_rho(); ++pp)
    for (std::size_t qq = 0; qq < modes.n_z(); ++qq) {
      const auto i = static_cast<Eigen::Index>(pp), j = static_cast<Eigen::Index>(qq);
      const Eigen::Vector3d khat = Eigen::Vector3d(modes.k_rho()[pp], 0.0, modes.k_z()[qq]) / modes.k_norm(pp, qq);
      // Eigen's cross() conjugates complex results; spell it out.
      const Eigen::Vector3cd v = a.vector(pp, qq);
      const Eigen::Vector3cd cross(khat(1) * v(2) - khat(2) * v(1), khat(2) * v(0) - khat(0) * v(2),
                                   khat(0) * v(1) - khat(1) * v(0));
      const cplx iw(0.0, modes.omega(pp, qq));
      for (std::size_t c = 0; c < 3; ++c) pred[c](i, j) = iw * cross(static_cast<Eigen::Index>(c));
    }
  r.magnetic_relation = detail::weighted_relative(cb, pred, modes);

  const auto cloud = test_cloud(opt.cloud_points, opt.cloud_half_width * p.length_scale(), opt.seed);
  r.round_trip_t0 = round_trip_error(a, modes, p, a.t0, cloud, units, opt.extraction.threads);
  r.round_trip_t1 = round_trip_error(a, modes, p, opt.t1, cloud, units, opt.extraction.threads);

  const auto eplus = positive_frequency_reconstruct(iwa, modes, a.t0, cloud, opt.extraction.threads);
  double err = 0.0, peak = 0.0, rate_spec = 0.0, rate_complex = 0.0;
  for (std::size_t n = 0; n < cloud.size(); ++n) {
    const auto pt = field::SpacetimePoint::cylindrical(a.t0, cloud[n].rho, 0.0, cloud[n].z);
    const cplx ec = field::cylindrical_fields(p, pt, field::DifferentiationScheme::dual(), units).E_theta;
    const cplx closed = p.branch == field::Branch::ImagPart ? cplx(0.0, 0.5) * std::conj(ec) : 0.5 * std::conj(ec);
    err = std::max(err, std::abs(eplus[n].theta - closed));
    peak = std::max(peak, std::abs(closed));
    rate_spec += std::norm(eplus[n].theta);
    rate_complex += std::norm(ec);
  }
  r.positive_frequency_error = peak > 0.0 ? err / peak : err;
  r.complex_rate_ratio = rate_complex > 0.0 ? rate_spec / rate_complex : 0.0;
  r.norm_plus_fraction = h.norm > 0.0 ? h.norm_plus / h.norm : 0.0;
  return r;
}

}  // namespace edept::spectrum
