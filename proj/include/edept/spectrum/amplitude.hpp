#pragma once

// Positive-frequency spectra of rotationally symmetric real fields.
//
// Conventions: F(k) = int d^3r F(r) exp(-i k.r), inverse with d^3k/(2 pi)^3.
// A real free field is written F(t, r) = 2 Re int d^3k/(2 pi)^3 a(k)
// exp(-i(omega (t - t0) - k.r)), and a(k) is recovered from Cauchy data as
//   a = (F^(t0) + (i/omega) dF/dt^(t0)) / 2.
//
// A field with cylindrical components (F_rho, F_theta, F_z)(rho, z) has
//   F^ = -2 pi i H1[F_rho] rho^_k - 2 pi i H1[F_theta] phi^_k + 2 pi H0[F_z] z^,
// where Hn[f](k_rho, k_z) = int int f Jn(k_rho rho) rho drho exp(-i k_z z) dz.
// Amplitudes are stored in the (rho^_k, phi^_k, z^) frame, which at the
// representative azimuth k_phi = 0 is just (x^, y^, z^).
//
// The potential is not sampled directly: it decays only as r^-3 and a hard
// box cut leaves slowly converging ringing near k_z = 0. In the transverse
// gauge A^ = i k x B^ / k^2 and dA/dt = -E, so
//   a_A = (i k x B^ / k^2 - (i/omega) E^) / 2
// uses only E and B, which decay one power faster.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "edept/constants.hpp"
#include "edept/errors.hpp"
#include "edept/field/fields.hpp"
#include "edept/field/params.hpp"
#include "edept/numerics/transforms.hpp"
#include "edept/parallel.hpp"
#include "edept/spectrum/grids.hpp"

namespace edept::spectrum {

using cplx = std::complex<double>;

enum class FieldKind { Potential, Electric, Magnetic };

inline std::string to_string(FieldKind k) {
  switch (k) {
    case FieldKind::Potential: return "A";
    case FieldKind::Electric: return "E";
    case FieldKind::Magnetic: return "B";
  }
  return "?";
}

/// Real cylindrical components of a rotationally symmetric vector field.
struct CylVector {
  double rho = 0.0;
  double theta = 0.0;
  double z = 0.0;
};

/// Field and time derivative at one (rho, z).
struct CauchySample {
  CylVector value;
  CylVector rate;
};

using CauchySource = std::function<CauchySample(double rho, double z)>;

/// E and B at one (rho, z) and a fixed time.
struct FieldSample {
  CylVector E;
  CylVector B;
};

using FieldSource = std::function<FieldSample(double rho, double z)>;

struct SpectralAmplitude {
  /// Components along rho^_k, phi^_k, z^ at node (p, q).
  Eigen::MatrixXcd c_rho, c_phi, c_z;
  FieldKind kind = FieldKind::Potential;
  field::Branch branch = field::Branch::RealPart;
  double t0 = 0.0;
  std::string source;
  /// The ball |k| < k_min (including omega = 0) is not represented.
  double k_min = 0.0;

  std::size_t n_rho() const { return static_cast<std::size_t>(c_phi.rows()); }
  std::size_t n_z() const { return static_cast<std::size_t>(c_phi.cols()); }

  /// Cartesian amplitude at node (p, q) for k_phi = 0.
  Eigen::Vector3cd vector(std::size_t p, std::size_t q) const {
    const auto i = static_cast<Eigen::Index>(p), j = static_cast<Eigen::Index>(q);
    return {c_rho(i, j), c_phi(i, j), c_z(i, j)};
  }
};

struct ExtractionOptions {
  unsigned threads = 0;
  numerics::TailCheck tail{};
};

/// Forward transforms for one (position grid, mode grid) pair.
class SpectrumPlan {
 public:
  SpectrumPlan(TransformGrid grid, ModeGrid modes)
      : grid_(std::move(grid)), modes_(std::move(modes)), plan_(grid_.rho, grid_.z, modes_.k_rho(), modes_.k_z()) {}

  const TransformGrid& grid() const { return grid_; }
  const ModeGrid& modes() const { return modes_; }

  SpectralAmplitude extract(const CauchySource& source, const ExtractionOptions& opt = {}) const {
    const auto [value, rate] = sample(
        [&](double rho, double z) {
          const CauchySample s = source(rho, z);
          return std::pair{s.value, s.rate};
        },
        opt.threads);
    const auto f0 = forward(value, opt);
    const auto f1 = forward(rate, opt);
    std::array<Eigen::MatrixXcd, 3> out;
    for (std::size_t c = 0; c < 3; ++c) {
      out[c] = 0.5 * f0[c];
      for (Eigen::Index p = 0; p < out[c].rows(); ++p)
        for (Eigen::Index q = 0; q < out[c].cols(); ++q)
          out[c](p, q) += cplx(0.0, 0.5 / omega(p, q)) * f1[c](p, q);
    }
    return assemble(std::move(out));
  }

  /// Transverse-gauge potential amplitude from E and B at one time.
  SpectralAmplitude potential_from_fields(const FieldSource& source, const ExtractionOptions& opt = {}) const {
    const auto [e, b] = sample(
        [&](double rho, double z) {
          const FieldSample s = source(rho, z);
          return std::pair{s.E, s.B};
        },
        opt.threads);
    const auto E = forward(e, opt);
    const auto B = forward(b, opt);
    std::array<Eigen::MatrixXcd, 3> out;
    for (auto& m : out) m.setZero(E[0].rows(), E[0].cols());
    for (Eigen::Index p = 0; p < out[0].rows(); ++p)
      for (Eigen::Index q = 0; q < out[0].cols(); ++q) {
        const double kr = modes_.k_rho()[static_cast<std::size_t>(p)];
        const double kz = modes_.k_z()[static_cast<std::size_t>(q)];
        const double k2 = kr * kr + kz * kz;
        // k x B^ in the (rho^_k, phi^_k, z^) frame.
        const std::array<cplx, 3> kxb = {-kz * B[1](p, q), kz * B[0](p, q) - kr * B[2](p, q), kr * B[1](p, q)};
        const cplx iw(0.0, 1.0 / omega(p, q));
        for (std::size_t c = 0; c < 3; ++c)
          out[c](p, q) = 0.5 * (cplx(0.0, 1.0 / k2) * kxb[c] - iw * E[c](p, q));
      }
    return assemble(std::move(out));
  }

 private:
  TransformGrid grid_;
  ModeGrid modes_;
  numerics::HankelFourierPlan plan_;

  using Pair = std::array<std::array<Eigen::MatrixXd, 3>, 2>;

  double omega(Eigen::Index p, Eigen::Index q) const {
    return modes_.omega(static_cast<std::size_t>(p), static_cast<std::size_t>(q));
  }

  template <class F>
  Pair sample(F&& f, unsigned threads) const {
    const auto nr = static_cast<Eigen::Index>(grid_.rho.size());
    const auto nz = static_cast<Eigen::Index>(grid_.z.size());
    Pair out;
    for (auto& set : out)
      for (auto& m : set) m.setZero(nr, nz);
    parallel_for(
        static_cast<std::size_t>(nr),
        [&](std::size_t i) {
          const auto r = static_cast<Eigen::Index>(i);
          for (Eigen::Index j = 0; j < nz; ++j) {
            const auto [u, v] = f(grid_.rho.nodes()[i], grid_.z.nodes()[static_cast<std::size_t>(j)]);
            const std::array<CylVector, 2> uv = {u, v};
            for (std::size_t s = 0; s < 2; ++s) {
              out[s][0](r, j) = uv[s].rho;
              out[s][1](r, j) = uv[s].theta;
              out[s][2](r, j) = uv[s].z;
            }
          }
        },
        threads);
    return out;
  }

  // F^ in the (rho^_k, phi^_k, z^) frame; identically zero inputs are skipped.
  std::array<Eigen::MatrixXcd, 3> forward(const std::array<Eigen::MatrixXd, 3>& f, const ExtractionOptions& opt) const {
    const cplx two_pi_i(0.0, 2.0 * kPi);
    const std::array<int, 3> order = {1, 1, 0};
    const std::array<cplx, 3> factor = {-two_pi_i, -two_pi_i, cplx(2.0 * kPi)};
    std::array<Eigen::MatrixXcd, 3> out;
    for (std::size_t c = 0; c < 3; ++c) {
      if (f[c].cwiseAbs().maxCoeff() > 0.0)
        out[c] = factor[c] * plan_.apply(order[c], f[c], opt.tail);
      else
        out[c].setZero(static_cast<Eigen::Index>(modes_.n_rho()), static_cast<Eigen::Index>(modes_.n_z()));
    }
    return out;
  }

  SpectralAmplitude assemble(std::array<Eigen::MatrixXcd, 3> c) const {
    SpectralAmplitude s;
    s.c_rho = std::move(c[0]);
    s.c_phi = std::move(c[1]);
    s.c_z = std::move(c[2]);
    s.k_min = modes_.k_min();
    return s;
  }
};

/// Branch-projected Cauchy data of the closed-form solution.
inline CauchySource edept_source(const field::EdeptParams& p, FieldKind kind, double t0,
                                 const PhysicalConstants& units = kNaturalUnits) {
  p.validate();
  if (p.branch == field::Branch::Analytic)
    throw InvalidArgument("spectra are defined for a real branch (real or imag), not the analytic field");
  return [p, kind, t0, units](double rho, double z) {
    const auto f = field::cauchy_fields(p, field::SpacetimePoint::cylindrical(t0, rho, 0.0, z), units);
    auto pr = [&](cplx v) { return field::project(p.branch, v); };
    CauchySample s;
    switch (kind) {
      case FieldKind::Potential:
        s.value.theta = pr(f.value.A_theta);
        s.rate.theta = pr(f.rate.A_theta);
        break;
      case FieldKind::Electric:
        s.value.theta = pr(f.value.E_theta);
        s.rate.theta = pr(f.rate.E_theta);
        break;
      case FieldKind::Magnetic:
        s.value.rho = pr(f.value.B_rho);
        s.value.z = pr(f.value.B_z);
        s.rate.rho = pr(f.rate.B_rho);
        s.rate.z = pr(f.rate.B_z);
        break;
    }
    return s;
  };
}

/// Branch-projected E and B of the closed-form solution at t0.
inline FieldSource edept_field_source(const field::EdeptParams& p, double t0,
                                      const PhysicalConstants& units = kNaturalUnits) {
  p.validate();
  if (p.branch == field::Branch::Analytic)
    throw InvalidArgument("spectra are defined for a real branch (real or imag), not the analytic field");
  return [p, t0, units](double rho, double z) {
    const auto f = field::cylindrical_fields(p, field::SpacetimePoint::cylindrical(t0, rho, 0.0, z),
                                             field::DifferentiationScheme::dual(), units);
    auto pr = [&](cplx v) { return field::project(p.branch, v); };
    FieldSample s;
    s.E.theta = pr(f.E_theta);
    s.B.rho = pr(f.B_rho);
    s.B.z = pr(f.B_z);
    return s;
  };
}

/// Potential spectra go through E and B; see the note at the top.
inline SpectralAmplitude positive_frequency_spectrum(const field::EdeptParams& p, double t0, const SpectrumPlan& plan,
                                                     FieldKind kind = FieldKind::Potential,
                                                     const PhysicalConstants& units = kNaturalUnits,
                                                     const ExtractionOptions& opt = {}) {
  if (plan.modes().c() != units.c()) throw InvalidArgument("mode grid and constants disagree on c");
  SpectralAmplitude s = kind == FieldKind::Potential ? plan.potential_from_fields(edept_field_source(p, t0, units), opt)
                                                     : plan.extract(edept_source(p, kind, t0, units), opt);
  s.kind = kind;
  s.branch = p.branch;
  s.t0 = t0;
  s.source = "edept alpha=" + std::to_string(p.alpha);
  return s;
}

/// Convenience overload on the default position grid.
inline SpectralAmplitude positive_frequency_spectrum(const field::EdeptParams& p, double t0, const ModeGrid& modes,
                                                     FieldKind kind = FieldKind::Potential,
                                                     const PhysicalConstants& units = kNaturalUnits) {
  return positive_frequency_spectrum(p, t0, SpectrumPlan(TransformGrid::defaults(p.length_scale()), modes), kind,
                                     units);
}

/// Electric amplitude implied by a potential amplitude: E~ = i omega A~.
inline SpectralAmplitude electric_from_potential(const SpectralAmplitude& a, const ModeGrid& modes) {
  if (a.kind != FieldKind::Potential) throw InvalidArgument("expected a potential spectrum");
  SpectralAmplitude e = a;
  e.kind = FieldKind::Electric;
  for (Eigen::Index p = 0; p < a.c_phi.rows(); ++p)
    for (Eigen::Index q = 0; q < a.c_phi.cols(); ++q) {
      const cplx iw(0.0, modes.omega(static_cast<std::size_t>(p), static_cast<std::size_t>(q)));
      e.c_rho(p, q) *= iw;
      e.c_phi(p, q) *= iw;
      e.c_z(p, q) *= iw;
    }
  return e;
}

struct CylPoint {
  double rho = 0.0;
  double z = 0.0;
};

struct ComplexCylVector {
  cplx rho, theta, z;
};

/// Positive-frequency part of the field at time t:
///   int d^3k/(2 pi)^3 a(k) exp(-i omega (t - t0) + i k.r),
/// in cylindrical components. The real field is twice its real part.
inline std::vector<ComplexCylVector> positive_frequency_reconstruct(const SpectralAmplitude& s, const ModeGrid& modes,
                                                                    double t, const std::vector<CylPoint>& points,
                                                                    unsigned threads = 0) {
  if (s.n_rho() != modes.n_rho() || s.n_z() != modes.n_z())
    throw InvalidArgument("spectrum does not match the mode grid");
  const auto nkr = static_cast<Eigen::Index>(modes.n_rho());
  const auto nkz = static_cast<Eigen::Index>(modes.n_z());
  const double dt = t - s.t0;
  // Quadrature weights and time evolution folded into the amplitudes.
  std::array<Eigen::MatrixXcd, 3> m = {s.c_rho, s.c_phi, s.c_z};
  std::array<bool, 3> used{};
  for (std::size_t c = 0; c < 3; ++c) used[c] = m[c].cwiseAbs().maxCoeff() > 0.0;
  for (Eigen::Index p = 0; p < nkr; ++p)
    for (Eigen::Index q = 0; q < nkz; ++q) {
      const auto pp = static_cast<std::size_t>(p), qq = static_cast<std::size_t>(q);
      const cplx w = modes.k_rho()[pp] * modes.weight_rho(pp) * modes.weight_z(qq) / (4.0 * kPi * kPi) *
                     std::polar(1.0, -modes.omega(pp, qq) * dt);
      for (auto& mc : m) mc(p, q) *= w;
    }
  const cplx i(0.0, 1.0);
  std::vector<ComplexCylVector> out(points.size());
  parallel_for(
      points.size(),
      [&](std::size_t n) {
        const CylPoint& x = points[n];
        Eigen::VectorXcd phase(nkz);
        for (Eigen::Index q = 0; q < nkz; ++q) phase(q) = std::polar(1.0, modes.k_z()[static_cast<std::size_t>(q)] * x.z);
        Eigen::VectorXd j0(nkr), j1(nkr);
        for (Eigen::Index p = 0; p < nkr; ++p) {
          const double a = modes.k_rho()[static_cast<std::size_t>(p)] * x.rho;
          j0(p) = std::cyl_bessel_j(0.0, a);
          j1(p) = std::cyl_bessel_j(1.0, a);
        }
        // Transverse components carry the i J1 kernel, the axial one J0.
        std::array<cplx, 3> v{};
        for (std::size_t c = 0; c < 3; ++c) {
          if (!used[c]) continue;
          const Eigen::VectorXcd partial = m[c] * phase;
          v[c] = c == 2 ? (j0.cast<cplx>().transpose() * partial)(0) : i * (j1.cast<cplx>().transpose() * partial)(0);
        }
        out[n] = {v[0], v[1], v[2]};
      },
      threads);
  return out;
}

/// The real field 2 Re(...) at time t.
inline std::vector<CylVector> evolve_reconstruct(const SpectralAmplitude& s, const ModeGrid& modes, double t,
                                                 const std::vector<CylPoint>& points, unsigned threads = 0) {
  const auto pf = positive_frequency_reconstruct(s, modes, t, points, threads);
  std::vector<CylVector> out(pf.size());
  for (std::size_t n = 0; n < pf.size(); ++n)
    out[n] = {2.0 * pf[n].rho.real(), 2.0 * pf[n].theta.real(), 2.0 * pf[n].z.real()};
  return out;
}

}  // namespace edept::spectrum
