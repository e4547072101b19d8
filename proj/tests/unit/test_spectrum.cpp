#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "edept/field/energy.hpp"
#include "edept/io/csv.hpp"
#include "edept/spectrum/export.hpp"
#include "edept/spectrum/validate.hpp"

using namespace edept;
using namespace edept::spectrum;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const cplx I(0.0, 1.0);

// Eigen's complex cross() conjugates; this one does not.
Eigen::Vector3cd cross(const Eigen::Vector3cd& a, const Eigen::Vector3cd& b) {
  return {a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0)};
}

// Closed-form spectrum of the alpha = 1 real pulse at t = 0 (g's = 1), by
// hand: the potential 2 rho / (1 + rho^2 + z^2)^2 has 3D transform
// -2 pi^2 i k_rho exp(-|k|) / |k| along phi^_k, and the extraction halves it.
cplx alpha1_amplitude(double k_rho, double k_z) {
  const double k = std::hypot(k_rho, k_z);
  return cplx(0.0, -kPi * kPi) * k_rho * std::exp(-k) / k;
}

const SpectrumPlan& default_plan() {
  static const SpectrumPlan plan(TransformGrid::defaults(1.0), ModeGrid::defaults(1.0));
  return plan;
}

const SpectralAmplitude& alpha1_spectrum() {
  static const SpectralAmplitude a = positive_frequency_spectrum(field::EdeptParams::make(1), 0.0, default_plan());
  return a;
}

// A transverse synthetic spectrum: amplitude g(k) along a chosen helicity.
SpectralAmplitude synthetic(const ModeGrid& modes, bool plus_only) {
  SpectralAmplitude s;
  const auto nr = static_cast<Eigen::Index>(modes.n_rho()), nz = static_cast<Eigen::Index>(modes.n_z());
  s.c_rho.setZero(nr, nz);
  s.c_phi.setZero(nr, nz);
  s.c_z.setZero(nr, nz);
  for (std::size_t p = 0; p < modes.n_rho(); ++p)
    for (std::size_t q = 0; q < modes.n_z(); ++q) {
      const Eigen::Vector3d k(modes.k_rho()[p], 0.0, modes.k_z()[q]);
      const auto b = polarization_basis(k);
      const double g = std::exp(-k.squaredNorm());
      const Eigen::Vector3cd v =
          plus_only ? Eigen::Vector3cd(g * b.plus) : Eigen::Vector3cd(g * b.plus + cplx(0.3, -0.7) * g * b.minus);
      const auto i = static_cast<Eigen::Index>(p), j = static_cast<Eigen::Index>(q);
      s.c_rho(i, j) = v(0);
      s.c_phi(i, j) = v(1);
      s.c_z(i, j) = v(2);
    }
  return s;
}

}  // namespace

TEST_CASE("polarization basis anchor and its parity image") {
  const double r = 1.0 / std::sqrt(2.0);
  const auto up = polarization_basis({0.0, 0.0, 3.0});
  CHECK((up.plus - Eigen::Vector3cd(r, I * r, 0.0)).norm() < 1e-15);
  CHECK((up.minus - Eigen::Vector3cd(r, -I * r, 0.0)).norm() < 1e-15);
  const auto down = polarization_basis({0.0, 0.0, -0.5});
  CHECK((down.plus - Eigen::Vector3cd(r, -I * r, 0.0)).norm() < 1e-15);
  CHECK_THROWS_AS(polarization_basis(Eigen::Vector3d::Zero()), InvalidArgument);
  CHECK_THROWS_AS(polarization_basis({1.0, 0.0, 0.0}, Eigen::Vector3d::Zero()), InvalidArgument);
}

TEST_CASE("polarization basis is orthonormal, transverse and of definite helicity") {
  std::mt19937_64 gen(7);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::Vector3d k(n(gen), n(gen), n(gen));
    const Eigen::Vector3d axis(n(gen), n(gen), n(gen));
    for (const auto& b : {polarization_basis(k), polarization_basis(k, axis)}) {
      const Eigen::Vector3cd kh = (k / k.norm()).cast<cplx>();
      CHECK(std::abs(b.plus.dot(b.plus) - 1.0) < 1e-15);
      CHECK(std::abs(b.minus.dot(b.minus) - 1.0) < 1e-15);
      CHECK(std::abs(b.plus.dot(b.minus)) < 1e-15);
      CHECK(std::abs(kh.dot(b.plus)) < 1e-15);
      CHECK(std::abs(kh.dot(b.minus)) < 1e-15);
      // k^ x eps_pm = -+ i eps_pm
      CHECK((cross(kh, b.plus) + I * b.plus).norm() < 1e-14);
      CHECK((cross(kh, b.minus) - I * b.minus).norm() < 1e-14);
    }
  }
}

TEST_CASE("helicity projection of an eps_+ aligned spectrum has no minus part") {
  const ModeGrid modes(0.25, 5.0);
  const auto s = synthetic(modes, true);
  const auto h = helicity_amplitudes(s, modes);
  CHECK(h.f_minus.cwiseAbs().maxCoeff() < 1e-15 * h.f_plus.cwiseAbs().maxCoeff());
  CHECK(h.norm_minus <= 1e-30 * h.norm_plus);
  CHECK_THAT(h.norm, WithinRel(h.norm_plus, 1e-15));
}

TEST_CASE("helicity amplitudes reconstruct the transverse amplitude") {
  const ModeGrid modes(0.25, 5.0);
  const auto s = synthetic(modes, false);
  const auto h = helicity_amplitudes(s, modes);
  for (std::size_t p = 0; p < modes.n_rho(); ++p)
    for (std::size_t q = 0; q < modes.n_z(); ++q) {
      const Eigen::Vector3cd a = s.vector(p, q);
      CHECK((amplitude_from_helicity(h, modes, p, q) - a).norm() <= 1e-14 * a.norm() + 1e-300);
    }
}

TEST_CASE("longitudinal content is rejected with the worst node") {
  const ModeGrid modes(0.25, 5.0);
  auto s = synthetic(modes, true);
  s.c_z(3, 7) += 0.01 * std::abs(s.c_phi(3, 7)) + 1e-3;
  try {
    helicity_amplitudes(s, modes);
    FAIL("expected TransversalityError");
  } catch (const TransversalityError& e) {
    CHECK(e.node_i == 3);
    CHECK(e.node_j == 7);
    CHECK(e.residual > 1e-6);
  }
  CHECK_THROWS_AS(helicity_amplitudes(s, ModeGrid(0.5, 5.0)), InvalidArgument);
}

TEST_CASE("zero field gives a zero spectrum, norm and energy") {
  const SpectrumPlan plan(TransformGrid::uniform(0.2, 10.0), ModeGrid(0.5, 5.0));
  const auto s = plan.extract([](double, double) { return CauchySample{}; });
  CHECK(s.c_rho.cwiseAbs().maxCoeff() == 0.0);
  CHECK(s.c_phi.cwiseAbs().maxCoeff() == 0.0);
  CHECK(s.c_z.cwiseAbs().maxCoeff() == 0.0);
  const auto h = helicity_amplitudes(s, plan.modes());
  const auto ne = norm_and_energy(h, plan.modes());
  CHECK(ne.norm == 0.0);
  CHECK(ne.spectral_energy == 0.0);
  const auto f = plan.potential_from_fields([](double, double) { return FieldSample{}; });
  CHECK(f.c_phi.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("analytic branch has no spectrum") {
  auto p = field::EdeptParams::make(1);
  p.branch = field::Branch::Analytic;
  CHECK_THROWS_AS(positive_frequency_spectrum(p, 0.0, default_plan()), InvalidArgument);
  CHECK_THROWS_AS(positive_frequency_spectrum(field::EdeptParams::make(1), 0.0, default_plan(), FieldKind::Potential,
                                              PhysicalConstants(3.0, 1.0, 1.0)),
                  InvalidArgument);
}

TEST_CASE("monochromatic azimuthal wave packet is supported at k_z = +k0 only") {
  // A_theta = env(rho, z) cos(w0 t - k0 z) with a wide envelope; its
  // positive-frequency part lives near k = (0+, 0, k0), the mirror lobe at
  // k_z = -k0 cancels between value and rate.
  const double k0 = 4.0, w = 8.0, len = 8.0;
  auto env = [&](double rho, double z) { return (rho / w) * std::exp(-0.5 * (rho * rho / (w * w) + z * z / (len * len))); };
  const SpectrumPlan plan(TransformGrid::uniform(0.1, 60.0), ModeGrid(0.025, 6.0));
  const auto s = plan.extract([&](double rho, double z) {
    CauchySample c;
    c.value.theta = env(rho, z) * std::cos(k0 * z);
    c.rate.theta = k0 * env(rho, z) * std::sin(k0 * z);  // omega0 = c k0
    return c;
  });
  const auto& m = plan.modes();
  double inside = 0.0, total = 0.0, mirror = 0.0;
  for (std::size_t p = 0; p < m.n_rho(); ++p)
    for (std::size_t q = 0; q < m.n_z(); ++q) {
      const double e = m.weight(p, q) * std::norm(s.c_phi(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)));
      total += e;
      if (m.k_rho()[p] < 4.0 / w && std::abs(m.k_z()[q] - k0) < 4.0 / len) inside += e;
      if (m.k_z()[q] < 0.0) mirror += e;
    }
  CHECK(inside / total > 0.999);
  // The packet is not an exact free field: its k_z spread ~ 1/len puts
  // omega off c k0 and leaves a mirror lobe of about (1 / (2 k0 len))^2.
  CHECK(mirror / total < 1e-3);
  CHECK(transversality(s, m).max_residual == 0.0);
}

TEST_CASE("alpha = 1 spectrum matches the closed-form transform") {
  const auto& a = alpha1_spectrum();
  const auto& m = default_plan().modes();
  double num = 0.0, den = 0.0;
  for (std::size_t p = 0; p < m.n_rho(); ++p)
    for (std::size_t q = 0; q < m.n_z(); ++q) {
      const auto i = static_cast<Eigen::Index>(p), j = static_cast<Eigen::Index>(q);
      const cplx exact = alpha1_amplitude(m.k_rho()[p], m.k_z()[q]);
      const double w = m.weight(p, q) * m.omega(p, q) * m.omega(p, q);
      num += w * std::norm(a.c_phi(i, j) - exact);
      den += w * std::norm(exact);
      CHECK(a.c_rho(i, j) == 0.0);
      CHECK(a.c_z(i, j) == 0.0);
    }
  CHECK(std::sqrt(num / den) < 1e-4);
  // Pointwise at moderate k.
  const auto p = static_cast<std::size_t>(9), q = static_cast<std::size_t>(250 + 10);
  CHECK_THAT(std::abs(a.c_phi(9, 260)), WithinRel(std::abs(alpha1_amplitude(m.k_rho()[p], m.k_z()[q])), 1e-4));
}

TEST_CASE("norm and spectral energy of the alpha = 1 pulse") {
  const auto& m = default_plan().modes();
  const auto h = helicity_amplitudes(alpha1_spectrum(), m);
  // Hand-integrated from the closed-form amplitude: pi^2 / 8 and pi^2 / 2.
  CHECK_THAT(h.norm, WithinRel(kPi * kPi / 8.0, 1e-4));
  CHECK_THAT(h.spectral_energy, WithinRel(kPi * kPi / 2.0, 1e-4));
  CHECK(h.infrared_bound < 1e-3 * h.norm);
  // Reported, not asserted by the physics: azimuthal polarization splits evenly.
  INFO("norm_plus / norm = " << h.norm_plus / h.norm);
  CHECK(h.norm_plus + h.norm_minus == Catch::Approx(h.norm).epsilon(1e-14));
  const auto ne = norm_and_energy(h, m);
  CHECK(ne.norm == h.norm);
  // 2 eps0 sum w omega^2 |a|^2 is the same number.
  double direct = 0.0;
  for (std::size_t p = 0; p < m.n_rho(); ++p)
    for (std::size_t q = 0; q < m.n_z(); ++q)
      direct += 2.0 * m.weight(p, q) * m.omega(p, q) * m.omega(p, q) * alpha1_spectrum().vector(p, q).squaredNorm();
  CHECK_THAT(h.spectral_energy, WithinRel(direct, 1e-12));
}

TEST_CASE("norm and energy do not depend on the polarization seam") {
  const auto& m = default_plan().modes();
  const auto h0 = helicity_amplitudes(alpha1_spectrum(), m);
  for (const Eigen::Vector3d& axis : {Eigen::Vector3d(1.0, 2.0, 3.0), Eigen::Vector3d(0.0, 1.0, 0.0),
                                     Eigen::Vector3d(-0.3, 0.0, 1.0)}) {
    const auto h = helicity_amplitudes(alpha1_spectrum(), m, kNaturalUnits, 1e-6, 1e-8, axis);
    CHECK_THAT(h.norm, WithinRel(h0.norm, 1e-10));
    CHECK_THAT(h.spectral_energy, WithinRel(h0.spectral_energy, 1e-10));
  }
}

TEST_CASE("spectral energy equals the position-space energy") {
  const auto p = field::EdeptParams::make(1);
  const double u = field::total_energy(p, 0.0, numerics::CylGrid::defaults(1.0)).total;
  const auto h = helicity_amplitudes(alpha1_spectrum(), default_plan().modes());
  CHECK_THAT(h.spectral_energy, WithinRel(u, 1e-2));
  CHECK_THAT(u, WithinRel(kPi * kPi / 2.0, 1e-4));
}

TEST_CASE("direct potential sampling and the field route agree away from the ringing") {
  const auto p = field::EdeptParams::make(1);
  const auto direct = default_plan().extract(edept_source(p, FieldKind::Potential, 0.0));
  const auto& a = alpha1_spectrum();
  // (k_rho, k_z) = (5, 5): both routes are accurate there.
  CHECK_THAT(std::abs(direct.c_phi(49, 300)), WithinRel(std::abs(a.c_phi(49, 300)), 1e-3));
}

TEST_CASE("spectral validation of the alpha = 1 pulse") {
  const auto p = field::EdeptParams::make(1);
  const auto& plan = default_plan();
  const auto h = helicity_amplitudes(alpha1_spectrum(), plan.modes());
  ValidationOptions opt;
  const auto r = validate_spectrum(alpha1_spectrum(), h, plan, p, opt);
  CHECK(r.transversality_A < 1e-6);
  CHECK(r.longitudinal_B < 1e-4);
  CHECK(r.electric_relation < 1e-4);
  CHECK(r.magnetic_relation < 1e-4);
  CHECK(r.round_trip_t0 < 1e-3);
  CHECK(r.round_trip_t1 < 1e-3);
  CHECK(r.positive_frequency_error < 1e-3);
  CHECK_THAT(r.complex_rate_ratio, WithinAbs(0.25, 1e-3));
  CHECK(r.pass(opt.tolerances));
}

TEST_CASE("even alpha uses the imaginary branch and still round-trips") {
  const auto p = field::EdeptParams::make(2);
  const auto& plan = default_plan();
  const auto a = positive_frequency_spectrum(p, 0.0, plan);
  const auto cloud = test_cloud(200, 4.0, 3);
  CHECK(round_trip_error(a, plan.modes(), p, 0.0, cloud) < 1e-3);
  CHECK(round_trip_error(a, plan.modes(), p, 1.5, cloud) < 1e-3);
}

TEST_CASE("spectrum CSV has the documented header and one row per node") {
  const SpectrumPlan plan(TransformGrid::uniform(0.1, 20.0), ModeGrid(0.5, 3.0));
  const auto a = positive_frequency_spectrum(field::EdeptParams::make(1), 0.0, plan);
  const auto h = helicity_amplitudes(a, plan.modes());
  std::ostringstream out;
  write_spectrum_csv(out, a, h, plan.modes());
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line ==
        "k_rho,k_z,omega,sector_p1_re,sector_p1_im,sector_m1_re,sector_m1_im,axial_re,axial_im,f_p1_re,f_p1_im,"
        "f_m1_re,f_m1_im");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 12);
  }
  CHECK(rows == plan.modes().size());
  CHECK(io::format_real(1.0 / 3.0) == "3.3333333333333331e-01");
  CHECK(io::format_real(-0.0) == "0.0000000000000000e+00");
}

TEST_CASE("CSV writer rejects ragged rows and quotes text") {
  std::ostringstream out;
  io::CsvWriter w(out, {"a", "b"});
  w.row({1.5, std::string("x,y")});
  CHECK_THROWS_AS(w.row({1.0}), InvalidArgument);
  CHECK(out.str() == "a,b\n1.5000000000000000e+00,\"x,y\"\n");
}
