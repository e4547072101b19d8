#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include "edept/field/potential.hpp"
#include "edept/numerics/differentiation.hpp"
#include "edept/numerics/grid.hpp"
#include "edept/numerics/quadrature.hpp"
#include "edept/numerics/transforms.hpp"
#include "edept/field/fields.hpp"

using namespace edept;
using namespace edept::numerics;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// Adaptive oracle for int_0^inf exp(-a rho) J_n(k rho) rho drho.
double hankel_oracle(int order, double a, double k) {
  boost::math::quadrature::exp_sinh<double> integrator;
  return integrator.integrate(
      [&](double r) { return std::exp(-a * r) * boost::math::cyl_bessel_j(order, k * r) * r; });
}

}  // namespace

TEST_CASE("derivative schemes") {
  const auto sq = [](auto x) { return x * x; };
  CHECK_THAT(derivative(sq, 3.0, DifferentiationScheme::dual()), WithinAbs(6.0, 1e-15));
  CHECK_THAT(derivative(sq, 3.0, DifferentiationScheme::central(1e-4)), WithinAbs(6.0, 1e-8));
  CHECK_THAT(derivative([](auto x) { using std::exp; return exp(x); }, 0.0, DifferentiationScheme::complex_step(1e-20)),
             WithinAbs(1.0, 1e-15));

  SECTION("complex-valued closed form at the reference point") {
    const auto p = field::EdeptParams::make(1);
    auto A = [&](auto tau) {
      using S = decltype(tau);
      return field::azimuthal_potential(p, kNaturalUnits, tau, S(1.0), S(0.0));
    };
    const auto exact = derivative<field::cplx>(A, 0.0, DifferentiationScheme::dual());
    CHECK(std::abs(exact - field::cplx(0.0, 1.0)) < 1e-15);
    const auto fd = derivative<field::cplx>(A, 0.0, DifferentiationScheme::central(1e-5));
    CHECK(std::abs(fd - field::cplx(0.0, 1.0)) < 1e-9);
    CHECK_THROWS_AS(derivative<field::cplx>(A, 0.0, DifferentiationScheme::complex_step(1e-20)), SchemeError);
  }

  SECTION("failures are explicit") {
    CHECK_THROWS_AS(derivative(sq, 1e20, DifferentiationScheme::central(1e-6)), SchemeError);
    CHECK_THROWS_AS(derivative(sq, 1.0, DifferentiationScheme::central(-1.0)), SchemeError);
    CHECK_THROWS_AS(derivative([](auto x) { return 1.0 / (x - x); }, 1.0, DifferentiationScheme::dual()), SchemeError);
  }
}

TEST_CASE("grids") {
  const auto g = AxisGrid::sinh_symmetric(0.5, 100.0, 41);
  for (std::size_t i = 1; i < g.size(); ++i) REQUIRE(g.nodes()[i] > g.nodes()[i - 1]);
  for (std::size_t i = 0; i < g.size(); ++i) {
    REQUIRE(g.weights()[i] > 0.0);
    REQUIRE(g.nodes()[i] == -g.nodes()[g.size() - 1 - i]);
  }
  const auto r = g.refined();
  REQUIRE(r.size() == 81);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK_THAT(r.nodes()[2 * i], WithinAbs(g.nodes()[i], 1e-12));
  const auto o = AxisGrid::from_origin(0.1, 10);
  CHECK(o.front() == 0.0);
  CHECK_THAT(o.back(), WithinRel(1.0, 1e-15));
  CHECK(o.refined().size() == 21);
  CHECK_THROWS_AS(AxisGrid::logarithmic(0.0, 1.0, 10), InvalidArgument);
  CHECK_THROWS_AS(CylGrid(AxisGrid::uniform(0.0, 1.0, 5), AxisGrid::uniform(-1.0, 1.0, 5)), InvalidArgument);
}

TEST_CASE("order-1 Hankel transform of exp(-rho) at k = 2") {
  const double oracle = hankel_oracle(1, 1.0, 2.0);
  REQUIRE_THAT(oracle, WithinRel(2.0 / std::pow(5.0, 1.5), 1e-12));

  const auto rho = AxisGrid::from_origin(0.01, 4000);
  std::vector<double> f(rho.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::exp(-rho.nodes()[i]);
  CHECK_THAT(hankel_transform_order1(std::span<const double>(f), rho, 2.0).real(), WithinRel(oracle, 1e-6));

  const auto logr = AxisGrid::logarithmic(1e-6, 60.0, 2001);
  std::vector<double> fl(logr.size());
  for (std::size_t i = 0; i < fl.size(); ++i) fl[i] = std::exp(-logr.nodes()[i]);
  CHECK_THAT(hankel_transform_order1(std::span<const double>(fl), logr, 2.0).real(), WithinRel(oracle, 1e-6));
}

TEST_CASE("Hankel kernels agree with adaptive quadrature on a test family") {
  const auto rho = AxisGrid::from_origin(0.02, 2500);
  for (int order : {0, 1})
    for (double a : {0.5, 1.0, 3.0})
      for (double k : {0.1, 1.0, 4.0}) {
        std::vector<double> f(rho.size());
        for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::exp(-a * rho.nodes()[i]);
        const double oracle = hankel_oracle(order, a, k);
        CHECK_THAT(hankel_transform(order, std::span<const double>(f), rho, k).real(), WithinRel(oracle, 1e-6));
      }
  // Gaussian: int exp(-r^2) J0(k r) r dr = exp(-k^2/4)/2.
  std::vector<double> g(rho.size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::exp(-rho.nodes()[i] * rho.nodes()[i]);
  CHECK_THAT(hankel_transform(0, std::span<const double>(g), rho, 1.5).real(), WithinRel(0.5 * std::exp(-0.5625), 1e-6));
}

TEST_CASE("transforms are linear and check truncation") {
  std::mt19937_64 gen(11);
  std::normal_distribution<double> n01;
  const auto rho = AxisGrid::from_origin(0.05, 400);
  std::vector<double> f(rho.size()), g(rho.size()), s(rho.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double env = std::exp(-rho.nodes()[i]);
    f[i] = n01(gen) * env;
    g[i] = n01(gen) * env;
    s[i] = f[i] + g[i];
  }
  const TailCheck off{0.0};
  const cplx hf = hankel_transform_order1(std::span<const double>(f), rho, 1.3, off);
  const cplx hg = hankel_transform_order1(std::span<const double>(g), rho, 1.3, off);
  const cplx hs = hankel_transform_order1(std::span<const double>(s), rho, 1.3, off);
  CHECK(std::abs(hs - hf - hg) < 1e-13 * (std::abs(hf) + std::abs(hg)));

  std::vector<double> zero(rho.size(), 0.0);
  CHECK(hankel_transform_order1(std::span<const double>(zero), rho, 1.0) == cplx(0.0));
  const auto z = AxisGrid::uniform(-5.0, 5.0, 101);
  std::vector<double> zz(z.size(), 0.0);
  CHECK(fourier_axis(std::span<const double>(zz), z, 1.0) == cplx(0.0));

  std::vector<double> flat(rho.size(), 1.0);
  CHECK_THROWS_AS(hankel_transform_order1(std::span<const double>(flat), rho, 1.0), TruncationError);
  std::vector<double> flatz(z.size(), 1.0);
  CHECK_THROWS_AS(fourier_axis(std::span<const double>(flatz), z, 1.0), TruncationError);
}

TEST_CASE("axial Fourier transform") {
  const auto z = AxisGrid::uniform(-12.0, 12.0, 2401);
  std::vector<double> f(z.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::exp(-z.nodes()[i] * z.nodes()[i]);

  boost::math::quadrature::tanh_sinh<double> ts;
  const double oracle = ts.integrate([](double x) { return std::exp(-x * x) * std::cos(x); },
                                     -std::numeric_limits<double>::infinity(),
                                     std::numeric_limits<double>::infinity());
  REQUIRE_THAT(oracle, WithinRel(kSqrtPi * std::exp(-0.25), 1e-12));
  const cplx F = fourier_axis(std::span<const double>(f), z, 1.0);
  CHECK_THAT(F.real(), WithinRel(oracle, 1e-8));
  CHECK_THAT(F.imag(), WithinAbs(0.0, 1e-14));

  SECTION("shift theorem on grid-aligned shifts") {
    std::mt19937_64 gen(3);
    std::uniform_int_distribution<int> m(-150, 150);
    const double h = z.step();
    for (int trial = 0; trial < 20; ++trial) {
      const double a = m(gen) * h;
      std::vector<double> g(z.size());
      for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::exp(-std::pow(z.nodes()[i] - a, 2));
      for (double kz : {0.3, 1.0, 2.7}) {
        const cplx lhs = fourier_axis(std::span<const double>(g), z, kz);
        const cplx rhs = std::polar(1.0, -kz * a) * fourier_axis(std::span<const double>(f), z, kz);
        REQUIRE(std::abs(lhs - rhs) < 1e-8);
      }
    }
  }
}

TEST_CASE("separable transform plan matches the scalar kernels") {
  const auto rho = AxisGrid::from_origin(0.05, 300);
  const auto z = AxisGrid::uniform(-10.0, 10.0, 201);
  const std::vector<double> kr = {0.2, 1.0, 2.5}, kz = {-1.0, 0.0, 0.7};
  const HankelFourierPlan plan(rho, z, kr, kz);
  Eigen::MatrixXd f(rho.size(), z.size());
  for (std::size_t i = 0; i < rho.size(); ++i)
    for (std::size_t j = 0; j < z.size(); ++j) {
      const double r = rho.nodes()[i], x = z.nodes()[j];
      f(i, j) = r * std::exp(-r * r - (x - 0.3) * (x - 0.3));
    }
  const Eigen::MatrixXcd G = plan.apply(1, f);
  for (std::size_t q = 0; q < kz.size(); ++q) {
    std::vector<cplx> col(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) {
      std::vector<double> row(z.size());
      for (std::size_t j = 0; j < z.size(); ++j) row[j] = f(i, j);
      col[i] = fourier_axis(std::span<const double>(row), z, kz[q], TailCheck{0.0});
    }
    for (std::size_t p = 0; p < kr.size(); ++p) {
      const cplx direct = hankel_transform(1, std::span<const cplx>(col), rho, kr[p], TailCheck{0.0});
      CHECK(std::abs(G(p, q) - direct) < 1e-12 * std::abs(direct) + 1e-15);
      // int r^2 exp(-r^2) J1(k r) dr = (k/4) exp(-k^2/4)
      const cplx exact = kr[p] / 4.0 * std::exp(-kr[p] * kr[p] / 4.0) * kSqrtPi *
                         std::exp(-kz[q] * kz[q] / 4.0) * std::polar(1.0, -kz[q] * 0.3);
      CHECK(std::abs(G(p, q) - exact) < 1e-8 * std::abs(exact));
    }
  }
}

TEST_CASE("cylindrical quadrature") {
  SECTION("Gaussian volume") {
    const double v = integrate_cylindrical([](double r, double z) { return std::exp(-r * r - z * z); },
                                           CylGrid::defaults(1.0));
    CHECK_THAT(v, WithinRel(std::pow(kPi, 1.5), 1e-6));
  }
  SECTION("cylinder volume") {
    const double R = 1.0, H = 2.0;
    auto indicator = [&](double r, double z) { return (r <= R && std::abs(z) <= H / 2) ? 1.0 : 0.0; };
    const CylGrid grid(AxisGrid::uniform(1e-4, 3.0, 3001), AxisGrid::uniform(-3.0, 3.0, 6001));
    CHECK_THAT(integrate_cylindrical(indicator, grid), WithinRel(kPi * R * R * H, 2e-3));
  }
  SECTION("observed order under doubling") {
    auto f = [](double r, double z) { return std::exp(-r * r) / (1.0 + z * z * z * z); };
    // Reference from the finest grid; orders from three coarser levels.
    CylGrid g(AxisGrid::logarithmic(1e-4, 8.0, 33), AxisGrid::uniform(-40.0, 40.0, 65));
    std::vector<double> vals;
    for (int level = 0; level < 3; ++level) {
      vals.push_back(integrate_cylindrical(f, g));
      g = g.refined();
    }
    const double ref = integrate_cylindrical(f, g.refined().refined());
    const double e0 = std::abs(vals[0] - ref), e1 = std::abs(vals[1] - ref), e2 = std::abs(vals[2] - ref);
    INFO("errors " << e0 << " " << e1 << " " << e2);
    CHECK(std::log2(e0 / e1) >= 2.0);
    CHECK(std::log2(e1 / e2) >= 2.0);
  }
  SECTION("non-finite integrand") {
    CHECK_THROWS_AS(integrate_cylindrical([](double, double) { return std::nan(""); }, CylGrid::defaults(1.0)),
                    RangeError);
  }
}

TEST_CASE("total energy of the alpha = 1 pulse converges under grid doubling") {
  const auto p = field::EdeptParams::make(1);
  auto u = [&](double r, double z) {
    return field::energy_density(p, field::SpacetimePoint::cylindrical(0.0, r, 0.0, z)).u_total;
  };
  const auto grid = CylGrid::defaults(p.length_scale(), 201, 401);
  const double coarse = integrate_cylindrical(u, grid);
  const double fine = integrate_cylindrical(u, grid.refined());
  CHECK(coarse > 0.0);
  CHECK(std::abs(fine - coarse) < 5e-3 * fine);
}
