#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "edept/asymptotics/scan.hpp"

using namespace edept;
using namespace edept::asymptotics;
using Catch::Matchers::WithinAbs;

namespace {

RadialProfile synthetic(const std::vector<double>& r, double (*f)(double)) {
  RadialProfile p;
  p.radii = r;
  for (double x : r) p.values.push_back(f(x));
  p.flagged.assign(r.size(), false);
  return p;
}

}  // namespace

TEST_CASE("log radii are strictly increasing and hit both ends") {
  const auto r = log_radii(50.0, 5000.0, 33);
  REQUIRE(r.size() == 33);
  CHECK(r.front() == 50.0);
  CHECK(r.back() == 5000.0);
  for (std::size_t i = 1; i < r.size(); ++i) CHECK(r[i] > r[i - 1]);
  CHECK_THROWS_AS(log_radii(0.0, 1.0, 5), InvalidArgument);
  CHECK_THROWS_AS(log_radii(2.0, 1.0, 5), InvalidArgument);
}

TEST_CASE("fit of an exact power law") {
  const auto r = log_radii(50.0, 500.0, 20);
  const auto f = fit_power_law(synthetic(r, [](double x) { return std::pow(x, -3.0); }), {50.0, 500.0});
  CHECK_THAT(f.exponent, WithinAbs(3.0, 1e-10));
  CHECK_THAT(f.r_squared, WithinAbs(1.0, 1e-12));
  CHECK_THAT(f.prefactor, WithinAbs(1.0, 1e-9));
  CHECK(f.used == 20);
  CHECK(f.reliable);
}

TEST_CASE("fit of a rippled tenth power") {
  const auto r = log_radii(50.0, 500.0, 41);
  const auto f = fit_power_law(
      synthetic(r, [](double x) { return 5.0 * std::pow(x, -10.0) * (1.0 + 0.01 * std::sin(x)); }), {50.0, 500.0});
  CHECK_THAT(f.exponent, WithinAbs(10.0, 0.05));
  CHECK_THAT(std::log(f.prefactor), WithinAbs(std::log(5.0), 0.5));
}

TEST_CASE("constant profile has exponent zero") {
  const auto r = log_radii(1.0, 10.0, 10);
  const auto f = fit_power_law(synthetic(r, [](double) { return 2.5; }), {1.0, 10.0});
  CHECK_THAT(f.exponent, WithinAbs(0.0, 1e-14));
  CHECK(f.r_squared == 1.0);
}

TEST_CASE("zeros and flagged samples are excluded and counted") {
  const auto r = log_radii(1.0, 100.0, 12);
  auto p = synthetic(r, [](double x) { return 1.0 / (x * x); });
  p.values[3] = 0.0;
  p.flagged[5] = true;
  p.values[5] = 0.0;
  const auto f = fit_power_law(p, {1.0, 100.0});
  CHECK(f.zeros == 1);
  CHECK(f.flagged == 1);
  CHECK(f.used == 10);
  CHECK_THAT(f.exponent, WithinAbs(2.0, 1e-12));
  p.values[0] = p.values[1] = p.values[2] = 0.0;
  CHECK_THROWS_AS(fit_power_law(p, {1.0, 100.0}), FitError);
  CHECK_THROWS_AS(fit_power_law(p, {10.0, 1.0}), InvalidArgument);
  p.values[7] = -1.0;
  CHECK_THROWS_AS(fit_power_law(p, {1.0, 100.0}), FitError);
}

TEST_CASE("noisy profile is flagged unreliable") {
  const auto r = log_radii(1.0, 100.0, 16);
  const auto f = fit_power_law(synthetic(r, [](double x) { return 2.0 + std::sin(7.0 * std::log(x)); }), {1.0, 100.0});
  CHECK_FALSE(f.reliable);
  CHECK(f.r_squared >= 0.0);
  CHECK(f.r_squared <= 1.0);
}

TEST_CASE("radial profile samples the field engine") {
  const auto p = field::EdeptParams::make(1);
  const auto r = log_radii(50.0, 5000.0, 17);
  const auto dir = polar_direction(kPi / 4.0);
  const auto prof = sample_radial_profile(p, Quantity::AbsA, dir, 0.0, r);
  REQUIRE(prof.size() == r.size());
  const Eigen::Vector3d x = r[4] * dir;
  const auto pt = field::SpacetimePoint::cartesian(0.0, x(0), x(1), x(2));
  const field::cplx a = field::cylindrical_fields(p, pt, field::DifferentiationScheme::dual()).A_theta;
  CHECK_THAT(prof.values[4], Catch::Matchers::WithinRel(std::abs(field::project(p.branch, a)), 1e-14));
  const auto rate = sample_radial_profile(p, Quantity::DetectionRate, dir, 0.0, r);
  for (double v : rate.values) CHECK(v >= 0.0);
  CHECK_THROWS_AS(sample_radial_profile(p, Quantity::AbsA, Eigen::Vector3d::Zero(), 0.0, r), InvalidArgument);
  CHECK_THROWS_AS(sample_radial_profile(p, Quantity::AbsA, dir, 0.0, {2.0, 1.0}), InvalidArgument);
  CHECK(quantity_from_string("u_total") == Quantity::UTotal);
  CHECK_THROWS_AS(quantity_from_string("speed"), InvalidArgument);
}

TEST_CASE("range errors flag samples instead of aborting") {
  const auto p = field::EdeptParams::make(1);
  const auto prof = sample_radial_profile(p, Quantity::UTotal, polar_direction(1.0), 0.0, {1e2, 1e200, 1e250});
  CHECK_FALSE(prof.flagged[0]);
  CHECK(prof.flagged[1]);
  CHECK(prof.flagged_count() >= 1);
}

TEST_CASE("predicted exponents follow the parity rule") {
  const auto p1 = predicted_exponents(1);
  CHECK(p1.potential_exponent == 3.0);
  CHECK(p1.branch == field::Branch::RealPart);
  CHECK(p1.detection_rate_exponent == 10.0);
  CHECK(p1.electric_energy_exponent == 10.0);
  const auto p2 = predicted_exponents(2);
  CHECK(p2.potential_exponent == 4.0);
  CHECK(p2.branch == field::Branch::ImagPart);
  CHECK_FALSE(p2.detection_rate_exponent.has_value());
  CHECK(Prediction::historical_exponent == 7.0);
  CHECK_THROWS_AS(predicted_exponents(0), InvalidArgument);
}

TEST_CASE("single-alpha scan gives one row per direction") {
  const std::vector<Direction> dirs = {{"diagonal", kPi / 4.0, false}};
  const auto rows = exponent_scan({1}, 0.0, dirs);
  REQUIRE(rows.size() == 1);
  const auto& a = rows[0].cell(Quantity::AbsA);
  REQUIRE(a.ok());
  CHECK_THAT(a.fit->exponent, WithinAbs(3.0, 0.15));
  CHECK(a.stable(0.1));
  // The real electric field of alpha = 1 vanishes identically at t = 0.
  CHECK_FALSE(rows[0].cell(Quantity::AbsE).ok());
  CHECK_FALSE(rows[0].cell(Quantity::UElectric).ok());
  const auto s = exponent_series(rows, Quantity::AbsA, "diagonal");
  CHECK(s.differences.empty());
  CHECK_FALSE(s.difference_spread().has_value());
}

TEST_CASE("potential exponent is alpha + 2 off the equator") {
  const auto rows = exponent_scan({1, 2, 3, 4}, 0.0, default_directions());
  for (const auto& r : rows) {
    if (r.direction.report_only) continue;
    const auto& c = r.cell(Quantity::AbsA);
    REQUIRE(c.ok());
    INFO("alpha " << r.alpha << " " << r.direction.name);
    CHECK_THAT(c.fit->exponent, WithinAbs(r.alpha + 2.0, 0.15));
    CHECK(c.stable(0.1));
  }
}

TEST_CASE("fitted exponents do not depend on g0") {
  ScanConfig cfg;
  const Direction d{"diagonal", kPi / 4.0, false};
  for (int a : {1, 2}) {
    auto p = field::EdeptParams::make(a);
    const auto base = scan_row(p, 0.5, d, cfg);
    p.g0 = 7.0;
    const auto scaled = scan_row(p, 0.5, d, cfg);
    for (Quantity q : kScanQuantities) {
      const auto& x = base.cell(q);
      const auto& y = scaled.cell(q);
      REQUIRE(x.ok() == y.ok());
      if (x.ok()) CHECK_THAT(x.fit->exponent, WithinAbs(y.fit->exponent, 0.01));
    }
  }
}

TEST_CASE("exponent series and first differences") {
  const std::vector<Direction> dirs = {{"diagonal", kPi / 4.0, false}};
  const auto rows = exponent_scan({2, 3, 4}, 0.0, dirs);
  const auto s = exponent_series(rows, Quantity::AbsE, "diagonal");
  REQUIRE(s.differences.size() == 2);
  CHECK_THAT(*s.differences[0], WithinAbs(1.0, 0.05));
  CHECK_THAT(*s.differences[1], WithinAbs(1.0, 0.05));
  CHECK_THAT(*s.difference_spread(), WithinAbs(0.0, 0.05));
}
