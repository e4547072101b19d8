#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "edept/asymptotics/fit.hpp"
#include "edept/asymptotics/profile.hpp"
#include "edept/field/params.hpp"

namespace edept::asymptotics {

/// Exponents the closed form is expected to show, per alpha.
struct Prediction {
  int alpha = 1;
  double potential_exponent = 3.0;  // |A| ~ r^-(alpha + 2)
  field::Branch branch = field::Branch::RealPart;
  /// Only stated for alpha = 1: detection rate and electric energy density.
  std::optional<double> detection_rate_exponent;
  std::optional<double> electric_energy_exponent;
  /// Earlier one-photon construction, for comparison only.
  static constexpr double historical_exponent = 7.0;
};

inline Prediction predicted_exponents(int alpha) {
  if (alpha < 1) throw InvalidArgument("alpha must be >= 1, got " + std::to_string(alpha));
  Prediction p;
  p.alpha = alpha;
  p.potential_exponent = alpha + 2.0;
  p.branch = field::parity_branch(alpha);
  if (alpha == 1) {
    p.detection_rate_exponent = 10.0;
    p.electric_energy_exponent = 10.0;
  }
  return p;
}

struct Direction {
  std::string name;
  double theta = 0.0;  // polar angle from +z
  /// Fitted but not used by pass/fail checks.
  bool report_only = false;

  Eigen::Vector3d vector() const { return polar_direction(theta); }
};

/// Near-axis, diagonal and obtuse directions are checked. The equator is
/// reported: there the z-dependent numerator vanishes and odd alpha >= 3
/// falls off faster than the generic law.
inline std::vector<Direction> default_directions() {
  return {{"near_axis", 0.1, false},
          {"diagonal", kPi / 4.0, false},
          {"equator", kPi / 2.0, true},
          {"obtuse", 2.0 * kPi / 3.0, false}};
}

inline constexpr std::array<Quantity, 6> kScanQuantities = {Quantity::AbsA,  Quantity::AbsE,      Quantity::AbsB,
                                                             Quantity::UTotal, Quantity::UElectric, Quantity::DetectionRate};

struct ScanConfig {
  FitWindow window{50.0, 500.0};
  /// Second window; exponents must agree with the first within `stability`.
  FitWindow check_window{100.0, 1000.0};
  std::size_t samples = 41;  // per window, log-spaced
  double r2_floor = 0.99;
  double stability = 0.1;
  unsigned threads = 1;
};

struct ScanCell {
  std::optional<PowerLawFit> fit;
  std::optional<PowerLawFit> check;
  std::string failure;  // set when no fit was possible

  bool ok() const { return fit.has_value(); }
  bool stable(double tol) const { return fit && check && std::abs(fit->exponent - check->exponent) <= tol; }
};

struct ScanRow {
  int alpha = 1;
  field::Branch branch = field::Branch::RealPart;
  Direction direction;
  double t = 0.0;
  std::array<ScanCell, kScanQuantities.size()> cells;
  std::array<RadialProfile, kScanQuantities.size()> profiles;

  const ScanCell& cell(Quantity q) const { return cells[index(q)]; }
  const RadialProfile& profile(Quantity q) const { return profiles[index(q)]; }

  static std::size_t index(Quantity q) {
    for (std::size_t i = 0; i < kScanQuantities.size(); ++i)
      if (kScanQuantities[i] == q) return i;
    throw InvalidArgument("quantity not in scan");
  }
};

inline ScanRow scan_row(const field::EdeptParams& p, double t, const Direction& d, const ScanConfig& cfg,
                        const PhysicalConstants& units = kNaturalUnits) {
  ScanRow row;
  row.alpha = p.alpha;
  row.branch = p.branch;
  row.direction = d;
  row.t = t;
  const double L = p.length_scale();
  const FitWindow w{cfg.window.r_min * L, cfg.window.r_max * L};
  const FitWindow cw{cfg.check_window.r_min * L, cfg.check_window.r_max * L};
  const auto radii = log_radii(w.r_min, w.r_max, cfg.samples);
  const auto check_radii = log_radii(cw.r_min, cw.r_max, cfg.samples);
  for (std::size_t i = 0; i < kScanQuantities.size(); ++i) {
    const Quantity q = kScanQuantities[i];
    row.profiles[i] = sample_radial_profile(p, q, d.vector(), t, radii, units, cfg.threads);
    ScanCell& c = row.cells[i];
    try {
      c.fit = fit_power_law(row.profiles[i], w, cfg.r2_floor);
      c.check = fit_power_law(sample_radial_profile(p, q, d.vector(), t, check_radii, units, cfg.threads), cw,
                              cfg.r2_floor);
    } catch (const FitError& e) {
      c.fit.reset();
      c.check.reset();
      c.failure = e.what();
    }
  }
  return row;
}

/// Rows for every alpha (parity branch, g's from `base`) and direction.
inline std::vector<ScanRow> exponent_scan(const std::vector<int>& alphas, double t,
                                          const std::vector<Direction>& directions, const ScanConfig& cfg = {},
                                          const field::EdeptParams& base = {},
                                          const PhysicalConstants& units = kNaturalUnits) {
  if (alphas.empty()) throw InvalidArgument("exponent scan needs at least one alpha");
  std::vector<ScanRow> rows;
  for (int a : alphas) {
    const auto p = field::EdeptParams::make(a, base.g0, base.g1, base.g2);
    for (const auto& d : directions) rows.push_back(scan_row(p, t, d, cfg, units));
  }
  return rows;
}

/// Fitted exponents of `q` along one direction, in row order (alpha order),
/// and their first differences. Missing fits propagate as empty.
struct ExponentSeries {
  std::vector<int> alphas;
  std::vector<std::optional<double>> exponents;
  std::vector<std::optional<double>> differences;

  /// Largest spread among the available differences; empty if fewer than two.
  std::optional<double> difference_spread() const {
    std::vector<double> d;
    for (const auto& x : differences)
      if (x) d.push_back(*x);
    if (d.size() < 2) return std::nullopt;
    const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
    return *hi - *lo;
  }
};

inline ExponentSeries exponent_series(const std::vector<ScanRow>& rows, Quantity q, const std::string& direction) {
  ExponentSeries s;
  for (const auto& r : rows) {
    if (r.direction.name != direction) continue;
    s.alphas.push_back(r.alpha);
    const auto& c = r.cell(q);
    s.exponents.push_back(c.fit ? std::optional<double>(c.fit->exponent) : std::nullopt);
  }
  for (std::size_t i = 1; i < s.exponents.size(); ++i)
    s.differences.push_back(s.exponents[i] && s.exponents[i - 1]
                                ? std::optional<double>(*s.exponents[i] - *s.exponents[i - 1])
                                : std::nullopt);
  return s;
}

}  // namespace edept::asymptotics
