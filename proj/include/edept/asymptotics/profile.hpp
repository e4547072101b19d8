#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "edept/constants.hpp"
#include "edept/errors.hpp"
#include "edept/field/fields.hpp"
#include "edept/field/params.hpp"
#include "edept/parallel.hpp"

namespace edept::asymptotics {

enum class Quantity { AbsA, UTotal, UElectric, DetectionRate, AbsE, AbsB };

inline std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::AbsA: return "abs_A";
    case Quantity::UTotal: return "u_total";
    case Quantity::UElectric: return "u_electric";
    case Quantity::DetectionRate: return "detection_rate";
    case Quantity::AbsE: return "abs_E";
    case Quantity::AbsB: return "abs_B";
  }
  return "?";
}

inline Quantity quantity_from_string(const std::string& s) {
  for (Quantity q : {Quantity::AbsA, Quantity::UTotal, Quantity::UElectric, Quantity::DetectionRate, Quantity::AbsE,
                     Quantity::AbsB})
    if (to_string(q) == s) return q;
  throw InvalidArgument("unknown quantity '" + s + "'");
}

/// Value of a quantity at one spacetime point, for the branch in `p`.
inline double evaluate(const field::EdeptParams& p, Quantity q, const field::SpacetimePoint& pt,
                       const PhysicalConstants& units = kNaturalUnits) {
  const field::FieldSample f = field::em_fields(p, pt, field::DifferentiationScheme::dual(), units);
  auto norm_of = [&](const Eigen::Vector3cd& complex, const Eigen::Vector3d& real) {
    return p.branch == field::Branch::Analytic ? complex.norm() : real.norm();
  };
  switch (q) {
    case Quantity::AbsA: return norm_of(f.A, f.realA);
    case Quantity::AbsE: return norm_of(f.E, f.realE);
    case Quantity::AbsB: return norm_of(f.B, f.realB);
    default: break;
  }
  const auto u = field::energy_density(f, p.branch, units);
  switch (q) {
    case Quantity::UTotal: return u.u_total;
    case Quantity::UElectric: return u.u_electric;
    case Quantity::DetectionRate: return u.detection_rate;
    default: break;
  }
  throw InvalidArgument("unhandled quantity");
}

struct RadialProfile {
  Eigen::Vector3d direction = Eigen::Vector3d::UnitX();
  double t = 0.0;
  Quantity quantity = Quantity::AbsA;
  std::vector<double> radii;
  std::vector<double> values;
  /// Samples whose evaluation raised a range error; their value is 0.
  std::vector<bool> flagged;

  std::size_t size() const { return radii.size(); }
  std::size_t flagged_count() const {
    std::size_t n = 0;
    for (bool f : flagged) n += f ? 1 : 0;
    return n;
  }
};

/// n radii spaced evenly in log r over [r_min, r_max].
inline std::vector<double> log_radii(double r_min, double r_max, std::size_t n) {
  if (!(r_min > 0.0) || !(r_max > r_min) || n < 2) throw InvalidArgument("log_radii needs 0 < r_min < r_max, n >= 2");
  std::vector<double> r(n);
  const double a = std::log(r_min), b = std::log(r_max);
  for (std::size_t i = 0; i < n; ++i)
    r[i] = i + 1 == n ? r_max : std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  r.front() = r_min;
  return r;
}

/// Unit vector at polar angle theta from +z, in the x-z plane.
inline Eigen::Vector3d polar_direction(double theta) { return {std::sin(theta), 0.0, std::cos(theta)}; }

inline RadialProfile sample_radial_profile(const field::EdeptParams& p, Quantity q, const Eigen::Vector3d& direction,
                                           double t, const std::vector<double>& radii,
                                           const PhysicalConstants& units = kNaturalUnits, unsigned threads = 1) {
  p.validate();
  const double dn = direction.norm();
  if (!(dn > 0.0) || !std::isfinite(dn)) throw InvalidArgument("direction must be a nonzero finite vector");
  for (std::size_t i = 0; i < radii.size(); ++i)
    if (!(radii[i] > 0.0) || (i > 0 && !(radii[i] > radii[i - 1])))
      throw InvalidArgument("radii must be positive and strictly increasing");
  RadialProfile prof;
  prof.direction = direction / dn;
  prof.t = t;
  prof.quantity = q;
  prof.radii = radii;
  prof.values.assign(radii.size(), 0.0);
  std::vector<char> flags(radii.size(), 0);
  parallel_for(
      radii.size(),
      [&](std::size_t i) {
        const Eigen::Vector3d x = radii[i] * prof.direction;
        try {
          prof.values[i] = evaluate(p, q, field::SpacetimePoint::cartesian(t, x(0), x(1), x(2)), units);
        } catch (const RangeError&) {
          flags[i] = 1;
        }
      },
      threads);
  prof.flagged.assign(flags.begin(), flags.end());
  return prof;
}

}  // namespace edept::asymptotics
