#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "edept/errors.hpp"
#include "edept/asymptotics/profile.hpp"

namespace edept::asymptotics {

struct FitWindow {
  double r_min = 50.0;
  double r_max = 500.0;

  bool contains(double r) const { return r >= r_min * (1.0 - 1e-12) && r <= r_max * (1.0 + 1e-12); }
};

/// quantity ~ prefactor * r^-exponent over the window.
struct PowerLawFit {
  double exponent = 0.0;
  double prefactor = 0.0;
  FitWindow window;
  double r_squared = 0.0;
  /// Largest |log residual| of a used sample.
  double max_log_residual = 0.0;
  std::size_t used = 0;
  std::size_t zeros = 0;    // exact zeros inside the window, excluded
  std::size_t flagged = 0;  // range-error samples inside the window, excluded
  bool reliable = false;    // r_squared >= the floor it was fitted with
};

inline constexpr std::size_t kMinFitSamples = 8;

/// Least-squares line through (log r, log value) over the window.
inline PowerLawFit fit_power_law(const RadialProfile& prof, const FitWindow& window, double r2_floor = 0.99) {
  if (!(window.r_min > 0.0) || !(window.r_max > window.r_min)) throw InvalidArgument("fit window needs 0 < r_min < r_max");
  PowerLawFit fit;
  fit.window = window;
  std::vector<double> x, y;
  for (std::size_t i = 0; i < prof.size(); ++i) {
    if (!window.contains(prof.radii[i])) continue;
    if (!prof.flagged.empty() && prof.flagged[i]) {
      ++fit.flagged;
      continue;
    }
    const double v = prof.values[i];
    if (!std::isfinite(v) || v < 0.0) throw FitError("profile value is not finite and nonnegative");
    if (v == 0.0) {
      ++fit.zeros;
      continue;
    }
    x.push_back(std::log(prof.radii[i]));
    y.push_back(std::log(v));
  }
  fit.used = x.size();
  if (fit.used < kMinFitSamples)
    throw FitError("power-law fit of " + to_string(prof.quantity) + " needs " + std::to_string(kMinFitSamples) +
                   " usable samples in the window, got " + std::to_string(fit.used) + " (" +
                   std::to_string(fit.zeros) + " zeros, " + std::to_string(fit.flagged) + " flagged)");
  const double n = static_cast<double>(fit.used);
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw FitError("fit window holds a single radius");
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (intercept + slope * x[i]);
    ss_res += r * r;
    fit.max_log_residual = std::max(fit.max_log_residual, std::abs(r));
  }
  fit.exponent = -slope;
  fit.prefactor = std::exp(intercept);
  // A constant profile (variance at roundoff level) is fitted exactly.
  const bool constant = syy <= 1e-24 * n * std::max(1.0, my * my);
  fit.r_squared = constant ? 1.0 : std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  fit.reliable = fit.r_squared >= r2_floor;
  return fit;
}

}  // namespace edept::asymptotics
