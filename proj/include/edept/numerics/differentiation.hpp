#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <type_traits>

#include "edept/dual.hpp"
#include "edept/errors.hpp"

namespace edept::numerics {

enum class DiffKind { DualNumber, ComplexStep, CentralDifference };

struct DifferentiationScheme {
  DiffKind kind = DiffKind::DualNumber;
  double step = 0.0;  // unused for DualNumber

  static constexpr DifferentiationScheme dual() { return {DiffKind::DualNumber, 0.0}; }
  static constexpr DifferentiationScheme complex_step(double h) { return {DiffKind::ComplexStep, h}; }
  static constexpr DifferentiationScheme central(double h) { return {DiffKind::CentralDifference, h}; }

  friend bool operator==(const DifferentiationScheme&, const DifferentiationScheme&) = default;
};

inline std::string to_string(DiffKind k) {
  switch (k) {
    case DiffKind::DualNumber: return "dual";
    case DiffKind::ComplexStep: return "complex_step";
    case DiffKind::CentralDifference: return "central";
  }
  return "?";
}

namespace detail {

template <class V>
bool finite(const V& x) {
  if constexpr (std::is_floating_point_v<V>)
    return std::isfinite(x);
  else
    return std::isfinite(x.real()) && std::isfinite(x.imag());
}

inline void check_step(double x, double h) {
  if (!(h > 0.0) || !std::isfinite(h))
    throw SchemeError("differentiation step must be positive and finite");
  if (x + h == x || x - h == x)
    throw SchemeError("differentiation step underflows at x = " + std::to_string(x));
}

}  // namespace detail

/// f'(x) for a scalar map. `Scalar` is the value type f works in: double for
/// real maps, std::complex<double> for complex-valued maps of a real
/// argument. f must be callable with Dual<Scalar, 1> (DualNumber), Scalar
/// (CentralDifference) or std::complex<double> (ComplexStep, real maps only).
template <class Scalar = double, class F>
Scalar derivative(F&& f, double x, const DifferentiationScheme& scheme) {
  Scalar result{};
  switch (scheme.kind) {
    case DiffKind::DualNumber: {
      using D = Dual<Scalar, 1>;
      if constexpr (std::is_invocable_v<F&, D>) {
        const auto y = f(D::variable(Scalar(x), 0));
        result = y.d[0];
      } else {
        throw SchemeError("map does not accept dual-number arguments");
      }
      break;
    }
    case DiffKind::CentralDifference: {
      if constexpr (std::is_invocable_v<F&, Scalar>) {
        const double h = scheme.step;
        detail::check_step(x, h);
        // Use the actually representable spacing.
        const double xp = x + h, xm = x - h;
        result = (f(Scalar(xp)) - f(Scalar(xm))) / (xp - xm);
      } else {
        throw SchemeError("map does not accept scalar arguments");
      }
      break;
    }
    case DiffKind::ComplexStep: {
      if constexpr (!std::is_floating_point_v<Scalar> || !std::is_invocable_v<F&, std::complex<double>>) {
        throw SchemeError("complex-step differentiation needs a real-analytic real-valued map");
      } else {
        const double h = scheme.step;
        if (!(h > 0.0) || !std::isfinite(h)) throw SchemeError("complex step must be positive");
        const std::complex<double> y = f(std::complex<double>(x, h));
        if (!std::isfinite(1.0 / h)) throw SchemeError("complex step underflows");
        result = y.imag() / h;
      }
      break;
    }
  }
  if (!detail::finite(result)) throw SchemeError("non-finite derivative at x = " + std::to_string(x));
  return result;
}

}  // namespace edept::numerics
