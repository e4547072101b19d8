#pragma once

// Hankel (orders 0 and 1) and axial Fourier transforms on AxisGrid samples.
//
//   hankel_transform(n, f, k) ~ int_0^inf f(rho) J_n(k rho) rho drho
//   fourier_axis(f, kz)       ~ int f(z) exp(-i kz z) dz
//
// On a UniformFromOrigin grid the trapezoid rule is corrected for the
// nonvanishing odd derivatives of the integrand at rho = 0 (Euler-Maclaurin
// terms through h^4), using a cubic small-rho series of f fitted to the
// first four nodes. The Bessel factor is expanded analytically, so the
// correction stays accurate when k h is not small. Everywhere else the plain trapezoid weights of the grid are
// used; for integrands analytic in the grid coordinate and decaying at the
// ends this converges geometrically.

#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>

#include "edept/errors.hpp"
#include "edept/numerics/grid.hpp"

namespace edept::numerics {

using cplx = std::complex<double>;

struct TailCheck {
  /// Largest allowed |f(edge)| / max|f|. Non-positive disables the check.
  double fraction = 1e-3;
};

namespace detail {

template <class V>
double magnitude(const V& x) {
  return std::abs(x);
}

template <class V>
void check_tails(std::span<const V> f, bool check_front, const TailCheck& tail, const char* what) {
  if (tail.fraction <= 0.0 || f.empty()) return;
  double peak = 0.0;
  for (const auto& x : f) peak = std::max(peak, magnitude(x));
  if (peak == 0.0) return;
  const double back = magnitude(f.back()) / peak;
  const double front = check_front ? magnitude(f.front()) / peak : 0.0;
  const double worst = std::max(back, front);
  if (worst > tail.fraction)
    throw TruncationError(std::string(what) + ": samples do not decay at the grid edge (edge/peak = " +
                          std::to_string(worst) + ")");
}

inline double bessel_j(int order, double x) {
  return order == 0 ? std::cyl_bessel_j(0.0, x) : std::cyl_bessel_j(1.0, x);
}

/// Small-rho Taylor coefficients a0..a3 of f from its values at 0, h, 2h, 3h.
template <class V>
std::array<cplx, 4> origin_series(const V& f0, const V& f1, const V& f2, const V& f3, double h) {
  const cplx y0(f0), y1(f1), y2(f2), y3(f3);
  const cplx d1 = y1 - y0, d2 = y2 - 2.0 * y1 + y0, d3 = y3 - 3.0 * y2 + 3.0 * y1 - y0;
  // Newton forward differences to monomial coefficients.
  return {y0, (d1 - d2 / 2.0 + d3 / 3.0) / h, (d2 / 2.0 - d3 / 2.0) / (h * h), d3 / (6.0 * h * h * h)};
}

/// Euler-Maclaurin correction at rho = 0 for the trapezoid sum of
/// g = f(rho) J_order(k rho) rho, given the Taylor coefficients of f:
///   I = T + (h^2/12) g1 - (h^4/720) g3,  gn = n-th derivative of g at 0.
inline cplx origin_correction(int order, const std::array<cplx, 4>& a, double h, double k) {
  const double h2 = h * h, h4 = h2 * h2;
  if (order == 1) {
    // g = (k/2) a0 rho^2 + (k/2) a1 rho^3 + ...
    return -h4 * 3.0 * k * a[1] / 720.0;
  }
  // g = a0 rho + a1 rho^2 + (a2 - k^2 a0/4) rho^3 + ...
  return h2 * a[0] / 12.0 - h4 * 6.0 * (a[2] - a[0] * k * k / 4.0) / 720.0;
}

}  // namespace detail

/// int_0^inf f(rho) J_order(k rho) rho drho on the grid (order 0 or 1).
template <class V>
cplx hankel_transform(int order, std::span<const V> samples, const AxisGrid& rho, double k,
                      const TailCheck& tail = {}) {
  if (order != 0 && order != 1) throw InvalidArgument("Hankel order must be 0 or 1");
  if (samples.size() != rho.size()) throw InvalidArgument("sample count does not match rho grid");
  detail::check_tails(samples, false, tail, "hankel_transform");
  const auto& x = rho.nodes();
  const auto& w = rho.weights();
  cplx sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += cplx(samples[i]) * (w[i] * x[i] * detail::bessel_j(order, k * x[i]));
  if (rho.spacing() == Spacing::UniformFromOrigin && samples.size() >= 4)
    sum += detail::origin_correction(
        order, detail::origin_series(samples[0], samples[1], samples[2], samples[3], rho.step()), rho.step(), k);
  return sum;
}

template <class V>
cplx hankel_transform_order1(std::span<const V> samples, const AxisGrid& rho, double k,
                             const TailCheck& tail = {}) {
  return hankel_transform(1, samples, rho, k, tail);
}

/// int f(z) exp(-i kz z) dz on the grid. No 2*pi factor on the forward
/// transform; the inverse carries dk/(2*pi).
template <class V>
cplx fourier_axis(std::span<const V> samples, const AxisGrid& z, double kz, const TailCheck& tail = {}) {
  if (samples.size() != z.size()) throw InvalidArgument("sample count does not match z grid");
  detail::check_tails(samples, true, tail, "fourier_axis");
  const auto& x = z.nodes();
  const auto& w = z.weights();
  cplx sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += cplx(samples[i]) * w[i] * std::polar(1.0, -kz * x[i]);
  return sum;
}

/// Batched separable transform: Hankel of order 0/1 in rho times the axial
/// Fourier transform in z, for every (k_rho, k_z) of a tensor mode set.
/// Kernels are built once; each application is two pairs of real GEMMs.
class HankelFourierPlan {
 public:
  HankelFourierPlan(AxisGrid rho, AxisGrid z, std::vector<double> k_rho, std::vector<double> k_z)
      : rho_(std::move(rho)), z_(std::move(z)), k_rho_(std::move(k_rho)), k_z_(std::move(k_z)) {
    if (rho_.spacing() != Spacing::UniformFromOrigin || rho_.size() < 4)
      throw InvalidArgument("HankelFourierPlan needs a from-origin rho grid with at least 4 nodes");
    const auto nr = static_cast<Eigen::Index>(rho_.size());
    const auto nz = static_cast<Eigen::Index>(z_.size());
    const auto nkr = static_cast<Eigen::Index>(k_rho_.size());
    const auto nkz = static_cast<Eigen::Index>(k_z_.size());
    z_cos_.resize(nz, nkz);
    z_sin_.resize(nz, nkz);
    for (Eigen::Index j = 0; j < nz; ++j)
      for (Eigen::Index q = 0; q < nkz; ++q) {
        const double phase = -k_z_[q] * z_.nodes()[j];
        z_cos_(j, q) = z_.weights()[j] * std::cos(phase);
        z_sin_(j, q) = z_.weights()[j] * std::sin(phase);
      }
    j0_.resize(nkr, nr);
    j1_.resize(nkr, nr);
    for (Eigen::Index p = 0; p < nkr; ++p)
      for (Eigen::Index i = 0; i < nr; ++i) {
        const double r = rho_.nodes()[i];
        const double wr = rho_.weights()[i] * r;
        j0_(p, i) = wr * detail::bessel_j(0, k_rho_[p] * r);
        j1_(p, i) = wr * detail::bessel_j(1, k_rho_[p] * r);
      }
  }

  /// samples(i, j) = f(rho_i, z_j). Returns G(p, q) at (k_rho_p, k_z_q).
  Eigen::MatrixXcd apply(int order, const Eigen::MatrixXd& samples, const TailCheck& tail = {}) const {
    if (order != 0 && order != 1) throw InvalidArgument("Hankel order must be 0 or 1");
    if (samples.rows() != static_cast<Eigen::Index>(rho_.size()) ||
        samples.cols() != static_cast<Eigen::Index>(z_.size()))
      throw InvalidArgument("sample matrix does not match the plan's position grid");
    check_edges(samples, tail);
    const Eigen::MatrixXd fre = samples * z_cos_;
    const Eigen::MatrixXd fim = samples * z_sin_;
    const Eigen::MatrixXd& jk = order == 0 ? j0_ : j1_;
    Eigen::MatrixXcd out(jk.rows(), fre.cols());
    out.real() = jk * fre;
    out.imag() = jk * fim;
    const double h = rho_.step();
    for (Eigen::Index q = 0; q < out.cols(); ++q) {
      auto at = [&](Eigen::Index i) { return cplx(fre(i, q), fim(i, q)); };
      const auto series = detail::origin_series(at(0), at(1), at(2), at(3), h);
      for (Eigen::Index p = 0; p < out.rows(); ++p)
        out(p, q) += detail::origin_correction(order, series, h, k_rho_[p]);
    }
    return out;
  }

  const AxisGrid& rho() const { return rho_; }
  const AxisGrid& z() const { return z_; }
  const std::vector<double>& k_rho() const { return k_rho_; }
  const std::vector<double>& k_z() const { return k_z_; }

 private:
  void check_edges(const Eigen::MatrixXd& f, const TailCheck& tail) const {
    if (tail.fraction <= 0.0) return;
    const double peak = f.cwiseAbs().maxCoeff();
    if (peak == 0.0) return;
    const double edge = std::max({f.row(f.rows() - 1).cwiseAbs().maxCoeff(), f.col(0).cwiseAbs().maxCoeff(),
                                  f.col(f.cols() - 1).cwiseAbs().maxCoeff()});
    if (edge > tail.fraction * peak)
      throw TruncationError("field does not decay at the transform grid edge (edge/peak = " +
                            std::to_string(edge / peak) + ")");
  }

  AxisGrid rho_;
  AxisGrid z_;
  std::vector<double> k_rho_;
  std::vector<double> k_z_;
  Eigen::MatrixXd z_cos_, z_sin_;
  Eigen::MatrixXd j0_, j1_;
};

}  // namespace edept::numerics
