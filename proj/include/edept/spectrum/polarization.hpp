#pragma once

#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "edept/errors.hpp"

namespace edept::spectrum {

struct PolarizationBasis {
  Eigen::Vector3cd plus;   // helicity +1
  Eigen::Vector3cd minus;  // helicity -1
  Eigen::Vector3d e1, e2;  // real transverse frame, e2 = k^ x e1
};

/// Helicity vectors eps_{+-1} = (e1 +- i e2)/sqrt2 with e1 along axis x k^.
/// When k^ is (anti)parallel to the seam axis, e1 falls back to a fixed unit
/// vector normal to the axis (x^ for the default axis z^).
inline PolarizationBasis polarization_basis(const Eigen::Vector3d& k,
                                            const Eigen::Vector3d& axis = Eigen::Vector3d::UnitZ()) {
  const double kn = k.norm();
  if (!(kn > 0.0) || !std::isfinite(kn)) throw InvalidArgument("polarization basis needs a nonzero wavevector");
  const double an = axis.norm();
  if (!(an > 0.0)) throw InvalidArgument("seam axis must be nonzero");
  const Eigen::Vector3d khat = k / kn;
  const Eigen::Vector3d ahat = axis / an;
  Eigen::Vector3d e1 = ahat.cross(khat);
  if (e1.norm() <= 1e-12) {
    // Anchor: the coordinate axis least aligned with the seam, orthogonalized.
    Eigen::Index i = 0;
    ahat.cwiseAbs().minCoeff(&i);
    e1 = Eigen::Vector3d::Unit(i) - ahat * ahat(i);
  }
  e1.normalize();
  const Eigen::Vector3d e2 = khat.cross(e1);
  const std::complex<double> i(0.0, 1.0);
  const double r = 1.0 / std::sqrt(2.0);
  return {r * (e1.cast<std::complex<double>>() + i * e2.cast<std::complex<double>>()),
          r * (e1.cast<std::complex<double>>() - i * e2.cast<std::complex<double>>()), e1, e2};
}

}  // namespace edept::spectrum
