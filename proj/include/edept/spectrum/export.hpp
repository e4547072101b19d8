#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "edept/io/csv.hpp"
#include "edept/spectrum/amplitude.hpp"
#include "edept/spectrum/helicity.hpp"

namespace edept::spectrum {

/// Header of the spectrum CSV. For a wavevector at azimuth k_phi the
/// Cartesian amplitude has A_x +- i A_y = (c_rho +- i c_phi) exp(+-i k_phi),
/// so sector_p1 / sector_m1 are the m = +1 / -1 sector coefficients and
/// axial is the m = 0 z component.
inline std::vector<std::string> spectrum_csv_header() {
  return {"k_rho",        "k_z",          "omega",    "sector_p1_re", "sector_p1_im", "sector_m1_re",
          "sector_m1_im", "axial_re",     "axial_im", "f_p1_re",      "f_p1_im",      "f_m1_re",
          "f_m1_im"};
}

inline void write_spectrum_csv(std::ostream& out, const SpectralAmplitude& a, const HelicityAmplitudes& h,
                               const ModeGrid& modes) {
  if (a.n_rho() != modes.n_rho() || a.n_z() != modes.n_z() ||
      static_cast<std::size_t>(h.f_plus.rows()) != modes.n_rho() ||
      static_cast<std::size_t>(h.f_plus.cols()) != modes.n_z())
    throw InvalidArgument("spectrum, helicity amplitudes and mode grid disagree in shape");
  io::CsvWriter w(out, spectrum_csv_header());
  const cplx i(0.0, 1.0);
  for (std::size_t p = 0; p < modes.n_rho(); ++p)
    for (std::size_t q = 0; q < modes.n_z(); ++q) {
      const auto r = static_cast<Eigen::Index>(p), c = static_cast<Eigen::Index>(q);
      const cplx sp = a.c_rho(r, c) + i * a.c_phi(r, c);
      const cplx sm = a.c_rho(r, c) - i * a.c_phi(r, c);
      const cplx az = a.c_z(r, c);
      const cplx fp = h.f_plus(r, c), fm = h.f_minus(r, c);
      w.row({modes.k_rho()[p], modes.k_z()[q], modes.omega(p, q), sp.real(), sp.imag(), sm.real(), sm.imag(),
             az.real(), az.imag(), fp.real(), fp.imag(), fm.real(), fm.imag()});
    }
}

}  // namespace edept::spectrum
