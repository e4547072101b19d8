#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "edept/constants.hpp"
#include "edept/field/fields.hpp"
#include "edept/field/params.hpp"
#include "edept/numerics/grid.hpp"
#include "edept/numerics/quadrature.hpp"
#include "edept/parallel.hpp"

namespace edept::field {

struct EnergyIntegrals {
  double total = 0.0;
  double electric = 0.0;
  double magnetic = 0.0;
};

/// Position-space integrals of the branch energy densities at time t.
inline EnergyIntegrals total_energy(const EdeptParams& p, double t, const numerics::CylGrid& grid,
                                    const PhysicalConstants& units = kNaturalUnits, unsigned threads = 0) {
  p.validate();
  const auto nr = static_cast<Eigen::Index>(grid.n_rho());
  const auto nz = static_cast<Eigen::Index>(grid.n_z());
  Eigen::MatrixXd ue(nr, nz), um(nr, nz);
  parallel_for(
      grid.n_rho(),
      [&](std::size_t i) {
        for (std::size_t j = 0; j < grid.n_z(); ++j) {
          const auto u = energy_density(
              p, SpacetimePoint::cylindrical(t, grid.rho().nodes()[i], 0.0, grid.z().nodes()[j]),
              DifferentiationScheme::dual(), units);
          ue(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = u.u_electric;
          um(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = u.u_magnetic;
        }
      },
      threads);
  EnergyIntegrals e;
  e.electric = numerics::integrate_cylindrical_samples(ue, grid);
  e.magnetic = numerics::integrate_cylindrical_samples(um, grid);
  e.total = e.electric + e.magnetic;
  return e;
}

}  // namespace edept::field
