#pragma once

#include "heseq/types.hpp"

namespace heseq {

struct MinimizationResult {
  CorrelationParameter a_star;
  EnergyHartree e_min;
  int evaluations = 0;
  // True when the coarse-grid seed found the best value on an edge of the
  // search interval [1e-3, 1e3]; happens for z below roughly 0.75, where the
  // a -> 0 limit undercuts the a = 1 configuration.
  bool at_boundary = false;
};

// Eigenvalue of the correlated two-electron model:
//   E_n(a, Z) = -((1+a)^2 / (2 n^2 (1+a^2))) * (Z - a/(1+a)^2)^2
// Always <= 0; symmetric under a <-> 1/a.
EnergyHartree bohr_energy(CorrelationParameter a, NuclearCharge z, PrincipalQuantumNumber n);

// Minimizes bohr_energy over a in [1e-3, 1e3], searching in log a (the
// symmetry axis a = 1 maps to 0). Coarse 256-point grid seed, then
// golden-section refinement to 1e-10 on log a.
MinimizationResult optimal_correlation(NuclearCharge z, PrincipalQuantumNumber n);

// Energy to remove one electron: I(a, Z) = -Z^2/2 - E_1(a, Z).
// Positive when the two-electron system is bound relative to the
// one-electron ion.
EnergyHartree ionization_energy(CorrelationParameter a, NuclearCharge z);

// Threshold charge at which I(1, Z) = 0: Z0 = 1/2 + sqrt(1/8).
NuclearCharge critical_charge();

// Independent numeric route to Z0: bisection on z -> I(1, z) over [0.5, 1.5].
NuclearCharge critical_charge_numeric();

// One-electron (hydrogenic) level: -Z^2 / (2 n^2).
EnergyHartree hydrogenic_energy(NuclearCharge z, PrincipalQuantumNumber n);

}  // namespace heseq
