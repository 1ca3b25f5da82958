#pragma once

#include "heseq/closed_forms.hpp"
#include "heseq/constants.hpp"
#include "heseq/types.hpp"

namespace heseq {

struct EnergyBreakdown {
  EnergyHartree base;          // nonrelativistic model energy
  EnergyHartree relativistic;  // always negative
  EnergyHartree qed;           // positive up to z ~ 42
  EnergyHartree total;         // base + relativistic + qed, same-precision sum
  MethodId method = MethodId::interpolation;
  double z = 0.0;
};

// Relativistic shift of the ground state,
//   -(alpha^2/8) z^2 (z^2 - 3.606 z + 3.29 + 0.05/z).
// The quadratic in the bracket has negative discriminant, so the shift is
// negative for every z > 0.
EnergyHartree relativistic_correction(NuclearCharge z, const PhysicalConstants& pc = {});

// Lamb-shift-type radiative correction,
//   (16 z^4 alpha^3 / (6 pi)) [ (3.745 - ln z)
//                               - (5.97 - 1.31 ln z)/z
//                               + (3.08 - 0.28 ln z)/z^2 ].
// ln is the natural logarithm. Both corrections are ground-state (n = 1)
// estimates, asymptotic in character.
EnergyHartree qed_correction(NuclearCharge z, const PhysicalConstants& pc = {});

EnergyBreakdown corrected_energy(MethodId method, NuclearCharge z, InterpolationExponent p = {},
                                 const PhysicalConstants& pc = {});

}  // namespace heseq
