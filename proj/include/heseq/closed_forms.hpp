#pragma once

#include <string>
#include <string_view>

#include "heseq/types.hpp"

namespace heseq {

// The closed-form ground-state energy models for a two-electron system.
enum class MethodId {
  bohr,           // correlated model at a = 1, n = 1
  asymptote,      // small-Z form  -(Z - 1/4)^2
  variational,    // one-parameter screening  -(Z - 5/16)^2
  perturbation,   // first order  -Z^2 + (5/8) Z
  interpolation,  // screening interpolated between 1/4 and 5/16
  hylleraas,      // 1/Z series truncated at its constant term
};

MethodId parse_method(std::string_view name);
std::string_view method_name(MethodId method);

EnergyHartree asymptote_energy(NuclearCharge z);
EnergyHartree variational_energy(NuclearCharge z);
EnergyHartree perturbation_energy(NuclearCharge z);
EnergyHartree hylleraas_energy(NuclearCharge z);

// Effective screening sigma(z, p) = (1 + (1/4)(1 - Z0/z)^p) / 4, the quantity
// the interpolation actually interpolates; lives in [1/4, 5/16).
// Requires z >= Z0.
double screening_sigma(NuclearCharge z, InterpolationExponent p);

// -(z - sigma(z, p))^2. Requires z >= Z0; below the threshold the power term
// would be complex and the model says no such ion exists.
EnergyHartree interpolated_energy(NuclearCharge z, InterpolationExponent p = {});

// Uniform dispatch over the model family.
EnergyHartree evaluate(MethodId method, NuclearCharge z, InterpolationExponent p = {});

}  // namespace heseq
