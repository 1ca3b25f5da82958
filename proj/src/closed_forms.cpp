#include "heseq/closed_forms.hpp"

#include <cmath>

#include "heseq/bohr.hpp"

namespace heseq {

MethodId parse_method(std::string_view name) {
  if (name == "bohr") return MethodId::bohr;
  if (name == "asymptote") return MethodId::asymptote;
  if (name == "variational") return MethodId::variational;
  if (name == "perturbation") return MethodId::perturbation;
  if (name == "interpolation") return MethodId::interpolation;
  if (name == "hylleraas") return MethodId::hylleraas;
  throw invalid_input_error("unknown method '" + std::string(name) +
                            "' (expected bohr, asymptote, variational, perturbation, "
                            "interpolation or hylleraas)");
}

std::string_view method_name(MethodId method) {
  switch (method) {
    case MethodId::bohr: return "bohr";
    case MethodId::asymptote: return "asymptote";
    case MethodId::variational: return "variational";
    case MethodId::perturbation: return "perturbation";
    case MethodId::interpolation: return "interpolation";
    case MethodId::hylleraas: return "hylleraas";
  }
  throw internal_error("method_name: unhandled MethodId");
}

EnergyHartree asymptote_energy(NuclearCharge z) {
  const double d = z.value() - 0.25;
  return {-d * d};
}

EnergyHartree variational_energy(NuclearCharge z) {
  const double d = z.value() - 5.0 / 16.0;
  return {-d * d};
}

EnergyHartree perturbation_energy(NuclearCharge z) {
  const double zv = z.value();
  return {-zv * zv + 0.625 * zv};
}

// Constant term of the 50-term variational-perturbative series; the O(1/Z)
// remainder carries no published coefficient and is dropped.
EnergyHartree hylleraas_energy(NuclearCharge z) {
  const double zv = z.value();
  return {-zv * zv + 0.625 * zv - 0.157652};
}

double screening_sigma(NuclearCharge z, InterpolationExponent p) {
  const double z0 = critical_charge().value();
  const double zv = z.value();
  if (zv < z0)
    throw domain_error("screening interpolation needs z >= Z0 = 0.85355..., got z = " +
                       std::to_string(zv) + " below critical charge");
  return (1.0 + 0.25 * std::pow(1.0 - z0 / zv, p.value())) / 4.0;
}

EnergyHartree interpolated_energy(NuclearCharge z, InterpolationExponent p) {
  const double d = z.value() - screening_sigma(z, p);
  return {-d * d};
}

EnergyHartree evaluate(MethodId method, NuclearCharge z, InterpolationExponent p) {
  switch (method) {
    case MethodId::bohr:
      return bohr_energy(CorrelationParameter{1.0}, z, PrincipalQuantumNumber{1});
    case MethodId::asymptote: return asymptote_energy(z);
    case MethodId::variational: return variational_energy(z);
    case MethodId::perturbation: return perturbation_energy(z);
    case MethodId::interpolation: return interpolated_energy(z, p);
    case MethodId::hylleraas: return hylleraas_energy(z);
  }
  throw internal_error("evaluate: unhandled MethodId");
}

}  // namespace heseq
