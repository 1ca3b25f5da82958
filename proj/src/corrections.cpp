#include "heseq/corrections.hpp"

#include <cmath>
#include <numbers>

namespace heseq {

// Transcribed coefficient block for the two correction formulas. Kept in one
// place so a transcription slip is fixable once.
namespace {
constexpr double kRelLinear = 3.606;
constexpr double kRelConst = 3.29;
constexpr double kRelInverse = 0.05;
constexpr double kQedConst = 3.745;
constexpr double kQedInv = 5.97;
constexpr double kQedInvLog = 1.31;
constexpr double kQedInv2 = 3.08;
constexpr double kQedInv2Log = 0.28;
}  // namespace

EnergyHartree relativistic_correction(NuclearCharge z, const PhysicalConstants& pc) {
  const double zv = z.value();
  const double a2 = pc.alpha * pc.alpha;
  const double bracket = zv * zv - kRelLinear * zv + kRelConst + kRelInverse / zv;
  return {-(a2 / 8.0) * zv * zv * bracket};
}

EnergyHartree qed_correction(NuclearCharge z, const PhysicalConstants& pc) {
  const double zv = z.value();
  const double lz = std::log(zv);
  const double a3 = pc.alpha * pc.alpha * pc.alpha;
  const double bracket = (kQedConst - lz) - (kQedInv - kQedInvLog * lz) / zv +
                         (kQedInv2 - kQedInv2Log * lz) / (zv * zv);
  return {16.0 * zv * zv * zv * zv * a3 / (6.0 * std::numbers::pi) * bracket};
}

EnergyBreakdown corrected_energy(MethodId method, NuclearCharge z, InterpolationExponent p,
                                 const PhysicalConstants& pc) {
  EnergyBreakdown out;
  out.base = evaluate(method, z, p);
  out.relativistic = relativistic_correction(z, pc);
  out.qed = qed_correction(z, pc);
  out.total = {out.base.value + out.relativistic.value + out.qed.value};
  out.method = method;
  out.z = z.value();
  return out;
}

}  // namespace heseq
