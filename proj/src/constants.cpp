#include "heseq/constants.hpp"

#include <cmath>

namespace heseq {

EnergyHartree ev_to_hartree(double ev, const PhysicalConstants& pc) {
  if (!std::isfinite(ev)) throw invalid_input_error("ev_to_hartree: input is not finite");
  pc.validate();
  return {ev / pc.hartree_ev};
}

double hartree_to_ev(EnergyHartree e, const PhysicalConstants& pc) {
  if (!std::isfinite(e.value)) throw invalid_input_error("hartree_to_ev: input is not finite");
  pc.validate();
  return e.value * pc.hartree_ev;
}

}  // namespace heseq
