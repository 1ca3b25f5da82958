#pragma once

#include "heseq/types.hpp"

namespace heseq {

// Pinned configuration constants (CODATA 2018). Overridable through the CLI
// for sensitivity checks; every module reads the instance it is handed.
struct PhysicalConstants {
  double alpha = 7.2973525693e-3;       // fine-structure constant
  double hartree_ev = 27.211386245988;  // eV per Hartree

  void validate() const {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
      throw invalid_input_error("alpha must be finite and > 0");
    if (!(hartree_ev > 0.0) || !std::isfinite(hartree_ev))
      throw invalid_input_error("hartree_ev must be finite and > 0");
  }
};

EnergyHartree ev_to_hartree(double ev, const PhysicalConstants& pc = {});
double hartree_to_ev(EnergyHartree e, const PhysicalConstants& pc = {});

}  // namespace heseq
