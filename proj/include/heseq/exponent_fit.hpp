#pragma once

#include <vector>

#include "heseq/constants.hpp"
#include "heseq/reference_data.hpp"
#include "heseq/types.hpp"

namespace heseq {

// Search interval for the interpolation exponent; generous bracket around the
// 0.5..0.56 regime while keeping the power term well defined.
inline constexpr double kFitPMin = 0.1;
inline constexpr double kFitPMax = 1.5;

enum class ResidualWeighting {
  relative,  // (E_model - e_exp) / e_exp  (default; matches the figure metric)
  absolute,  // E_model - e_exp, Hartree   (sensitivity alternative)
};

struct IonResidual {
  int z = 0;
  double residual = 0.0;
};

struct FitResult {
  InterpolationExponent p;
  double objective = 0.0;              // sum of squared residuals at p
  std::vector<IonResidual> residuals;  // sorted by z
  int evaluations = 0;                 // objective evaluations
  std::vector<std::string> excluded;   // records skipped with reasons
};

// The unique p in [0.1, 1.5] at which the (optionally corrected) interpolated
// energy equals the record's experimental energy. The energy is strictly
// decreasing in p for fixed z > Z0, so bisection applies; solved to 1e-10.
// Throws no_solution_error, naming the attainable interval, when the target
// lies outside the energy range spanned by p in [0.1, 1.5].
InterpolationExponent solve_p_for_ion(const IonRecord& record, bool with_corrections,
                                      const PhysicalConstants& pc = {});

// Least-squares fit of a single global exponent over the whole set,
// golden-section to 1e-8 on p, deterministic for fixed input. Records whose
// model evaluation fails are excluded and listed in the result.
FitResult fit_global_p(const ReferenceSet& refs, bool with_corrections,
                       ResidualWeighting weighting = ResidualWeighting::relative,
                       const PhysicalConstants& pc = {});

}  // namespace heseq
