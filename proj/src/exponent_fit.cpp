#include "heseq/exponent_fit.hpp"

#include <cmath>
#include <cstdio>

#include "heseq/corrections.hpp"
#include "heseq/optimize.hpp"

namespace heseq {

namespace {

constexpr double kSolveTol = 1e-10;
constexpr double kFitTol = 1e-8;
constexpr int kFitSeedPoints = 64;

double correction_offset(NuclearCharge z, const PhysicalConstants& pc) {
  return relativistic_correction(z, pc).value + qed_correction(z, pc).value;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

InterpolationExponent solve_p_for_ion(const IonRecord& record, bool with_corrections,
                                      const PhysicalConstants& pc) {
  if (record.z < 1)
    throw domain_error("solve_p_for_ion needs z >= 1, got z = " + std::to_string(record.z));
  const NuclearCharge z{static_cast<double>(record.z)};
  const double target =
      record.e_exp - (with_corrections ? correction_offset(z, pc) : 0.0);

  const auto base_at = [&](double p) {
    return interpolated_energy(z, InterpolationExponent{p}).value;
  };
  // Strictly decreasing in p, so the attainable band is [E(pmax), E(pmin)].
  const double e_hi = base_at(kFitPMin);
  const double e_lo = base_at(kFitPMax);
  if (target > e_hi || target < e_lo)
    throw no_solution_error("z = " + std::to_string(record.z) + ": target energy " + fmt(target) +
                            " Hartree lies outside the attainable interval [" + fmt(e_lo) + ", " +
                            fmt(e_hi) + "] for p in [" + fmt(kFitPMin) + ", " + fmt(kFitPMax) +
                            "]");

  const auto root =
      bisect_root([&](double p) { return base_at(p) - target; }, kFitPMin, kFitPMax, kSolveTol);
  return InterpolationExponent{root.x};
}

FitResult fit_global_p(const ReferenceSet& refs, bool with_corrections, ResidualWeighting weighting,
                       const PhysicalConstants& pc) {
  struct Usable {
    int z;
    double e_exp;
    double offset;  // correction to add on top of the base model
  };
  std::vector<Usable> rows;
  std::vector<std::string> excluded;
  for (const auto& rec : refs.records()) {
    try {
      const NuclearCharge z{static_cast<double>(rec.z)};
      const double offset = with_corrections ? correction_offset(z, pc) : 0.0;
      // Probe both interval ends so an out-of-domain record is caught here.
      (void)interpolated_energy(z, InterpolationExponent{kFitPMin});
      (void)interpolated_energy(z, InterpolationExponent{kFitPMax});
      rows.push_back({rec.z, rec.e_exp, offset});
    } catch (const error& e) {
      excluded.push_back("z=" + std::to_string(rec.z) + " (" + rec.symbol + "): " + e.what());
    }
  }
  if (rows.empty()) throw validation_error("exponent fit: no usable records");

  int evaluations = 0;
  const auto residual_at = [&](const Usable& row, double p) {
    const double model =
        interpolated_energy(NuclearCharge{static_cast<double>(row.z)}, InterpolationExponent{p})
            .value +
        row.offset;
    const double r = model - row.e_exp;
    return weighting == ResidualWeighting::relative ? r / row.e_exp : r;
  };
  const auto objective = [&](double p) {
    double sum = 0.0;
    for (const auto& row : rows) {  // z-sorted order keeps the sum bit-stable
      const double r = residual_at(row, p);
      sum += r * r;
    }
    ++evaluations;
    return sum;
  };

  // Coarse seed, then golden-section refinement on the bracketing cell pair.
  double best_p = kFitPMin;
  double best_f = objective(kFitPMin);
  const double step = (kFitPMax - kFitPMin) / (kFitSeedPoints - 1);
  for (int i = 1; i < kFitSeedPoints; ++i) {
    const double p = kFitPMin + step * i;
    const double f = objective(p);
    if (f < best_f) {
      best_f = f;
      best_p = p;
    }
  }
  const double lo = std::max(kFitPMin, best_p - step);
  const double hi = std::min(kFitPMax, best_p + step);
  const auto min = golden_section_min(objective, lo, hi, kFitTol);

  FitResult out{InterpolationExponent{min.x}};
  out.evaluations = evaluations;
  out.excluded = std::move(excluded);
  double sum = 0.0;
  for (const auto& row : rows) {
    const double r = residual_at(row, min.x);
    out.residuals.push_back({row.z, r});
    sum += r * r;
  }
  out.objective = sum;
  return out;
}

}  // namespace heseq
