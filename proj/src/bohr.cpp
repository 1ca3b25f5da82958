#include "heseq/bohr.hpp"

#include <cmath>

#include "heseq/kernels.hpp"
#include "heseq/optimize.hpp"

namespace heseq {

namespace {

constexpr double kSearchLo = 1e-3;
constexpr double kSearchHi = 1e3;
constexpr int kSeedPoints = 256;
constexpr double kLogATol = 1e-10;

}  // namespace

EnergyHartree bohr_energy(CorrelationParameter a, NuclearCharge z, PrincipalQuantumNumber n) {
  double e;
  const double av = a.value();
  kernels::detail::bohr_energy_batch_scalar(&av, 1, z.value(), n.value(), &e);
  return {e};
}

MinimizationResult optimal_correlation(NuclearCharge z, PrincipalQuantumNumber n) {
  const std::vector<double> grid = log_spaced(kSearchLo, kSearchHi, kSeedPoints);
  std::vector<double> energy(grid.size());
  kernels::bohr_energy_batch(grid, z.value(), n.value(), energy);

  std::size_t best = 0;
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (energy[i] < energy[best]) best = i;

  // Edge hit: the minimum over the interval sits on its boundary (small-z
  // regime). Report the boundary point rather than refine into a wall.
  if (best == 0 || best + 1 == grid.size()) {
    const CorrelationParameter a_star{grid[best]};
    return {a_star, bohr_energy(a_star, z, n), kSeedPoints, true};
  }

  const double tlo = std::log(grid[best - 1]);
  const double thi = std::log(grid[best + 1]);
  const auto min = golden_section_min(
      [&](double t) {
        double e;
        const double a = std::exp(t);
        kernels::detail::bohr_energy_batch_scalar(&a, 1, z.value(), n.value(), &e);
        return e;
      },
      tlo, thi, kLogATol);

  const CorrelationParameter a_star{std::exp(min.x)};
  return {a_star, bohr_energy(a_star, z, n), kSeedPoints + min.evaluations, false};
}

EnergyHartree ionization_energy(CorrelationParameter a, NuclearCharge z) {
  const double zv = z.value();
  return {-0.5 * zv * zv - bohr_energy(a, z, PrincipalQuantumNumber{1}).value};
}

NuclearCharge critical_charge() { return NuclearCharge{0.5 + std::sqrt(0.125)}; }

NuclearCharge critical_charge_numeric() {
  const CorrelationParameter a1{1.0};
  const auto root = bisect_root(
      [&](double zv) { return ionization_energy(a1, NuclearCharge{zv}).value; }, 0.5, 1.5, 1e-10);
  return NuclearCharge{root.x};
}

EnergyHartree hydrogenic_energy(NuclearCharge z, PrincipalQuantumNumber n) {
  const double zv = z.value();
  const double nv = static_cast<double>(n.value());
  return {-zv * zv / (2.0 * nv * nv)};
}

}  // namespace heseq
