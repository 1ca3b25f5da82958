#pragma once

#include <cstddef>
#include <span>

namespace heseq::kernels {

// Batch evaluation of the correlated-model energy surface
//
//   E(a) = -((1+a)^2 / (2 n^2 (1+a^2))) * (z - a/(1+a)^2)^2
//
// over an array of correlation parameters at fixed z and n. This is the inner
// loop of the surface scans and of the minimizer's coarse-grid seed, so it is
// provided as a scalar reference kernel plus SIMD variants selected at
// runtime. All variants perform the same IEEE operation sequence per element
// and are equivalence-tested bit-for-bit against the scalar reference.
//
// Inputs are raw values; callers validate domains (a > 0, z > 0, n >= 1).
void bohr_energy_batch(std::span<const double> a, double z, int n, std::span<double> out);

// Name of the variant the dispatcher selected: "avx2", "neon" or "scalar".
const char* active_implementation();

namespace detail {

void bohr_energy_batch_scalar(const double* a, std::size_t count, double z, int n, double* out);

#if defined(__x86_64__) || defined(_M_X64)
bool avx2_supported();
void bohr_energy_batch_avx2(const double* a, std::size_t count, double z, int n, double* out);
#endif

#if defined(__aarch64__)
void bohr_energy_batch_neon(const double* a, std::size_t count, double z, int n, double* out);
#endif

}  // namespace detail

}  // namespace heseq::kernels
