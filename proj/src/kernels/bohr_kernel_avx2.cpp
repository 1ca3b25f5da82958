// AVX2 variant of the correlated-model energy kernel. Four lanes of doubles,
// same operation sequence as the scalar reference; the remainder falls back
// to the scalar kernel. Compiled with -mavx2 -ffp-contract=off only on
// x86-64; selection happens at runtime in bohr_kernel.cpp.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "heseq/kernels.hpp"

namespace heseq::kernels::detail {

bool avx2_supported() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

void bohr_energy_batch_avx2(const double* a, std::size_t count, double z, int n, double* out) {
  const double twon2 = 2.0 * static_cast<double>(n) * static_cast<double>(n);
  const __m256d vone = _mm256_set1_pd(1.0);
  const __m256d vz = _mm256_set1_pd(z);
  const __m256d vtwon2 = _mm256_set1_pd(twon2);
  const __m256d vsign = _mm256_set1_pd(-0.0);

  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d va = _mm256_loadu_pd(a + i);
    const __m256d opa = _mm256_add_pd(vone, va);
    const __m256d opa2 = _mm256_mul_pd(opa, opa);
    const __m256d asq = _mm256_mul_pd(va, va);
    const __m256d denom = _mm256_mul_pd(vtwon2, _mm256_add_pd(vone, asq));
    const __m256d pref = _mm256_div_pd(opa2, denom);
    const __m256d scr = _mm256_div_pd(va, opa2);
    const __m256d d = _mm256_sub_pd(vz, scr);
    const __m256d e = _mm256_mul_pd(pref, _mm256_mul_pd(d, d));
    _mm256_storeu_pd(out + i, _mm256_xor_pd(e, vsign));
  }
  if (i < count) bohr_energy_batch_scalar(a + i, count - i, z, n, out + i);
}

}  // namespace heseq::kernels::detail

#endif  // x86-64
