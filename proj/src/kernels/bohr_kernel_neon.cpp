// NEON variant of the correlated-model energy kernel, two lanes of doubles.
// NEON is baseline on aarch64, so no runtime feature probe is needed there.

#if defined(__aarch64__)

#include <arm_neon.h>

#include "heseq/kernels.hpp"

namespace heseq::kernels::detail {

void bohr_energy_batch_neon(const double* a, std::size_t count, double z, int n, double* out) {
  const double twon2 = 2.0 * static_cast<double>(n) * static_cast<double>(n);
  const float64x2_t vone = vdupq_n_f64(1.0);
  const float64x2_t vz = vdupq_n_f64(z);
  const float64x2_t vtwon2 = vdupq_n_f64(twon2);

  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const float64x2_t va = vld1q_f64(a + i);
    const float64x2_t opa = vaddq_f64(vone, va);
    const float64x2_t opa2 = vmulq_f64(opa, opa);
    const float64x2_t asq = vmulq_f64(va, va);
    const float64x2_t denom = vmulq_f64(vtwon2, vaddq_f64(vone, asq));
    const float64x2_t pref = vdivq_f64(opa2, denom);
    const float64x2_t scr = vdivq_f64(va, opa2);
    const float64x2_t d = vsubq_f64(vz, scr);
    const float64x2_t e = vmulq_f64(pref, vmulq_f64(d, d));
    vst1q_f64(out + i, vnegq_f64(e));
  }
  if (i < count) bohr_energy_batch_scalar(a + i, count - i, z, n, out + i);
}

}  // namespace heseq::kernels::detail

#endif  // aarch64
