#include "heseq/kernels.hpp"

#include "heseq/errors.hpp"

namespace heseq::kernels {

namespace detail {

void bohr_energy_batch_scalar(const double* a, std::size_t count, double z, int n, double* out) {
  const double twon2 = 2.0 * static_cast<double>(n) * static_cast<double>(n);
  for (std::size_t i = 0; i < count; ++i) {
    const double ai = a[i];
    const double opa = 1.0 + ai;
    const double opa2 = opa * opa;
    const double asq = ai * ai;
    const double denom = twon2 * (1.0 + asq);
    const double pref = opa2 / denom;
    const double scr = ai / opa2;
    const double d = z - scr;
    out[i] = -(pref * (d * d));
  }
}

}  // namespace detail

namespace {

using BatchFn = void (*)(const double*, std::size_t, double, int, double*);

struct Dispatch {
  BatchFn fn;
  const char* name;
};

Dispatch select() {
#if defined(__x86_64__) || defined(_M_X64)
  if (detail::avx2_supported()) return {detail::bohr_energy_batch_avx2, "avx2"};
#endif
#if defined(__aarch64__)
  return {detail::bohr_energy_batch_neon, "neon"};
#endif
  return {detail::bohr_energy_batch_scalar, "scalar"};
}

const Dispatch& dispatch() {
  static const Dispatch d = select();
  return d;
}

}  // namespace

void bohr_energy_batch(std::span<const double> a, double z, int n, std::span<double> out) {
  if (out.size() != a.size())
    throw internal_error("bohr_energy_batch: output span size mismatch");
  dispatch().fn(a.data(), a.size(), z, n, out.data());
}

const char* active_implementation() { return dispatch().name; }

}  // namespace heseq::kernels
