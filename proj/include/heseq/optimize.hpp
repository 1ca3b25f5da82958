#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "heseq/errors.hpp"

namespace heseq {

struct ScalarMinimum {
  double x = 0.0;
  double fx = 0.0;
  int evaluations = 0;
};

struct ScalarRoot {
  double x = 0.0;
  int evaluations = 0;
};

// Golden-section minimization of a unimodal f on [lo, hi], absolute tolerance
// on x. Returns the midpoint of the final bracket with f evaluated there.
template <typename F>
ScalarMinimum golden_section_min(F&& f, double lo, double hi, double xtol, int max_iter = 400) {
  if (!(lo < hi)) throw internal_error("golden_section_min: empty interval");
  constexpr double invphi = 0.6180339887498949;  // 1/phi
  int evals = 0;
  double c = hi - invphi * (hi - lo);
  double d = lo + invphi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  evals += 2;
  for (int it = 0; it < max_iter && (hi - lo) > xtol; ++it) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - invphi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + invphi * (hi - lo);
      fd = f(d);
    }
    ++evals;
  }
  const double x = 0.5 * (lo + hi);
  return {x, f(x), evals + 1};
}

// Bisection for a root of f on [lo, hi]. The bracket must straddle zero.
template <typename F>
ScalarRoot bisect_root(F&& f, double lo, double hi, double xtol, int max_iter = 200) {
  double flo = f(lo);
  double fhi = f(hi);
  int evals = 2;
  if (flo == 0.0) return {lo, evals};
  if (fhi == 0.0) return {hi, evals};
  if (!(flo < 0.0) == !(fhi < 0.0))
    throw internal_error("bisect_root: bracket does not straddle zero");
  while ((hi - lo) > xtol && evals < max_iter + 2) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    ++evals;
    if (fmid == 0.0) return {mid, evals};
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return {0.5 * (lo + hi), evals};
}

// count points, log-spaced on [lo, hi], endpoints pinned exactly.
inline std::vector<double> log_spaced(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(lo < hi) || count < 2)
    throw validation_error("log_spaced: need 0 < lo < hi and count >= 2");
  std::vector<double> grid(static_cast<std::size_t>(count));
  const double tlo = std::log(lo);
  const double thi = std::log(hi);
  const double step = (thi - tlo) / static_cast<double>(count - 1);
  for (int i = 0; i < count; ++i)
    grid[static_cast<std::size_t>(i)] = std::exp(tlo + step * static_cast<double>(i));
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

}  // namespace heseq
