#pragma once

#include <cmath>
#include <string>

#include "heseq/errors.hpp"

namespace heseq {

// Energy in atomic units (Hartree). Bound-state energies are negative.
struct EnergyHartree {
  double value = 0.0;
};

// Nuclear charge Z in units of the elementary charge. Continuous values are
// allowed (the threshold-charge analysis lets Z vary continuously); physical
// ions additionally have integer Z >= 1, which reference_data enforces.
class NuclearCharge {
public:
  explicit NuclearCharge(double z) : z_(z) {
    if (!std::isfinite(z) || z <= 0.0)
      throw domain_error("nuclear charge must be finite and > 0, got " + std::to_string(z));
  }

  double value() const noexcept { return z_; }

private:
  double z_;
};

// Ratio a > 0 fixing the two electron position vectors, r1 = -a r2.
// a = 0 is a limit of the model, not a member.
class CorrelationParameter {
public:
  explicit CorrelationParameter(double a) : a_(a) {
    if (!std::isfinite(a) || a <= 0.0)
      throw domain_error("correlation parameter must be finite and > 0, got " + std::to_string(a));
  }

  double value() const noexcept { return a_; }

private:
  double a_;
};

class PrincipalQuantumNumber {
public:
  explicit PrincipalQuantumNumber(int n) : n_(n) {
    if (n < 1)
      throw domain_error("principal quantum number must be >= 1, got " + std::to_string(n));
  }

  int value() const noexcept { return n_; }

private:
  int n_;
};

// Exponent p in the screening interpolation (1 - Z0/Z)^p. The guard range
// (0, 2] brackets the fit interval generously; the default reproduces the
// square-root form.
class InterpolationExponent {
public:
  static constexpr double kDefault = 0.5;

  InterpolationExponent() : p_(kDefault) {}

  explicit InterpolationExponent(double p) : p_(p) {
    if (!std::isfinite(p) || p <= 0.0 || p > 2.0)
      throw domain_error("interpolation exponent must lie in (0, 2], got " + std::to_string(p));
  }

  double value() const noexcept { return p_; }

private:
  double p_;
};

}  // namespace heseq
