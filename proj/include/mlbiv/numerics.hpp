#pragma once

// Complex scalar building blocks: log-gamma, reciprocal gamma and Pochhammer
// symbols, with a log-magnitude representation that keeps series terms
// representable long after Gamma itself overflows.

#include <complex>
#include <cstdint>

namespace mlbiv {

using Complex = std::complex<double>;

/// Nonzero complex number stored as exp(log_abs) * exp(i * phase).
/// Zero is encoded by log_abs == -infinity.
struct LogMagnitude {
  double log_abs = 0.0;
  double phase = 0.0;  // principal value in (-pi, pi]

  static LogMagnitude zero();
  static LogMagnitude one() { return {}; }
  static LogMagnitude from_complex(Complex z);
  /// Builds from an unreduced (log_abs, phase) pair, wrapping the phase.
  static LogMagnitude from_log(Complex log_value);

  bool is_zero() const;
  /// True when to_complex() neither overflows nor flushes to zero.
  bool representable() const;
  Complex to_complex() const;

  LogMagnitude operator*(const LogMagnitude& other) const;
  LogMagnitude& operator*=(const LogMagnitude& other);
  LogMagnitude operator/(const LogMagnitude& other) const;
  LogMagnitude pow(std::int64_t n) const;
};

/// Reduces an angle to (-pi, pi].
double wrap_phase(double phase);

/// True when z is exactly 0, -1, -2, ...
bool is_nonpositive_integer(Complex z);

/// sin(pi z), accurate near the integers.
Complex sin_pi(Complex z);

/// exp(z) - 1 without cancellation for small |z|.
Complex expm1(Complex z);

/// Principal branch of log Gamma(z): the branch that is real on the positive
/// axis and continuous off the non-positive real axis.
/// Throws DomainError at the poles z = 0, -1, -2, ...
Complex log_gamma(Complex z);

/// 1/Gamma(z). Entire; returns exactly 0 at the non-positive integers.
Complex recip_gamma(Complex z);

/// 1/Gamma(z) in log-magnitude form (zero at the poles of Gamma).
LogMagnitude log_recip_gamma(Complex z);

/// Rising factorial (a)_m = a (a+1) ... (a+m-1), (a)_0 = 1. Exactly zero when
/// one of the factors vanishes.
LogMagnitude pochhammer(Complex a, std::uint64_t m);

}  // namespace mlbiv
