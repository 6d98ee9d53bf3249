#include "mlbiv/numerics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "mlbiv/errors.hpp"

namespace mlbiv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // ln sqrt(2 pi)
constexpr double kLogPi = 1.14472988584940017414;

// B_{2k} / (2k (2k-1)), k = 1..10.
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

// Recurrence shift so that the asymptotic series is used only for Re(w) >= 10.
constexpr double kShiftThreshold = 10.0;

Complex stirling(Complex w) {
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex series = 0.0;
  for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) {
    series = series * inv2 + *it;
  }
  return (w - 0.5) * std::log(w) - w + kLogSqrt2Pi + series * inv;
}

int shift_count(Complex z) {
  return z.real() < kShiftThreshold ? static_cast<int>(std::ceil(kShiftThreshold - z.real())) : 0;
}

// log Gamma(z) for Re(z) >= 0.5 where only the value modulo 2 pi i matters:
// the shift factors are multiplied first and a single logarithm is taken.
Complex log_gamma_mod_2pi(Complex z) {
  const int n = shift_count(z);
  Complex product = 1.0;
  Complex log_product = 0.0;
  for (int k = 0; k < n; ++k) {
    product *= z + static_cast<double>(k);
    if (std::abs(product) > 1e150) {
      log_product += std::log(product);
      product = 1.0;
    }
  }
  log_product += std::log(product);
  return stirling(z + static_cast<double>(n)) - log_product;
}

// (n-1)! for z = n a positive integer up to 171, else 0. Exact through 23.
double small_factorial(Complex z) {
  if (z.imag() != 0.0 || !(z.real() >= 1.0 && z.real() <= 171.0) || z.real() != std::floor(z.real())) return 0.0;
  double f = 1.0;
  for (int k = 2; k < static_cast<int>(z.real()); ++k) f *= k;
  return f;
}

std::pair<double, double> sincos_pi(double x) {
  const double n = std::nearbyint(x);
  const double r = x - n;
  double s = std::sin(kPi * r);
  double c = std::cos(kPi * r);
  if (std::fmod(std::fabs(n), 2.0) == 1.0) {
    s = -s;
    c = -c;
  }
  return {s, c};
}

}  // namespace

double wrap_phase(double phase) {
  double r = std::remainder(phase, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

LogMagnitude LogMagnitude::zero() {
  return {-std::numeric_limits<double>::infinity(), 0.0};
}

LogMagnitude LogMagnitude::from_complex(Complex z) {
  if (z == Complex(0.0, 0.0)) return zero();
  return {std::log(std::abs(z)), wrap_phase(std::arg(z))};
}

LogMagnitude LogMagnitude::from_log(Complex log_value) {
  if (std::isinf(log_value.real()) && log_value.real() < 0) return zero();
  return {log_value.real(), wrap_phase(log_value.imag())};
}

bool LogMagnitude::is_zero() const {
  return std::isinf(log_abs) && log_abs < 0;
}

bool LogMagnitude::representable() const {
  return is_zero() || (log_abs < 709.0 && log_abs > -708.0);
}

Complex LogMagnitude::to_complex() const {
  if (is_zero()) return 0.0;
  // keep real values real
  if (phase == 0.0) return std::exp(log_abs);
  if (phase == kPi) return -std::exp(log_abs);
  return std::polar(std::exp(log_abs), phase);
}

LogMagnitude LogMagnitude::operator*(const LogMagnitude& other) const {
  if (is_zero() || other.is_zero()) return zero();
  if (phase == kPi && other.phase == kPi) return {log_abs + other.log_abs, 0.0};
  return {log_abs + other.log_abs, wrap_phase(phase + other.phase)};
}

LogMagnitude& LogMagnitude::operator*=(const LogMagnitude& other) {
  *this = *this * other;
  return *this;
}

LogMagnitude LogMagnitude::operator/(const LogMagnitude& other) const {
  if (other.is_zero()) throw DomainError("LogMagnitude: division by zero");
  if (is_zero()) return zero();
  return {log_abs - other.log_abs, wrap_phase(phase - other.phase)};
}

LogMagnitude LogMagnitude::pow(std::int64_t n) const {
  if (n == 0) return one();
  if (is_zero()) {
    if (n < 0) throw DomainError("LogMagnitude: negative power of zero");
    return zero();
  }
  const auto nd = static_cast<double>(n);
  if (phase == kPi) return {nd * log_abs, n % 2 == 0 ? 0.0 : kPi};
  return {nd * log_abs, wrap_phase(nd * phase)};
}

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::nearbyint(z.real());
}

Complex sin_pi(Complex z) {
  const auto [s, c] = sincos_pi(z.real());
  const double y = kPi * z.imag();
  return {s * std::cosh(y), c * std::sinh(y)};
}

Complex expm1(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  const double ex = std::expm1(x);
  const double half_sin = std::sin(0.5 * y);
  // e^x cos y - 1 = expm1(x) cos y - 2 sin^2(y/2)
  const double re = ex * std::cos(y) - 2.0 * half_sin * half_sin;
  const double im = (ex + 1.0) * std::sin(y);
  return {re, im};
}

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z)) {
    throw DomainError("log_gamma: pole at non-positive integer " + std::to_string(z.real()));
  }
  const int n = shift_count(z);
  Complex shift = 0.0;
  for (int k = 0; k < n; ++k) shift += std::log(z + static_cast<double>(k));
  return stirling(z + static_cast<double>(n)) - shift;
}

LogMagnitude log_recip_gamma(Complex z) {
  if (is_nonpositive_integer(z)) return LogMagnitude::zero();
  if (const double f = small_factorial(z); f > 0.0) return {-std::log(f), 0.0};
  if (z.real() >= 0.5) {
    return LogMagnitude::from_log(-log_gamma_mod_2pi(z));
  }
  // Reflection: 1/Gamma(z) = sin(pi z) Gamma(1 - z) / pi.
  const Complex lg = log_gamma_mod_2pi(1.0 - z);
  const LogMagnitude s = LogMagnitude::from_complex(sin_pi(z));
  return s * LogMagnitude::from_log(lg - kLogPi);
}

Complex recip_gamma(Complex z) {
  if (const double f = small_factorial(z); f > 0.0) return 1.0 / f;
  return log_recip_gamma(z).to_complex();
}

LogMagnitude pochhammer(Complex a, std::uint64_t m) {
  LogMagnitude acc = LogMagnitude::one();
  for (std::uint64_t j = 0; j < m; ++j) {
    const Complex factor = a + static_cast<double>(j);
    if (factor == Complex(0.0, 0.0)) return LogMagnitude::zero();
    acc *= LogMagnitude::from_complex(factor);
  }
  return acc;
}

}  // namespace mlbiv
