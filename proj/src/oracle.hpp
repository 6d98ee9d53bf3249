#pragma once

// Brute-force rectangle sums in long double, written independently of the
// shell evaluators. Slow; used by the verification suites and tests.

#include <cmath>
#include <complex>

namespace oracle {

using Cl = std::complex<long double>;

inline Cl rgamma(Cl z) {
  // 1/Gamma via Euler reflection and the Lanczos-free Stirling series on a
  // shifted argument, in long double.
  if (z.imag() == 0 && z.real() <= 0 && z.real() == std::nearbyint(z.real())) return 0;
  if (z.real() < 0.5L) {
    const long double pi = 3.14159265358979323846264338327950288L;
    return std::sin(pi * z) / pi / rgamma(1.0L - z);
  }
  Cl shift = 1;
  while (z.real() < 20) {
    shift *= z;
    z += 1.0L;
  }
  const Cl inv = 1.0L / z;
  const Cl inv2 = inv * inv;
  const Cl series =
      inv * (1.0L / 12 + inv2 * (-1.0L / 360 + inv2 * (1.0L / 1260 + inv2 * (-1.0L / 1680 + inv2 * (1.0L / 1188)))));
  const Cl lg = (z - 0.5L) * std::log(z) - z + 0.918938533204672741780329736406L + series;
  return shift * std::exp(-lg);
}

inline Cl poch(Cl a, int m) {
  Cl p = 1;
  for (int j = 0; j < m; ++j) p *= a + static_cast<long double>(j);
  return p;
}

inline Cl bivariate(Cl a, Cl b, Cl g, Cl d, Cl x, Cl y, int K = 120) {
  Cl sum = 0;
  for (int k = 0; k < K; ++k) {
    for (int l = 0; l < K; ++l) {
      Cl term = poch(d, k + l) * std::pow(x, k) * std::pow(y, l) *
                rgamma(a * static_cast<long double>(k) + b * static_cast<long double>(l) + g) /
                (std::tgamma(k + 1.0L) * std::tgamma(l + 1.0L));
      sum += term;
    }
  }
  return sum;
}

inline Cl prabhakar(Cl a, Cl g, Cl d, Cl x, int N = 400) {
  Cl sum = 0;
  Cl c = 1;  // (d)_n x^n / n!
  for (int n = 0; n < N; ++n) {
    if (n > 0) c *= (d + static_cast<long double>(n - 1)) * x / static_cast<long double>(n);
    sum += c * rgamma(a * static_cast<long double>(n) + g);
  }
  return sum;
}

/// sum_{k,l<K} |(delta)_{k+l}| |omega1|^k |omega2|^l / (k! l!) |1/Gamma(mu)| L^{Re mu} / Re mu,
/// mu = alpha k + beta l + gamma.
inline long double bound(Cl a, Cl b, Cl g, Cl d, Cl w1, Cl w2, long double L, int K = 80) {
  long double sum = 0;
  for (int k = 0; k < K; ++k) {
    for (int l = 0; l < K; ++l) {
      const Cl mu = a * static_cast<long double>(k) + b * static_cast<long double>(l) + g;
      const long double c = std::abs(poch(d, k + l)) * std::pow(std::abs(w1), k) * std::pow(std::abs(w2), l) /
                            (std::tgamma(k + 1.0L) * std::tgamma(l + 1.0L));
      if (c == 0) continue;
      sum += c * std::abs(rgamma(mu)) * std::pow(L, mu.real()) / mu.real();
    }
  }
  return sum;
}

}  // namespace oracle
