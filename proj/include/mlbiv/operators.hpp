#pragma once

// Fractional integral operator with bivariate Mittag-Leffler kernel
//
//   (J f)(x) = int_c^x (x-t)^{gamma-1} E^delta_{alpha,beta,gamma}(omega1 (x-t)^alpha, omega2 (x-t)^beta) f(t) dt
//            = sum_{k,l} (delta)_{k+l} omega1^k omega2^l / (k! l!) I^{alpha k + beta l + gamma} f,
//
// its Riemann-Liouville and Caputo type inverses, and the underlying RL
// differintegrals on uniformly sampled functions.

#include <cstddef>
#include <vector>

#include "mlbiv/series.hpp"

namespace mlbiv {

/// f tabulated at c + j h, j = 0..M, h = (d - c) / M.
struct SampledFunction {
  double c = 0.0;
  double d = 1.0;
  std::vector<Complex> values;

  std::size_t intervals() const { return values.empty() ? 0 : values.size() - 1; }
  double step() const { return (d - c) / static_cast<double>(intervals()); }
  double node(std::size_t j) const { return c + static_cast<double>(j) * step(); }
  /// Throws GridError unless d > c, M >= 8 and all values are finite.
  void validate() const;
};

template <class F>
SampledFunction sample(F&& f, double c, double d, std::size_t M) {
  SampledFunction s{c, d, {}};
  s.values.resize(M + 1);
  for (std::size_t j = 0; j <= M; ++j) s.values[j] = f(c + (d - c) * static_cast<double>(j) / static_cast<double>(M));
  return s;
}

/// How derivative orders are discretized.
enum class DerivativeScheme {
  /// Analytic continuation of the product-integration weights to orders with
  /// Re(mu) in (-1, 0]: the exact RL derivative of the piecewise-linear
  /// interpolant. Higher orders peel off integer derivatives by finite
  /// differences.
  product,
  /// Literal d^k/dx^k of the (k - mu) integral by central differences.
  finite_difference,
};

struct OperatorRequest {
  MLParams params;
  double c = 0.0;
  EvalOptions truncation;
  DerivativeScheme scheme = DerivativeScheme::product;
};

struct OperatorResult {
  SampledFunction function;
  int shells_used = 0;
  double err_estimate = 0.0;         // bound on the omitted series tail (max norm)
  bool converged = false;
  bool origin_extrapolated = false;  // value at x = c replaced by linear extrapolation
};

/// D^mu [(x-c)^p / Gamma(p+1)] = coefficient * (x-c)^exponent.
struct PowerRule {
  Complex coefficient;  // 1 / Gamma(p - mu + 1), exactly 0 at poles
  Complex exponent;     // p - mu
};

/// Throws DomainError for Re(p) <= -1.
PowerRule rl_power_rule(double c, Complex mu, Complex p);

/// RL integral of order mu (Re(mu) > 0) by piecewise-linear product integration.
SampledFunction rl_integral_sampled(const SampledFunction& f, Complex mu);

/// RL derivative of order mu (Re(mu) >= 0).
/// Throws GridError when the finite-difference stencil does not fit the grid.
OperatorResult rl_derivative_sampled(const SampledFunction& f, Complex mu,
                                     DerivativeScheme scheme = DerivativeScheme::product);

/// Integral operator J by shell summation of RL integrals.
/// Throws GridError when req.c != f.c, ConvergenceError on max_shell.
OperatorResult ml_integral_apply(const OperatorRequest& req, const SampledFunction& f);

/// Cross-check route for J: product integration against the kernel itself,
/// using its first two antiderivatives (univariate form with gamma + 1, gamma + 2).
/// Loses about 2 log10(M) digits to differencing; intended for small grids.
OperatorResult ml_integral_direct(const OperatorRequest& req, const SampledFunction& f);

/// RL type derivative D = sum (-delta)_{k+l} omega1^k omega2^l / (k! l!) I^{alpha k + beta l - gamma}.
OperatorResult ml_derivative_rl(const OperatorRequest& req, const SampledFunction& f);

/// The same operator through D^{gamma+zeta} J^{-delta}_{alpha,beta,zeta} with Re(zeta) > 0.
OperatorResult ml_derivative_rl_zeta(const OperatorRequest& req, const SampledFunction& f, Complex zeta);

/// Caputo type derivative C f = J^{-delta}_{alpha,beta,n-gamma} f^{(n)}, n = floor(Re gamma) + 1.
OperatorResult ml_derivative_caputo(const OperatorRequest& req, const SampledFunction& f);

/// sum_{j<n} (x-c)^{j-gamma} E^{-delta}_{alpha,beta,j+1-gamma}(omega1 (x-c)^alpha, omega2 (x-c)^beta) f^{(j)}(c),
/// so that C f = D f - correction.
OperatorResult rl_caputo_correction(const OperatorRequest& req, const SampledFunction& f);

/// n = floor(Re gamma) + 1.
int caputo_order(Complex gamma);

/// L1 bound A with ||J f||_1 <= A ||f||_1 on (c, d).
double bound_constant(const OperatorRequest& req, double d);

/// k-th derivative of the samples, second order accurate (one-sided near the
/// ends). Throws GridError if the grid has fewer than k + 3 nodes.
std::vector<Complex> finite_difference(const SampledFunction& f, int k);

/// k-th derivative at x = c from the first k + 2 nodes, second order.
Complex derivative_at_start(const SampledFunction& f, int k);

}  // namespace mlbiv
