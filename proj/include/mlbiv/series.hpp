#pragma once

// Direct double-series evaluation of the bivariate Mittag-Leffler function
//
//   E^delta_{alpha,beta,gamma}(x, y) = sum_{k,l>=0} (delta)_{k+l} x^k y^l
//                                       / (Gamma(alpha k + beta l + gamma) k! l!)
//
// and of its univariate form t^{gamma-1} E(omega1 t^alpha, omega2 t^beta).
// The double sum is taken over anti-diagonal shells k + l = n.

#include <cstdint>
#include <span>
#include <vector>

#include "mlbiv/numerics.hpp"

namespace mlbiv {

/// Parameters of the two-variable function. Requires Re(alpha), Re(beta) > 0.
struct BivariateParams {
  Complex alpha{1.0};
  Complex beta{1.0};
  Complex gamma{1.0};
  Complex delta{1.0};

  void validate() const;
};

/// Full parameter tuple (alpha, beta, gamma, delta, omega1, omega2) of the
/// univariate form and of the associated operators.
struct MLParams {
  Complex alpha{1.0};
  Complex beta{1.0};
  Complex gamma{1.0};
  Complex delta{1.0};
  Complex omega1{1.0};
  Complex omega2{1.0};

  BivariateParams bivariate() const { return {alpha, beta, gamma, delta}; }
  void validate() const;
};

struct EvalOptions {
  double tol = 1e-12;     // relative truncation tolerance
  int max_shell = 500;    // shells n = 0 .. max_shell-1 are available
  int quiet_shells = 3;   // consecutive sub-tolerance shells before stopping

  void validate() const;
};

struct EvalResult {
  Complex value{0.0};
  double err_estimate = 0.0;  // magnitude of the last included shell
  int shells_used = 0;
  bool converged = false;
};

/// One term (delta)_{k+l} z1^k z2^l / (k! l!) of a shell, together with the
/// order alpha k + beta l + gamma that its Gamma factor or power carries.
struct SeriesTerm {
  int k = 0;
  int l = 0;
  LogMagnitude coefficient;
  Complex order{0.0};
};

/// Generates and caches the shells of the double series.
class ShellGenerator {
 public:
  ShellGenerator(const BivariateParams& p, Complex z1, Complex z2);

  /// Terms with k + l == n, ordered by increasing k.
  std::span<const SeriesTerm> shell(int n);

 private:
  void extend_to(int n);

  BivariateParams params_;
  LogMagnitude log_z1_;
  LogMagnitude log_z2_;
  std::vector<double> log_factorial_;
  std::vector<LogMagnitude> pochhammer_;  // (delta)_n
  std::vector<std::vector<SeriesTerm>> shells_;
};

/// Quiet-shell stopping rule shared by every shell summation.
class ShellMonitor {
 public:
  explicit ShellMonitor(const EvalOptions& opts) : opts_(opts) {}

  /// Records one shell. `past_poles` must be false while the shell still
  /// contains terms whose Gamma arguments have a non-positive real part, so
  /// that terms zeroed by 1/Gamma poles never count as convergence.
  /// Returns true once the series is considered converged.
  bool record(double shell_magnitude, double partial_magnitude, bool past_poles);

  double last_shell() const { return last_; }
  int shells() const { return shells_; }

 private:
  EvalOptions opts_;
  int quiet_ = 0;
  int shells_ = 0;
  double last_ = 0.0;
};

/// Cached evaluator of t^{gamma-1} E(omega1 t^alpha, omega2 t^beta) for many t
/// with the same parameters.
class UnivariateSeries {
 public:
  UnivariateSeries(const MLParams& p, const EvalOptions& opts = {});

  /// Throws DomainError for t < 0 or t == 0 with Re(gamma) < 1, and
  /// ConvergenceError when max_shell is exhausted.
  EvalResult operator()(double t);

  /// Same series with every term replaced by its modulus; an upper bound for
  /// |value| used for tail estimates.
  double majorant(double t);

  const MLParams& params() const { return params_; }

 private:
  struct Term {
    LogMagnitude coefficient;  // includes 1/Gamma(order)
    Complex exponent;          // order - 1
  };
  std::span<const Term> shell(int n);

  MLParams params_;
  EvalOptions opts_;
  ShellGenerator generator_;
  std::vector<std::vector<Term>> shells_;
  std::vector<double> min_order_re_;
};

EvalResult eval_bivariate(const BivariateParams& p, Complex x, Complex y, const EvalOptions& opts = {});

EvalResult eval_univariate(const MLParams& p, double t, const EvalOptions& opts = {});

/// Three-parameter (Prabhakar) function sum_n (delta)_n x^n / (n! Gamma(n alpha + gamma)).
EvalResult eval_prabhakar(Complex alpha, Complex gamma, Complex delta, Complex x, const EvalOptions& opts = {});

/// Bivariate Laguerre polynomial L_n^{alpha,beta,gamma}(x, y), the finite sum
/// obtained with delta = -n.
Complex laguerre_bivariate(int n, Complex alpha, Complex beta, Complex gamma, Complex x, Complex y);

struct GeneratingSum {
  Complex value{0.0};
  double last_term = 0.0;   // |(delta)_N / N! L_N t^N|
  bool diverging = false;   // the terms were still growing at N
};

/// Partial sum sum_{n=0}^{N} (delta)_n / n! L_n(x, y) t^n, |t| < 1.
GeneratingSum laguerre_generating_sum(int N, Complex delta, Complex alpha, Complex beta, Complex gamma, Complex x,
                                      Complex y, Complex t);

/// (1 - t)^{-delta} E^delta(-x t / (1 - t), -y t / (1 - t)), the limit of the
/// partial sums above.
EvalResult laguerre_generating_closed_form(Complex delta, Complex alpha, Complex beta, Complex gamma, Complex x,
                                           Complex y, Complex t, const EvalOptions& opts = {});

}  // namespace mlbiv
