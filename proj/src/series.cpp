#include "mlbiv/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mlbiv/detail/sum.hpp"
#include "mlbiv/errors.hpp"

namespace mlbiv {

namespace {

constexpr double kOverflowLog = 709.0;

void check_order_params(Complex alpha, Complex beta) {
  if (!(alpha.real() > 0.0) || !(beta.real() > 0.0)) {
    throw DomainError("Re(alpha) and Re(beta) must be positive");
  }
}

void check_finite(Complex z, const char* name) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(name) + " must be finite");
  }
}

// Converts a term, refusing magnitudes beyond double range.
Complex term_value(const LogMagnitude& m) {
  if (m.is_zero()) return 0.0;
  if (m.log_abs > kOverflowLog) {
    throw ConvergenceError("series term overflows double precision; argument too large for direct summation");
  }
  if (m.log_abs < -745.0) return 0.0;
  return m.to_complex();
}

double term_abs(const LogMagnitude& m) {
  if (m.is_zero() || m.log_abs < -745.0) return 0.0;
  if (m.log_abs > kOverflowLog) {
    throw ConvergenceError("series term overflows double precision; argument too large for direct summation");
  }
  return std::exp(m.log_abs);
}

[[noreturn]] void fail_max_shell(const EvalOptions& opts, const char* what) {
  throw ConvergenceError(std::string(what) + ": no convergence within max_shell = " + std::to_string(opts.max_shell) +
                         " shells");
}

}  // namespace

void BivariateParams::validate() const {
  check_finite(alpha, "alpha");
  check_finite(beta, "beta");
  check_finite(gamma, "gamma");
  check_finite(delta, "delta");
  check_order_params(alpha, beta);
}

void MLParams::validate() const {
  bivariate().validate();
  check_finite(omega1, "omega1");
  check_finite(omega2, "omega2");
}

void EvalOptions::validate() const {
  if (!(tol > 0.0)) throw DomainError("tol must be positive");
  if (max_shell < 1) throw DomainError("max_shell must be >= 1");
  if (quiet_shells < 1) throw DomainError("quiet_shells must be >= 1");
}

// ---------------------------------------------------------------- shells

ShellGenerator::ShellGenerator(const BivariateParams& p, Complex z1, Complex z2)
    : params_(p), log_z1_(LogMagnitude::from_complex(z1)), log_z2_(LogMagnitude::from_complex(z2)) {
  p.validate();
  check_finite(z1, "x");
  check_finite(z2, "y");
  log_factorial_.push_back(0.0);
  pochhammer_.push_back(LogMagnitude::one());
}

void ShellGenerator::extend_to(int n) {
  while (static_cast<int>(shells_.size()) <= n) {
    const int m = static_cast<int>(shells_.size());
    if (m > 0) {
      log_factorial_.push_back(log_factorial_.back() + std::log(static_cast<double>(m)));
      const Complex factor = params_.delta + static_cast<double>(m - 1);
      pochhammer_.push_back(factor == Complex(0.0, 0.0) ? LogMagnitude::zero()
                                                        : pochhammer_.back() * LogMagnitude::from_complex(factor));
    }
    std::vector<SeriesTerm> shell;
    shell.reserve(m + 1);
    for (int k = 0; k <= m; ++k) {
      const int l = m - k;
      LogMagnitude c = pochhammer_[m] * log_z1_.pow(k) * log_z2_.pow(l);
      if (!c.is_zero()) c.log_abs -= log_factorial_[k] + log_factorial_[l];
      shell.push_back({k, l, c, params_.alpha * static_cast<double>(k) + params_.beta * static_cast<double>(l) +
                                    params_.gamma});
    }
    shells_.push_back(std::move(shell));
  }
}

std::span<const SeriesTerm> ShellGenerator::shell(int n) {
  extend_to(n);
  return shells_[n];
}

bool ShellMonitor::record(double shell_magnitude, double partial_magnitude, bool past_poles) {
  ++shells_;
  last_ = shell_magnitude;
  if (past_poles && shell_magnitude <= opts_.tol * std::max(partial_magnitude, 1.0)) {
    ++quiet_;
  } else {
    quiet_ = 0;
  }
  return quiet_ >= opts_.quiet_shells;
}

// ---------------------------------------------------------------- bivariate

EvalResult eval_bivariate(const BivariateParams& p, Complex x, Complex y, const EvalOptions& opts) {
  opts.validate();
  ShellGenerator gen(p, x, y);
  ShellMonitor monitor(opts);
  detail::CompensatedSum sum;
  for (int n = 0; n < opts.max_shell; ++n) {
    double magnitude = 0.0;
    double min_order = std::numeric_limits<double>::infinity();
    for (const SeriesTerm& term : gen.shell(n)) {
      min_order = std::min(min_order, term.order.real());
      if (term.coefficient.is_zero()) continue;
      const LogMagnitude full = term.coefficient * log_recip_gamma(term.order);
      magnitude += term_abs(full);
      sum.add(term_value(full));
    }
    if (monitor.record(magnitude, std::abs(sum.value()), min_order > 0.0)) {
      return {sum.value(), monitor.last_shell(), n + 1, true};
    }
  }
  fail_max_shell(opts, "eval_bivariate");
}

// ---------------------------------------------------------------- univariate

UnivariateSeries::UnivariateSeries(const MLParams& p, const EvalOptions& opts)
    : params_(p), opts_(opts), generator_(p.bivariate(), p.omega1, p.omega2) {
  p.validate();
  opts.validate();
}

std::span<const UnivariateSeries::Term> UnivariateSeries::shell(int n) {
  while (static_cast<int>(shells_.size()) <= n) {
    const int m = static_cast<int>(shells_.size());
    std::vector<Term> terms;
    double min_order = std::numeric_limits<double>::infinity();
    for (const SeriesTerm& term : generator_.shell(m)) {
      min_order = std::min(min_order, term.order.real());
      if (term.coefficient.is_zero()) continue;
      const LogMagnitude full = term.coefficient * log_recip_gamma(term.order);
      if (full.is_zero()) continue;
      terms.push_back({full, term.order - 1.0});
    }
    shells_.push_back(std::move(terms));
    min_order_re_.push_back(min_order);
  }
  return shells_[n];
}

EvalResult UnivariateSeries::operator()(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("t must be a finite nonnegative real");
  if (t == 0.0) {
    const Complex g = params_.gamma;
    if (g == Complex(1.0, 0.0)) return {1.0, 0.0, 1, true};
    if (g.real() > 1.0) return {0.0, 0.0, 1, true};
    throw DomainError("univariate form at t = 0 requires Re(gamma) > 1 or gamma = 1");
  }
  const double lt = std::log(t);
  ShellMonitor monitor(opts_);
  detail::CompensatedSum sum;
  for (int n = 0; n < opts_.max_shell; ++n) {
    double magnitude = 0.0;
    for (const Term& term : shell(n)) {
      const LogMagnitude power = LogMagnitude::from_log(term.exponent * lt);
      const LogMagnitude full = term.coefficient * power;
      magnitude += term_abs(full);
      sum.add(term_value(full));
    }
    if (monitor.record(magnitude, std::abs(sum.value()), min_order_re_[n] > 0.0)) {
      return {sum.value(), monitor.last_shell(), n + 1, true};
    }
  }
  fail_max_shell(opts_, "eval_univariate");
}

double UnivariateSeries::majorant(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("majorant requires t > 0");
  const double lt = std::log(t);
  ShellMonitor monitor(opts_);
  double total = 0.0;
  for (int n = 0; n < opts_.max_shell; ++n) {
    double magnitude = 0.0;
    for (const Term& term : shell(n)) {
      LogMagnitude full = term.coefficient;
      full.log_abs += term.exponent.real() * lt;
      magnitude += term_abs(full);
    }
    total += magnitude;
    if (monitor.record(magnitude, total, min_order_re_[n] > 0.0)) return total;
  }
  fail_max_shell(opts_, "majorant");
}

EvalResult eval_univariate(const MLParams& p, double t, const EvalOptions& opts) {
  UnivariateSeries series(p, opts);
  return series(t);
}

// ---------------------------------------------------------------- prabhakar

EvalResult eval_prabhakar(Complex alpha, Complex gamma, Complex delta, Complex x, const EvalOptions& opts) {
  opts.validate();
  check_order_params(alpha, 1.0);
  check_finite(gamma, "gamma");
  check_finite(delta, "delta");
  check_finite(x, "x");
  const LogMagnitude lx = LogMagnitude::from_complex(x);
  LogMagnitude coefficient = LogMagnitude::one();  // (delta)_n x^n / n!
  ShellMonitor monitor(opts);
  detail::CompensatedSum sum;
  for (int n = 0; n < opts.max_shell; ++n) {
    if (n > 0) {
      const Complex factor = (delta + static_cast<double>(n - 1)) / static_cast<double>(n);
      coefficient *= LogMagnitude::from_complex(factor) * lx;
    }
    const Complex order = alpha * static_cast<double>(n) + gamma;
    const LogMagnitude full = coefficient * log_recip_gamma(order);
    const double magnitude = term_abs(full);
    sum.add(term_value(full));
    if (monitor.record(magnitude, std::abs(sum.value()), order.real() > 0.0)) {
      return {sum.value(), monitor.last_shell(), n + 1, true};
    }
  }
  fail_max_shell(opts, "eval_prabhakar");
}

// ---------------------------------------------------------------- laguerre

Complex laguerre_bivariate(int n, Complex alpha, Complex beta, Complex gamma, Complex x, Complex y) {
  if (n < 0) throw DomainError("laguerre_bivariate: n must be nonnegative");
  ShellGenerator gen({alpha, beta, gamma, Complex(-static_cast<double>(n), 0.0)}, x, y);
  detail::CompensatedSum sum;
  for (int m = 0; m <= n; ++m) {
    for (const SeriesTerm& term : gen.shell(m)) {
      if (term.coefficient.is_zero()) continue;
      sum.add(term_value(term.coefficient * log_recip_gamma(term.order)));
    }
  }
  return sum.value();
}

GeneratingSum laguerre_generating_sum(int N, Complex delta, Complex alpha, Complex beta, Complex gamma, Complex x,
                                      Complex y, Complex t) {
  if (N < 0) throw DomainError("laguerre_generating_sum: N must be nonnegative");
  if (!(std::abs(t) < 1.0)) throw DomainError("laguerre_generating_sum: requires |t| < 1");
  check_order_params(alpha, beta);
  GeneratingSum out;
  detail::CompensatedSum sum;
  LogMagnitude coefficient = LogMagnitude::one();  // (delta)_n t^n / n!
  const LogMagnitude lt = LogMagnitude::from_complex(t);
  double previous = 0.0;
  for (int n = 0; n <= N; ++n) {
    if (n > 0) {
      const Complex factor = (delta + static_cast<double>(n - 1)) / static_cast<double>(n);
      coefficient *= LogMagnitude::from_complex(factor) * lt;
    }
    Complex term = 0.0;
    if (!coefficient.is_zero()) term = term_value(coefficient) * laguerre_bivariate(n, alpha, beta, gamma, x, y);
    sum.add(term);
    const double magnitude = std::abs(term);
    if (n == N) {
      out.last_term = magnitude;
      out.diverging = n > 0 && magnitude > previous && magnitude > 0.0;
    }
    previous = magnitude;
  }
  out.value = sum.value();
  return out;
}

EvalResult laguerre_generating_closed_form(Complex delta, Complex alpha, Complex beta, Complex gamma, Complex x,
                                           Complex y, Complex t, const EvalOptions& opts) {
  if (!(std::abs(t) < 1.0)) throw DomainError("laguerre_generating_closed_form: requires |t| < 1");
  const Complex ratio = t / (1.0 - t);
  EvalResult r = eval_bivariate({alpha, beta, gamma, delta}, -x * ratio, -y * ratio, opts);
  const Complex prefactor = std::exp(-delta * std::log(1.0 - t));
  r.value *= prefactor;
  r.err_estimate *= std::abs(prefactor);
  return r;
}

}  // namespace mlbiv
