#include "mlbiv/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "mlbiv/errors.hpp"
#include "mlbiv/parallel.hpp"

namespace mlbiv {

namespace {

constexpr int kDirectWeightLimit = 8;  // below this index the weights are formed directly

double max_norm(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const Complex& z : v) m = std::max(m, std::abs(z));
  return m;
}

// Fornberg weights for the k-th derivative at x0 on integer offsets xs.
std::vector<double> fd_weights(double x0, const std::vector<double>& xs, int k) {
  const int n = static_cast<int>(xs.size());
  std::vector<std::vector<double>> c(n, std::vector<double>(k + 1, 0.0));
  double c1 = 1.0;
  double c4 = xs[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, k);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = xs[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = xs[i] - xs[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int s = mn; s >= 1; --s) c[i][s] = c1 * (s * c[i - 1][s - 1] - c5 * c[i - 1][s]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int s = mn; s >= 1; --s) c[j][s] = (c4 * c[j][s] - s * c[j][s - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = c[i][k];
  return w;
}

Complex apply_stencil(const std::vector<Complex>& v, int first, const std::vector<double>& w) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * v[first + static_cast<int>(i)];
  return s;
}

// Generalized binomial C(p, j) for j = 0..n.
std::vector<Complex> binomials(Complex p, int n) {
  std::vector<Complex> b(n + 1);
  b[0] = 1.0;
  for (int j = 0; j < n; ++j) b[j + 1] = b[j] * (p - static_cast<double>(j)) / static_cast<double>(j + 1);
  return b;
}

// Product-integration weights of order mu (Re mu > -1), p = mu + 1:
//   interior  a_m = (m+1)^p - 2 m^p + (m-1)^p      = m^p  * A_m
//   start     b_j = (j-1)^p - (j - p) j^mu          = j^mu * B_j
// The brackets A_m, B_j are formed by binomial series for large indices so
// that no cancellation occurs.
class WeightBrackets {
 public:
  explicit WeightBrackets(Complex mu) : mu_(mu), p_(mu + 1.0), binom_(binomials(mu + 1.0, 48)) {}

  Complex interior(std::size_t m) const {
    const double dm = static_cast<double>(m);
    if (m < kDirectWeightLimit) {
      const Complex up = std::exp(p_ * std::log1p(1.0 / dm));
      const Complex down = m == 1 ? Complex(0.0) : std::exp(p_ * std::log1p(-1.0 / dm));
      return up - 2.0 + down;
    }
    const double x2 = 1.0 / (dm * dm);
    Complex sum = 0.0;
    double power = 1.0;
    for (int k = 1; 2 * k < static_cast<int>(binom_.size()); ++k) {
      power *= x2;
      const Complex term = binom_[2 * k] * power;
      sum += term;
      if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    }
    return 2.0 * sum;
  }

  Complex start(std::size_t j) const {
    const double dj = static_cast<double>(j);
    if (j < kDirectWeightLimit) {
      const Complex lower = j == 1 ? Complex(0.0) : dj * std::exp(p_ * std::log1p(-1.0 / dj));
      return lower - (dj - p_);
    }
    const double x = 1.0 / dj;
    Complex sum = 0.0;
    double power = 1.0;  // x^{k-1}
    for (int k = 2; k < static_cast<int>(binom_.size()); ++k) {
      power *= x;
      const Complex term = (k % 2 == 0 ? 1.0 : -1.0) * binom_[k] * power;
      sum += term;
      if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }

  Complex mu() const { return mu_; }
  Complex p() const { return p_; }

 private:
  Complex mu_, p_;
  std::vector<Complex> binom_;
};

// Lower-triangular Toeplitz-plus-first-column operator
//   out_0 = origin g_0
//   out_j = self g_j + sum_{m=1}^{j-1} interior_m g_{j-m} + start_j g_0
struct Kernel {
  explicit Kernel(std::size_t M) : interior(M + 1, 0.0), start(M + 1, 0.0) {}

  Complex self = 0.0;
  Complex origin = 0.0;
  std::vector<Complex> interior;
  std::vector<Complex> start;
  bool used = false;

  // Adds coefficient * h^mu / Gamma(mu + 2) * weights(mu), Re(mu) > -1.
  void add(const LogMagnitude& coefficient, Complex mu, double h, const std::vector<double>& log_index) {
    if (coefficient.is_zero()) return;
    used = true;
    const LogMagnitude scale = coefficient * LogMagnitude::from_log(mu * std::log(h)) * log_recip_gamma(mu + 2.0);
    if (scale.is_zero()) return;
    const Complex log_scale(scale.log_abs, scale.phase);
    if (mu == Complex(0.0, 0.0)) {
      // identity: self weight only, also at x = c
      self += scale.to_complex();
      origin += scale.to_complex();
      return;
    }
    const std::size_t M = interior.size() - 1;
    if (scale.log_abs + std::max(0.0, mu.real() + 1.0) * log_index[M] < -745.0) return;  // underflows everywhere
    self += scale.to_complex();
    const WeightBrackets w(mu);
    parallel_for(M, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin + 1; i <= end; ++i) {
        const double li = log_index[i];
        interior[i] += std::exp(log_scale + w.p() * li) * w.interior(i);
        start[i] += std::exp(log_scale + w.mu() * li) * w.start(i);
      }
    });
  }

  std::vector<Complex> apply(const std::vector<Complex>& g) const {
    const std::size_t M = g.size() - 1;
    std::vector<Complex> out(M + 1);
    out[0] = origin * g[0];
    parallel_for(M, [&](std::size_t begin, std::size_t end) {
      for (std::size_t j = begin + 1; j <= end; ++j) {
        Complex s = self * g[j] + start[j] * g[0];
        for (std::size_t m = 1; m < j; ++m) s += interior[m] * g[j - m];
        out[j] = s;
      }
    }, 32);
    return out;
  }
};

// Accumulates a linear combination of RL differintegrals
//   sum_t coefficient_t * I^{mu_t} f
// and evaluates it on one grid.
class DifferintSum {
 public:
  DifferintSum(const SampledFunction& f, DerivativeScheme scheme)
      : f_(f), scheme_(scheme), M_(f.intervals()), h_(f.step()), log_index_(M_ + 1, 0.0) {
    for (std::size_t i = 1; i <= M_; ++i) log_index_[i] = std::log(static_cast<double>(i));
  }

  void add(const LogMagnitude& coefficient, Complex mu) {
    if (coefficient.is_zero()) return;
    if (mu.real() > 0.0) {
      kernel(product_, 0).add(coefficient, mu, h_, log_index_);
      return;
    }
    singular_origin_ = singular_origin_ || mu != Complex(0.0, 0.0);
    const Complex rho = -mu;
    if (scheme_ == DerivativeScheme::finite_difference) {
      // D^rho = d^k/dx^k I^{k - rho}, k = floor(Re rho) + 1
      const int k = static_cast<int>(std::floor(rho.real())) + 1;
      kernel(literal_, k).add(coefficient, static_cast<double>(k) - rho, h_, log_index_);
      return;
    }
    if (mu.real() > -1.0) {
      kernel(product_, 0).add(coefficient, mu, h_, log_index_);
      return;
    }
    // D^rho f = D^{rho-m} f^{(m)} + sum_{j<m} f^{(j)}(c) (x-c)^{j-rho} / Gamma(j-rho+1)
    const int m = static_cast<int>(std::floor(rho.real()));
    kernel(product_, m).add(coefficient, mu + static_cast<double>(m), h_, log_index_);
    for (int j = 0; j < m; ++j) powers_.push_back({coefficient, j, static_cast<double>(j) - rho});
  }

  std::vector<Complex> evaluate(bool& origin_extrapolated) const {
    std::vector<Complex> out(M_ + 1, 0.0);
    auto accumulate = [&](const std::vector<Complex>& v) {
      for (std::size_t j = 0; j <= M_; ++j) out[j] += v[j];
    };
    for (const auto& [m, k] : product_) {
      if (!k.used) continue;
      accumulate(k.apply(m == 0 ? f_.values : finite_difference(f_, m)));
    }
    for (const auto& [order, k] : literal_) {
      if (!k.used) continue;
      SampledFunction g{f_.c, f_.d, k.apply(f_.values)};
      accumulate(finite_difference(g, order));
    }
    for (const PowerTerm& term : powers_) {
      const Complex derivative = derivative_at_start(f_, term.j);
      if (derivative == Complex(0.0)) continue;
      const Complex scale = term.coefficient.to_complex() * derivative * recip_gamma(term.exponent + 1.0);
      if (scale == Complex(0.0)) continue;
      for (std::size_t i = 1; i <= M_; ++i) out[i] += scale * std::exp(term.exponent * std::log(i * h_));
    }
    origin_extrapolated = singular_origin_ && M_ >= 2;
    if (origin_extrapolated) out[0] = 2.0 * out[1] - out[2];
    return out;
  }

 private:
  struct PowerTerm {
    LogMagnitude coefficient;
    int j;
    Complex exponent;
  };

  Kernel& kernel(std::map<int, Kernel>& table, int key) {
    auto it = table.find(key);
    if (it == table.end()) it = table.emplace(key, Kernel(M_)).first;
    return it->second;
  }

  const SampledFunction& f_;
  DerivativeScheme scheme_;
  std::size_t M_;
  double h_;
  std::vector<double> log_index_;
  std::map<int, Kernel> product_;  // keyed by the integer derivative of f they act on
  std::map<int, Kernel> literal_;  // keyed by the differentiation order applied afterwards
  std::vector<PowerTerm> powers_;
  bool singular_origin_ = false;
};

// ||I^mu||_{inf} on an interval of length L.
double integral_norm_bound(Complex mu, double length) {
  const LogMagnitude r = log_recip_gamma(mu);
  if (r.is_zero()) return 0.0;
  return std::exp(r.log_abs + mu.real() * std::log(length)) / mu.real();
}

void check_grid(const OperatorRequest& req, const SampledFunction& f) {
  f.validate();
  if (req.c != f.c) {
    throw GridError("operator lower limit c = " + std::to_string(req.c) + " does not match the grid start " +
                    std::to_string(f.c));
  }
}

// sum_{k,l} (delta)_{k+l} omega1^k omega2^l / (k! l!) I^{alpha k + beta l + gamma} f
OperatorResult shell_operator(const MLParams& p, Complex gamma, Complex delta, const EvalOptions& opts,
                              const SampledFunction& f, DerivativeScheme scheme) {
  opts.validate();
  ShellGenerator gen({p.alpha, p.beta, gamma, delta}, p.omega1, p.omega2);
  DifferintSum sum(f, scheme);
  ShellMonitor monitor(opts);
  const double length = f.d - f.c;
  const double fnorm = max_norm(f.values);
  for (int n = 0; n < opts.max_shell; ++n) {
    double bound = 0.0;
    double min_order = std::numeric_limits<double>::infinity();
    for (const SeriesTerm& term : gen.shell(n)) {
      min_order = std::min(min_order, term.order.real());
      if (term.coefficient.is_zero()) continue;
      sum.add(term.coefficient, term.order);
      if (term.order.real() > 0.0) bound += std::exp(term.coefficient.log_abs) * integral_norm_bound(term.order, length);
    }
    if (monitor.record(bound * fnorm, fnorm, min_order > 0.0)) {
      OperatorResult r;
      r.function = {f.c, f.d, sum.evaluate(r.origin_extrapolated)};
      r.shells_used = n + 1;
      r.err_estimate = monitor.last_shell();
      r.converged = true;
      return r;
    }
  }
  throw ConvergenceError("operator series: no convergence within max_shell = " + std::to_string(opts.max_shell));
}

}  // namespace

void SampledFunction::validate() const {
  if (!(d > c) || !std::isfinite(c) || !std::isfinite(d)) throw GridError("sampled function needs c < d");
  if (values.size() < 9) throw GridError("sampled function needs M >= 8 intervals");
  for (const Complex& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw GridError("sampled function has non-finite values");
  }
}

std::vector<Complex> finite_difference(const SampledFunction& f, int k) {
  if (k < 0) throw DomainError("finite_difference: negative order");
  if (k == 0) return f.values;
  const int n = static_cast<int>(f.values.size());
  if (n < k + 3) {
    throw GridError("grid too coarse: order " + std::to_string(k) + " differences need at least " +
                    std::to_string(k + 3) + " nodes");
  }
  const int half = (k + 1) / 2;
  const int width = std::max(2 * half + 1, k + 2);
  const double scale = std::pow(f.step(), -k);
  std::vector<Complex> out(n);
  std::vector<double> offsets(2 * half + 1);
  for (int i = 0; i <= 2 * half; ++i) offsets[i] = i;
  const std::vector<double> central = fd_weights(half, offsets, k);
  std::vector<double> window(width);
  for (int i = 0; i < width; ++i) window[i] = i;
  for (int j = 0; j < n; ++j) {
    if (j >= half && j + half < n) {
      out[j] = scale * apply_stencil(f.values, j - half, central);
    } else {
      const int first = j < half ? 0 : n - width;
      out[j] = scale * apply_stencil(f.values, first, fd_weights(j - first, window, k));
    }
  }
  return out;
}

Complex derivative_at_start(const SampledFunction& f, int k) {
  if (k == 0) return f.values.at(0);
  if (static_cast<int>(f.values.size()) < k + 2) throw GridError("grid too coarse for the start derivative");
  std::vector<double> window(k + 2);
  for (int i = 0; i < k + 2; ++i) window[i] = i;
  return std::pow(f.step(), -k) * apply_stencil(f.values, 0, fd_weights(0.0, window, k));
}

PowerRule rl_power_rule(double, Complex mu, Complex p) {
  if (!(p.real() > -1.0)) throw DomainError("power rule requires Re(p) > -1");
  return {recip_gamma(p - mu + 1.0), p - mu};
}

SampledFunction rl_integral_sampled(const SampledFunction& f, Complex mu) {
  f.validate();
  if (!(mu.real() > 0.0)) throw DomainError("RL integral requires Re(mu) > 0");
  DifferintSum sum(f, DerivativeScheme::product);
  sum.add(LogMagnitude::one(), mu);
  bool extrapolated = false;
  return {f.c, f.d, sum.evaluate(extrapolated)};
}

OperatorResult rl_derivative_sampled(const SampledFunction& f, Complex mu, DerivativeScheme scheme) {
  f.validate();
  if (!(mu.real() >= 0.0)) throw DomainError("RL derivative requires Re(mu) >= 0");
  DifferintSum sum(f, scheme);
  sum.add(LogMagnitude::one(), -mu);
  OperatorResult r;
  r.function = {f.c, f.d, sum.evaluate(r.origin_extrapolated)};
  r.shells_used = 1;
  r.converged = true;
  return r;
}

OperatorResult ml_integral_apply(const OperatorRequest& req, const SampledFunction& f) {
  check_grid(req, f);
  req.params.validate();
  if (!(req.params.gamma.real() > 0.0)) throw DomainError("integral operator requires Re(gamma) > 0");
  return shell_operator(req.params, req.params.gamma, req.params.delta, req.truncation, f, req.scheme);
}

OperatorResult ml_integral_direct(const OperatorRequest& req, const SampledFunction& f) {
  check_grid(req, f);
  const MLParams& p = req.params;
  p.validate();
  if (!(p.gamma.real() > 0.0)) throw DomainError("integral operator requires Re(gamma) > 0");
  const std::size_t M = f.intervals();
  const double h = f.step();
  UnivariateSeries U1({p.alpha, p.beta, p.gamma + 1.0, p.delta, p.omega1, p.omega2}, req.truncation);
  UnivariateSeries U2({p.alpha, p.beta, p.gamma + 2.0, p.delta, p.omega1, p.omega2}, req.truncation);
  std::vector<Complex> u1(M + 1), u2(M + 1);
  for (std::size_t m = 0; m <= M; ++m) {
    u1[m] = U1(m * h).value;
    u2[m] = U2(m * h).value;
  }
  Kernel k(M);
  k.used = true;
  k.self = u2[1] / h;
  for (std::size_t m = 1; m < M; ++m) k.interior[m] = (u2[m + 1] - 2.0 * u2[m] + u2[m - 1]) / h;
  for (std::size_t j = 1; j <= M; ++j) k.start[j] = u1[j] - (u2[j] - u2[j - 1]) / h;
  OperatorResult r;
  r.function = {f.c, f.d, k.apply(f.values)};
  r.shells_used = 0;
  r.converged = true;
  return r;
}

OperatorResult ml_derivative_rl(const OperatorRequest& req, const SampledFunction& f) {
  check_grid(req, f);
  req.params.validate();
  if (!(req.params.gamma.real() >= 0.0)) throw DomainError("derivative operator requires Re(gamma) >= 0");
  return shell_operator(req.params, -req.params.gamma, -req.params.delta, req.truncation, f, req.scheme);
}

OperatorResult ml_derivative_rl_zeta(const OperatorRequest& req, const SampledFunction& f, Complex zeta) {
  check_grid(req, f);
  req.params.validate();
  if (!(req.params.gamma.real() >= 0.0)) throw DomainError("derivative operator requires Re(gamma) >= 0");
  if (!(zeta.real() > 0.0)) throw DomainError("zeta route requires Re(zeta) > 0");
  const OperatorResult inner =
      shell_operator(req.params, zeta, -req.params.delta, req.truncation, f, DerivativeScheme::product);
  OperatorResult outer = rl_derivative_sampled(inner.function, req.params.gamma + zeta, req.scheme);
  outer.shells_used = inner.shells_used;
  outer.err_estimate = inner.err_estimate;
  return outer;
}

int caputo_order(Complex gamma) {
  return static_cast<int>(std::floor(gamma.real())) + 1;
}

OperatorResult ml_derivative_caputo(const OperatorRequest& req, const SampledFunction& f) {
  check_grid(req, f);
  req.params.validate();
  if (!(req.params.gamma.real() >= 0.0)) throw DomainError("Caputo operator requires Re(gamma) >= 0");
  const int n = caputo_order(req.params.gamma);
  const SampledFunction dn{f.c, f.d, finite_difference(f, n)};
  return shell_operator(req.params, static_cast<double>(n) - req.params.gamma, -req.params.delta, req.truncation,
                        dn, DerivativeScheme::product);
}

OperatorResult rl_caputo_correction(const OperatorRequest& req, const SampledFunction& f) {
  check_grid(req, f);
  const MLParams& p = req.params;
  p.validate();
  if (!(p.gamma.real() >= 0.0)) throw DomainError("Caputo correction requires Re(gamma) >= 0");
  const int n = caputo_order(p.gamma);
  const std::size_t M = f.intervals();
  const double h = f.step();
  OperatorResult r;
  r.function = {f.c, f.d, std::vector<Complex>(M + 1, 0.0)};
  bool origin_ok = true;
  int shells = 0;
  for (int j = 0; j < n; ++j) {
    const Complex dj = derivative_at_start(f, j);
    if (dj == Complex(0.0)) continue;
    UnivariateSeries u({p.alpha, p.beta, static_cast<double>(j + 1) - p.gamma, -p.delta, p.omega1, p.omega2},
                       req.truncation);
    for (std::size_t i = 1; i <= M; ++i) {
      const EvalResult e = u(i * h);
      r.function.values[i] += dj * e.value;
      shells = std::max(shells, e.shells_used);
      r.err_estimate = std::max(r.err_estimate, std::abs(dj) * e.err_estimate);
    }
    try {
      r.function.values[0] += dj * u(0.0).value;
    } catch (const DomainError&) {
      origin_ok = false;
    }
  }
  if (!origin_ok) {
    r.function.values[0] = 2.0 * r.function.values[1] - r.function.values[2];
    r.origin_extrapolated = true;
  }
  r.shells_used = shells;
  r.converged = true;
  return r;
}

double bound_constant(const OperatorRequest& req, double d) {
  const MLParams& p = req.params;
  p.validate();
  req.truncation.validate();
  if (!(p.gamma.real() > 0.0)) throw DomainError("bound constant requires Re(gamma) > 0");
  if (!(d > req.c)) throw DomainError("bound constant requires d > c");
  const double log_length = std::log(d - req.c);
  ShellGenerator gen(p.bivariate(), p.omega1, p.omega2);
  ShellMonitor monitor(req.truncation);
  double total = 0.0;
  for (int n = 0; n < req.truncation.max_shell; ++n) {
    double shell = 0.0;
    for (const SeriesTerm& term : gen.shell(n)) {
      if (term.coefficient.is_zero()) continue;
      const LogMagnitude r = log_recip_gamma(term.order);
      if (r.is_zero()) continue;
      const double re = term.order.real();
      shell += std::exp(term.coefficient.log_abs + r.log_abs + re * log_length) / re;
    }
    total += shell;
    if (monitor.record(shell, total, true)) return total;
  }
  throw ConvergenceError("bound constant: no convergence within max_shell = " +
                         std::to_string(req.truncation.max_shell));
}

}  // namespace mlbiv
