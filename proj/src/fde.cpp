#include "mlbiv/fde.hpp"

#include <cmath>

#include "mlbiv/errors.hpp"

namespace mlbiv {

namespace {

MLParams solution_params(const FdeInstance& inst) {
  return {inst.alpha, inst.beta, inst.gamma, 1.0, inst.omega1, inst.omega2};
}

// t^{e} / Gamma(e + 1)
Complex power_term(Complex e, double t) {
  const Complex r = recip_gamma(e + 1.0);
  if (r == Complex(0.0)) return 0.0;
  return r * std::exp(e * std::log(t));
}

void check_grid(const std::vector<double>& t_grid) {
  for (double t : t_grid) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("FDE grid points must be positive");
  }
}

}  // namespace

Complex shifted_differint(const MLParams& p, Complex mu, double t, const EvalOptions& opts) {
  if (!(t > 0.0)) throw DomainError("shifted_differint requires t > 0");
  MLParams q = p;
  q.gamma = p.gamma - mu;
  return eval_univariate(q, t, opts).value;
}

std::vector<double> rl_fde_residual(const FdeInstance& inst, const EvalOptions& opts) {
  check_grid(inst.t_grid);
  const MLParams p = solution_params(inst);
  p.validate();
  const Complex ab = inst.alpha + inst.beta;
  std::vector<double> out;
  out.reserve(inst.t_grid.size());
  for (double t : inst.t_grid) {
    const Complex lhs = shifted_differint(p, ab, t, opts) - inst.omega2 * shifted_differint(p, inst.alpha, t, opts) -
                        inst.omega1 * shifted_differint(p, inst.beta, t, opts);
    out.push_back(std::abs(lhs - power_term(inst.gamma - ab - 1.0, t)));
  }
  return out;
}

CaputoReport caputo_fde_residual(const FdeInstance& inst, CaputoForcing forcing, const EvalOptions& opts) {
  check_grid(inst.t_grid);
  if (inst.gamma != Complex(1.0)) throw DomainError("Caputo form requires gamma = 1");
  const Complex ab = inst.alpha + inst.beta;
  if (!(ab.real() > 0.0 && ab.real() < 1.0)) throw DomainError("Caputo form requires 0 < Re(alpha + beta) < 1");
  const MLParams p = solution_params(inst);
  p.validate();

  CaputoReport report;
  report.initial_value = eval_univariate(p, 0.0, opts).value;
  const Complex u0 = report.initial_value;
  // C-D^nu u = RL-D^nu u - u(0) t^-nu / Gamma(1 - nu)
  auto caputo = [&](Complex nu, double t) { return shifted_differint(p, nu, t, opts) - u0 * power_term(-nu, t); };
  const Complex wa = forcing == CaputoForcing::derived ? inst.omega2 : inst.omega1;
  const Complex wb = forcing == CaputoForcing::derived ? inst.omega1 : inst.omega2;
  for (double t : inst.t_grid) {
    const Complex lhs = caputo(ab, t) - inst.omega2 * caputo(inst.alpha, t) - inst.omega1 * caputo(inst.beta, t);
    const Complex rhs = wa * power_term(-inst.alpha, t) + wb * power_term(-inst.beta, t);
    report.residuals.push_back(std::abs(lhs - rhs));
  }
  return report;
}

double classical_residual(Complex alpha, Complex omega, double t, const EvalOptions& opts) {
  const MLParams p{alpha, 1.0, 1.0, 1.0, omega, 0.0};
  const Complex u = eval_univariate(p, t, opts).value;
  const Complex lhs = shifted_differint(p, alpha, t, opts) - omega * u;
  return std::abs(lhs - power_term(-alpha, t));
}

}  // namespace mlbiv
