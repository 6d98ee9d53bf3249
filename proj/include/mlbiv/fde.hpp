#pragma once

// Residuals of the two-order fractional ODEs solved by the univariate form
// u(t) = t^{gamma-1} E^1_{alpha,beta,gamma}(omega1 t^alpha, omega2 t^beta).
// All derivatives are exact through the gamma-shift rule
//   D^mu [t^{gamma-1} E_gamma] = t^{gamma-mu-1} E_{gamma-mu},
// so no quadrature is involved.

#include <vector>

#include "mlbiv/series.hpp"

namespace mlbiv {

struct FdeInstance {
  Complex alpha{0.5};
  Complex beta{0.5};
  Complex gamma{1.0};
  Complex omega1{1.0};
  Complex omega2{1.0};
  std::vector<double> t_grid;
};

/// RL differintegral of order mu (lower limit 0) of the univariate form,
/// i.e. the univariate form with gamma replaced by gamma - mu. t > 0.
Complex shifted_differint(const MLParams& p, Complex mu, double t, const EvalOptions& opts = {});

/// |D^{a+b} u - omega2 D^a u - omega1 D^b u - t^{gamma-a-b-1} / Gamma(gamma-a-b)|
/// per node, with delta = 1.
std::vector<double> rl_fde_residual(const FdeInstance& inst, const EvalOptions& opts = {});

enum class CaputoForcing {
  /// omega2 t^-alpha / Gamma(1-alpha) + omega1 t^-beta / Gamma(1-beta): what
  /// the Caputo corrections of the RL equation actually produce.
  derived,
  /// omega1 t^-alpha / Gamma(1-alpha) + omega2 t^-beta / Gamma(1-beta): the
  /// weights swapped. Agrees with `derived` only when omega1 = omega2 or
  /// alpha = beta; kept for comparison.
  as_stated,
};

struct CaputoReport {
  std::vector<double> residuals;
  Complex initial_value{0.0};  // u(0) from the series at t = 0
};

/// Caputo form with gamma = delta = 1. Throws DomainError unless gamma == 1
/// and 0 < Re(alpha + beta) < 1.
CaputoReport caputo_fde_residual(const FdeInstance& inst, CaputoForcing forcing = CaputoForcing::derived,
                                 const EvalOptions& opts = {});

/// Single-order classical identity D^alpha E_alpha(omega t^alpha) - omega E_alpha(omega t^alpha)
/// = t^-alpha / Gamma(1 - alpha), evaluated through the bivariate form with omega2 = 0.
double classical_residual(Complex alpha, Complex omega, double t, const EvalOptions& opts = {});

}  // namespace mlbiv
