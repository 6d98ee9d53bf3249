#pragma once

// Contour-integral and Laplace-domain evaluation of the univariate form
//
//   t^{gamma-1} E(omega1 t^alpha, omega2 t^beta)
//     = (1 / 2 pi i) int_H e^{tz} z^{-gamma} (1 - omega1 z^{-alpha} - omega2 z^{-beta})^{-delta} dz,
//
// with H a Hankel contour around the negative real axis.

#include <optional>

#include "mlbiv/series.hpp"

namespace mlbiv {

enum class ContourShape { talbot, parabolic };

struct ContourSpec {
  int nodes = 64;                 // trapezoidal nodes of the coarse rule
  ContourShape shape = ContourShape::talbot;
  // Contour scale in the variable u = t z. When unset it is chosen
  // automatically (and grown until every node passes the branch check).
  std::optional<double> scale;
  double tol = 1e-10;             // allowed change under node doubling

  void validate() const;
};

/// Trapezoidal evaluation on `nodes` and `2 nodes` points of the same contour;
/// returns the fine value with err_estimate = max(|fine - coarse|, roundoff
/// floor). If the two rules disagree the node count keeps doubling, up to
/// 32 * nodes. shells_used reports the node count of the finest rule.
/// Throws BranchCutError when a node has |omega1 z^-alpha + omega2 z^-beta| >= 1
/// or the outer power base hits (-inf, 0]; ConvergenceError when the last
/// doubling still changes the value by more than tol * max(|value|, 1).
EvalResult eval_univariate_contour(const MLParams& p, double t, const ContourSpec& c = {});

/// s^{-gamma} (1 - omega1 s^{-alpha} - omega2 s^{-beta})^{-delta}, principal
/// branches. Throws DomainError for Re(s) <= 0 and BranchCutError when the
/// base lies on (-inf, 0].
Complex laplace_closed_form(const MLParams& p, Complex s);

struct LaplaceOptions {
  int geometric_panels = 24;   // refinement of the first panel toward t = 0
  double tail_tol = 1e-10;     // bound on e^{-sT} |f|(T)
  double quad_tol = 1e-8;      // relative agreement of the embedded rule
  EvalOptions series;
};

/// Forward transform int_0^T e^{-st} f(t) dt of the univariate form by
/// composite 20-point Gauss-Legendre on `steps` uniform panels. For Re(gamma) < 1 the
/// substitution t = v^{1/Re(gamma)} removes the endpoint singularity.
/// err_estimate is the difference to the 10-point rule on the same panels.
/// Throws DomainError when the tail bound e^{-sT} |f|(T) exceeds tail_tol,
/// ConvergenceError when the embedded rules disagree beyond quad_tol.
EvalResult laplace_numeric(const MLParams& p, double s, double T, int steps, const LaplaceOptions& opts = {});

}  // namespace mlbiv
