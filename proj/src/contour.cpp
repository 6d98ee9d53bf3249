#include "mlbiv/contour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "mlbiv/detail/sum.hpp"
#include "mlbiv/errors.hpp"

namespace mlbiv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Weideman-Trefethen modified Talbot contour
// u(theta) = mu (a + b theta cot(c theta) + i d theta), theta in (-pi, pi).
constexpr double kTalbotA = -0.6122;
constexpr double kTalbotB = 0.5017;
constexpr double kTalbotC = 0.6407;
constexpr double kTalbotD = 0.2645;

constexpr double kAutoTalbotScale = 24.0;
constexpr double kAutoParabolicScale = 4.0;
constexpr double kAutoBranchRadius = 0.7;
constexpr double kScaleGrowth = 1.25;
constexpr int kMaxScaleSteps = 60;
constexpr int kMaxDoublings = 4;

struct Node {
  Complex u;   // t z
  Complex du;  // du / d(parameter) times the parameter step
};

// theta cot(c theta) and its derivative, with the removable point handled.
double theta_cot(double theta) {
  const double x = kTalbotC * theta;
  if (std::fabs(x) < 1e-4) return (1.0 - x * x / 3.0) / kTalbotC;
  return theta / std::tan(x);
}

double theta_cot_prime(double theta) {
  const double x = kTalbotC * theta;
  if (std::fabs(x) < 1e-3) return (-2.0 * x / 3.0 - 4.0 * x * x * x / 45.0);
  const double s = std::sin(x);
  return (0.5 * std::sin(2.0 * x) - x) / (s * s);
}

std::vector<Node> contour_nodes(ContourShape shape, double mu, int n) {
  std::vector<Node> nodes;
  nodes.reserve(n);
  if (shape == ContourShape::talbot) {
    const double step = 2.0 * kPi / n;
    for (int j = 0; j < n; ++j) {
      const double theta = -kPi + (j + 0.5) * step;
      const Complex u = mu * Complex(kTalbotA + kTalbotB * theta_cot(theta), kTalbotD * theta);
      const Complex du = mu * Complex(kTalbotB * theta_cot_prime(theta), kTalbotD) * step;
      nodes.push_back({u, du});
    }
  } else {
    // u(v) = mu (1 + i v)^2, truncated where e^{Re u} drops below e^{-37}.
    const double half = std::sqrt(1.0 + 37.0 / mu);
    const double step = 2.0 * half / n;
    for (int j = 0; j < n; ++j) {
      const double v = -half + (j + 0.5) * step;
      const Complex w(1.0, v);
      nodes.push_back({mu * w * w, 2.0 * mu * Complex(0.0, 1.0) * w * step});
    }
  }
  return nodes;
}

// |omega1 z^-alpha + omega2 z^-beta| at z = u / t.
double branch_radius(const MLParams& p, Complex log_z) {
  return std::abs(p.omega1 * std::exp(-p.alpha * log_z) + p.omega2 * std::exp(-p.beta * log_z));
}

double worst_branch_radius(const MLParams& p, double t, const std::vector<Node>& nodes) {
  double worst = 0.0;
  const double lt = std::log(t);
  for (const Node& node : nodes) worst = std::max(worst, branch_radius(p, std::log(node.u) - lt));
  return worst;
}

struct Rule {
  Complex value;
  double floor;  // roundoff floor from the largest summand
};

Rule trapezoid(const MLParams& p, double t, const std::vector<Node>& nodes) {
  const double lt = std::log(t);
  detail::CompensatedSum sum;
  double largest = 0.0;
  for (const Node& node : nodes) {
    const Complex log_z = std::log(node.u) - lt;
    const Complex w = p.omega1 * std::exp(-p.alpha * log_z) + p.omega2 * std::exp(-p.beta * log_z);
    if (std::abs(w) >= 1.0) {
      throw BranchCutError("contour node violates |omega1 z^-alpha + omega2 z^-beta| < 1");
    }
    Complex exponent = node.u - p.gamma * log_z;
    if (p.delta != Complex(0.0, 0.0)) exponent -= p.delta * std::log(1.0 - w);
    // dz = du / t
    const Complex term = std::exp(exponent) * node.du / t;
    largest = std::max(largest, std::abs(term));
    sum.add(term);
  }
  const Complex value = sum.value() / Complex(0.0, 2.0 * kPi);
  return {value, 16.0 * kEps * largest / (2.0 * kPi) * std::sqrt(static_cast<double>(nodes.size()))};
}

}  // namespace

void ContourSpec::validate() const {
  if (nodes < 8) throw DomainError("contour nodes must be >= 8");
  if (scale && !(*scale > 0.0)) throw DomainError("contour scale must be positive");
  if (!(tol > 0.0)) throw DomainError("contour tol must be positive");
}

EvalResult eval_univariate_contour(const MLParams& p, double t, const ContourSpec& c) {
  p.validate();
  c.validate();
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("contour evaluation requires t > 0");
  if (!(p.gamma.real() > 0.0)) throw DomainError("contour evaluation requires Re(gamma) > 0");

  double mu = c.scale.value_or(c.shape == ContourShape::talbot ? kAutoTalbotScale : kAutoParabolicScale);
  std::vector<Node> coarse = contour_nodes(c.shape, mu, c.nodes);
  std::vector<Node> fine = contour_nodes(c.shape, mu, 2 * c.nodes);
  if (!c.scale) {
    for (int step = 0; step < kMaxScaleSteps; ++step) {
      if (std::max(worst_branch_radius(p, t, coarse), worst_branch_radius(p, t, fine)) <= kAutoBranchRadius) break;
      mu *= kScaleGrowth;
      coarse = contour_nodes(c.shape, mu, c.nodes);
      fine = contour_nodes(c.shape, mu, 2 * c.nodes);
    }
  }

  // Node doubling, escalated a few times before giving up.
  Rule a = trapezoid(p, t, coarse);
  int n = 2 * c.nodes;
  for (int attempt = 0;; ++attempt) {
    const std::vector<Node> nodes = attempt == 0 ? fine : contour_nodes(c.shape, mu, n);
    if (attempt > 0 && worst_branch_radius(p, t, nodes) >= 1.0) {
      throw BranchCutError("contour node violates |omega1 z^-alpha + omega2 z^-beta| < 1");
    }
    const Rule b = trapezoid(p, t, nodes);
    const double change = std::abs(b.value - a.value);
    const double floor = std::max(a.floor, b.floor);
    if (change <= c.tol * std::max(std::abs(b.value), 1.0) || change <= floor) {
      return {b.value, std::max(change, floor), n, true};
    }
    if (attempt == kMaxDoublings) {
      throw ConvergenceError("contour quadrature: node doubling changed the value by " + std::to_string(change) +
                             " at " + std::to_string(n) + " nodes");
    }
    a = b;
    n *= 2;
  }
}

Complex laplace_closed_form(const MLParams& p, Complex s) {
  p.validate();
  if (!(s.real() > 0.0)) throw DomainError("laplace_closed_form requires Re(s) > 0");
  const Complex log_s = std::log(s);
  Complex log_value = -p.gamma * log_s;
  if (p.delta != Complex(0.0, 0.0)) {
    const Complex base = 1.0 - p.omega1 * std::exp(-p.alpha * log_s) - p.omega2 * std::exp(-p.beta * log_s);
    if (base.imag() == 0.0 && base.real() <= 0.0) {
      throw BranchCutError("1 - omega1 s^-alpha - omega2 s^-beta lies on the branch cut (-inf, 0]");
    }
    log_value -= p.delta * std::log(base);
  }
  return std::exp(log_value);
}

namespace {

template <int N>
struct GaussRule {
  std::vector<double> x;  // nodes on [-1, 1]
  std::vector<double> w;

  GaussRule() {
    using G = boost::math::quadrature::gauss<double, N>;
    const auto& a = G::abscissa();
    const auto& wt = G::weights();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0.0) {
        x.push_back(0.0);
        w.push_back(wt[i]);
      } else {
        x.push_back(a[i]);
        w.push_back(wt[i]);
        x.push_back(-a[i]);
        w.push_back(wt[i]);
      }
    }
  }
};

}  // namespace

EvalResult laplace_numeric(const MLParams& p, double s, double T, int steps, const LaplaceOptions& opts) {
  p.validate();
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("laplace_numeric requires real s > 0");
  if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("laplace_numeric requires a horizon T > 0");
  if (steps < 1) throw DomainError("laplace_numeric requires steps >= 1");
  if (!(p.gamma.real() > 0.0)) throw DomainError("laplace_numeric requires Re(gamma) > 0");

  UnivariateSeries f(p, opts.series);
  const double tail = std::exp(-s * T) * f.majorant(T);
  if (!(tail <= opts.tail_tol)) {
    throw DomainError("laplace_numeric: tail too heavy, e^{-sT}|f|(T) = " + std::to_string(tail) +
                      "; increase s or T");
  }

  // Integrate in v with t = v^{1/g}; g = 1 means no substitution.
  const double g = p.gamma.real() < 1.0 ? p.gamma.real() : 1.0;
  const double V = std::pow(T, g);
  auto integrand = [&](double v) -> Complex {
    if (v <= 0.0) return 0.0;
    const double t = g == 1.0 ? v : std::pow(v, 1.0 / g);
    const double jacobian = g == 1.0 ? 1.0 : std::pow(v, 1.0 / g - 1.0) / g;
    return std::exp(-s * t) * jacobian * f(t).value;
  };

  // Uniform panels on [0, V], the first one refined geometrically toward 0.
  std::vector<std::pair<double, double>> panels;
  const double H = V / steps;
  double right = H;
  for (int j = 0; j < opts.geometric_panels; ++j) {
    const double left = right * 0.15;
    panels.emplace_back(left, right);
    right = left;
  }
  panels.emplace_back(0.0, right);
  for (int j = 1; j < steps; ++j) panels.emplace_back(j * H, (j + 1) * H);

  static const GaussRule<20> fine;
  static const GaussRule<10> coarse;
  detail::CompensatedSum hi, lo;
  int evaluations = 0;
  for (const auto& [a, b] : panels) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (std::size_t i = 0; i < fine.x.size(); ++i) hi.add(half * fine.w[i] * integrand(mid + half * fine.x[i]));
    for (std::size_t i = 0; i < coarse.x.size(); ++i) {
      lo.add(half * coarse.w[i] * integrand(mid + half * coarse.x[i]));
    }
    evaluations += static_cast<int>(fine.x.size() + coarse.x.size());
  }
  const Complex value = hi.value();
  const double err = std::abs(value - lo.value());
  if (err > opts.quad_tol * std::max(std::abs(value), std::numeric_limits<double>::min())) {
    throw ConvergenceError("laplace_numeric: quadrature rules disagree by " + std::to_string(err) +
                           "; increase steps");
  }
  return {value, err + tail, evaluations, true};
}

}  // namespace mlbiv
