#include <doctest.h>

#include <cmath>
#include <random>

#include "frozen_values.hpp"
#include "mlbiv/errors.hpp"
#include "mlbiv/series.hpp"
#include "oracle.hpp"

using mlbiv::BivariateParams;
using mlbiv::Complex;
using mlbiv::MLParams;

namespace {

double rel(Complex a, Complex b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

Complex from_oracle(oracle::Cl v) {
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

}  // namespace

TEST_CASE("bivariate reduces to the double exponential") {
  const auto r = mlbiv::eval_bivariate({1, 1, 1, 1}, 1.0, 1.0);
  CHECK(r.converged);
  CHECK(rel(r.value, std::exp(2.0)) < 1e-13);
  CHECK(r.err_estimate <= 1e-12 * std::abs(r.value));
}

TEST_CASE("bivariate trivial cases") {
  const BivariateParams p{0.8, 1.7, 2.5, 0.4};
  CHECK(rel(mlbiv::eval_bivariate(p, 0.0, 0.0).value, mlbiv::recip_gamma(2.5)) < 1e-15);
  const BivariateParams zero_delta{0.8, 1.7, 2.5, 0.0};
  CHECK(rel(mlbiv::eval_bivariate(zero_delta, 3.0, -2.0).value, mlbiv::recip_gamma(2.5)) < 1e-15);
}

TEST_CASE("bivariate frozen values") {
  CHECK(rel(mlbiv::eval_bivariate({0.8, 0.6, 1.2, 1.5}, 0.3, -0.4).value, frozen::bivariate_08_06_12_15_re) < 1e-13);
  const auto c = mlbiv::eval_bivariate({{0.9, 0.2}, 0.7, {1.1, -0.3}, {0.5, 0.5}}, {0.4, 0.1}, -0.3);
  CHECK(rel(c.value, {frozen::complex_bivariate_re, frozen::complex_bivariate_im}) < 1e-13);
  CHECK(rel(mlbiv::eval_bivariate({1.5, 1, 1, 1}, 2.0, 1.0).value, frozen::fig1d_at_2_1) < 1e-13);
}

TEST_CASE("bivariate symmetry under (alpha, x) <-> (beta, y)") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> order(0.3, 2.0), arg(-1.5, 1.5), g(0.2, 3.0), d(-1.0, 2.5);
  for (int i = 0; i < 20; ++i) {
    const double a = order(rng), b = order(rng), gg = g(rng), dd = d(rng);
    const Complex x(arg(rng), arg(rng)), y(arg(rng), 0.0);
    const auto lhs = mlbiv::eval_bivariate({a, b, gg, dd}, x, y).value;
    const auto rhs = mlbiv::eval_bivariate({b, a, gg, dd}, y, x).value;
    CHECK(rel(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("bivariate matches the rectangle oracle") {
  // |x| <= 1.2 keeps the alternating terms well conditioned in double precision
  for (double a : {0.5, 0.9, 1.3, 1.7, 2.0}) {
    for (double b : {0.5, 0.8, 1.0, 1.4, 1.9}) {
      for (double r : {0.1, 0.4, 0.7, 1.0, 1.2}) {
        const Complex x = r * Complex(0.6, 0.8);
        const Complex y = -r;
        const auto got = mlbiv::eval_bivariate({a, b, 1.3, 0.7}, x, y).value;
        const auto want = from_oracle(oracle::bivariate(a, b, 1.3L, 0.7L, oracle::Cl(x), oracle::Cl(y), 90));
        CHECK(rel(got, want) < 1e-10);
      }
    }
  }
}

TEST_CASE("bivariate with y = 0 is the Prabhakar function") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> order(0.3, 2.0), unit(-1.0, 1.0), g(0.3, 2.5), d(-1.5, 2.5);
  for (int i = 0; i < 20; ++i) {
    const Complex a(order(rng), 0.3 * unit(rng)), gg(g(rng), 0.5 * unit(rng)), dd(d(rng), unit(rng));
    Complex x(unit(rng), unit(rng));
    if (std::abs(x) > 1.0) x /= std::abs(x);
    const auto lhs = mlbiv::eval_bivariate({a, 1.1, gg, dd}, x, 0.0).value;
    const auto rhs = mlbiv::eval_prabhakar(a, gg, dd, x).value;
    CHECK(rel(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("prabhakar values") {
  CHECK(rel(mlbiv::eval_prabhakar(1, 1, 1, 1.0).value, std::exp(1.0)) < 1e-14);
  CHECK(rel(mlbiv::eval_prabhakar(0.7, 1.8, 0.0, 5.0).value, mlbiv::recip_gamma(1.8)) < 1e-15);
  CHECK(rel(mlbiv::eval_prabhakar(0.5, 1, 1, 0.25).value, frozen::prabhakar_05_1_1_025) < 1e-13);
  CHECK(rel(mlbiv::eval_prabhakar(0.5, 1, 1, 0.25).value, from_oracle(oracle::prabhakar(0.5L, 1, 1, 0.25L))) < 1e-13);
}

TEST_CASE("series failure modes") {
  mlbiv::EvalOptions opts;
  opts.max_shell = 5;
  CHECK_THROWS_AS(mlbiv::eval_bivariate({1, 1, 1, 1}, 3.0, 3.0, opts), mlbiv::ConvergenceError);
  CHECK_THROWS_AS(mlbiv::eval_bivariate({0.0, 1, 1, 1}, 0.1, 0.1), mlbiv::DomainError);
  CHECK_THROWS_AS(mlbiv::eval_bivariate({1, {-0.5, 2.0}, 1, 1}, 0.1, 0.1), mlbiv::DomainError);
  opts = {};
  opts.tol = 0.0;
  CHECK_THROWS_AS(mlbiv::eval_bivariate({1, 1, 1, 1}, 0.1, 0.1, opts), mlbiv::DomainError);
  CHECK_THROWS_AS(mlbiv::eval_bivariate({1, 1, 1, 1}, 200.0, 200.0), mlbiv::ConvergenceError);
}

TEST_CASE("quiet counting waits for pole-free shells") {
  // gamma = -3: shells with alpha k + beta l + gamma <= 0 contain 1/Gamma zeros.
  const BivariateParams p{1, 1, -3.0, 1};
  const auto got = mlbiv::eval_bivariate(p, 0.5, 0.25).value;
  const auto want = from_oracle(oracle::bivariate(1, 1, -3.0L, 1, 0.5L, 0.25L, 80));
  CHECK(rel(got, want) < 1e-12);
  CHECK(std::abs(got) > 0.0);
}

TEST_CASE("univariate form") {
  const MLParams ones{1, 1, 1, 1, 1, 1};
  CHECK(rel(mlbiv::eval_univariate(ones, 0.5).value, std::exp(1.0)) < 1e-13);
  CHECK(mlbiv::eval_univariate({0.4, 0.9, 1, 2.5, 3, -1}, 0.0).value == Complex(1.0));
  CHECK(mlbiv::eval_univariate({0.4, 0.9, 1.5, 2.5, 3, -1}, 0.0).value == Complex(0.0));
  CHECK_THROWS_AS(mlbiv::eval_univariate({0.4, 0.9, 0.5, 1, 1, 1}, 0.0), mlbiv::DomainError);
  CHECK_THROWS_AS(mlbiv::eval_univariate({0.4, 0.9, {1.0, 0.5}, 1, 1, 1}, 0.0), mlbiv::DomainError);
  CHECK_THROWS_AS(mlbiv::eval_univariate(ones, -0.1), mlbiv::DomainError);
  const double t = 0.37;
  const double g = 1.7;
  CHECK(rel(mlbiv::eval_univariate({0.4, 0.9, g, 0.0, 3, -1}, t).value,
            std::pow(t, g - 1.0) * mlbiv::recip_gamma(g)) < 1e-14);
  CHECK(rel(mlbiv::eval_univariate({0.7, 1.3, 1, 1, 0.5, -0.5}, 1.0).value, frozen::univariate_07_13_1_1_05_m05_t1) <
        1e-13);
}

TEST_CASE("univariate equals bivariate times the power") {
  const MLParams p{{0.8, 0.1}, 1.3, {1.4, -0.2}, 1.7, {0.4, 0.3}, -0.6};
  for (double t : {0.1, 0.5, 1.0, 2.5}) {
    const Complex lt = std::log(t);
    const Complex x = p.omega1 * std::exp(p.alpha * lt);
    const Complex y = p.omega2 * std::exp(p.beta * lt);
    const Complex want = std::exp((p.gamma - 1.0) * lt) * mlbiv::eval_bivariate(p.bivariate(), x, y).value;
    CHECK(rel(mlbiv::eval_univariate(p, t).value, want) < 1e-12);
  }
}

TEST_CASE("univariate majorant bounds the value") {
  mlbiv::UnivariateSeries f({0.6, 0.9, 1.2, 1.5, -0.8, 0.5});
  for (double t : {0.3, 1.0, 4.0}) CHECK(std::abs(f(t).value) <= f.majorant(t) * (1 + 1e-12));
}

TEST_CASE("laguerre polynomials") {
  CHECK(rel(mlbiv::laguerre_bivariate(0, 0.5, 0.7, 2.2, 3.0, 4.0), mlbiv::recip_gamma(2.2)) < 1e-15);
  const Complex x(0.3, -0.1), y(-0.8, 0.0);
  CHECK(rel(mlbiv::laguerre_bivariate(1, 1, 1, 1, x, y), 1.0 - x - y) < 1e-14);
  CHECK(rel(mlbiv::laguerre_bivariate(9, 0.5, 0.7, 2.2, 0.0, 0.0), mlbiv::recip_gamma(2.2)) < 1e-15);
  // L_2 with alpha = beta = gamma = 1: 1 - 2(x+y) + (x+y)^2 / 2
  const Complex s = x + y;
  CHECK(rel(mlbiv::laguerre_bivariate(2, 1, 1, 1, x, y), 1.0 - 2.0 * s + 0.5 * s * s) < 1e-14);
  for (int n : {0, 1, 4, 10, 25}) {
    const Complex a(0.7, 0.2), b = 1.4, g(0.9, -0.1);
    const Complex lhs = mlbiv::laguerre_bivariate(n, a, b, g, x, y);
    const Complex rhs = mlbiv::eval_bivariate({a, b, g, -static_cast<double>(n)}, x, y).value;
    CHECK(rel(lhs, rhs) < 1e-13);
  }
}

TEST_CASE("laguerre generating function") {
  const auto t0 = mlbiv::laguerre_generating_sum(10, 1.5, 0.7, 1.2, 2.0, 0.4, 0.3, 0.0);
  CHECK(rel(t0.value, mlbiv::recip_gamma(2.0)) < 1e-15);
  const auto d0 = mlbiv::laguerre_generating_sum(10, 0.0, 0.7, 1.2, 2.0, 0.4, 0.3, 0.5);
  CHECK(rel(d0.value, mlbiv::recip_gamma(2.0)) < 1e-15);

  const auto ones = mlbiv::laguerre_generating_sum(60, 1, 1, 1, 1, 0.2, 0.2, 0.5);
  CHECK(!ones.diverging);
  CHECK(rel(ones.value, frozen::laguerre_gf_ones_t05) < 1e-10);
  const auto closed = mlbiv::laguerre_generating_closed_form(1, 1, 1, 1, 0.2, 0.2, 0.5);
  CHECK(rel(closed.value, frozen::laguerre_gf_ones_t05) < 1e-13);

  const auto gen = mlbiv::laguerre_generating_sum(60, 1.5, 0.7, 1.3, 0.9, 0.3, -0.2, 0.6);
  CHECK(rel(gen.value, frozen::laguerre_gf_07_13_09_15_t06) < 1e-8);
  CHECK(rel(mlbiv::laguerre_generating_closed_form(1.5, 0.7, 1.3, 0.9, 0.3, -0.2, 0.6).value,
            frozen::laguerre_gf_07_13_09_15_t06) < 1e-13);

  CHECK_THROWS_AS(mlbiv::laguerre_generating_sum(5, 1, 1, 1, 1, 0.1, 0.1, 1.0), mlbiv::DomainError);
  // growing terms are flagged
  const auto grow = mlbiv::laguerre_generating_sum(3, 8.0, 1, 1, 1, 0.0, 0.0, 0.9);
  CHECK(grow.diverging);
}
