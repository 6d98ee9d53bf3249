#include <doctest.h>

#include <cmath>

#include "frozen_values.hpp"
#include "mlbiv/contour.hpp"
#include "mlbiv/errors.hpp"

using mlbiv::Complex;
using mlbiv::MLParams;

namespace {

double rel(Complex a, Complex b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

}  // namespace

TEST_CASE("contour reproduces the exponential") {
  const auto r = mlbiv::eval_univariate_contour({1, 1, 1, 1, 1, 1}, 0.5);
  CHECK(rel(r.value, std::exp(1.0)) < 1e-10);
}

TEST_CASE("contour residue case") {
  const auto r = mlbiv::eval_univariate_contour({0.7, 1.2, 1, 0, 1, 1}, 1.0);
  CHECK(std::abs(r.value - 1.0) < 1e-11);
}

TEST_CASE("contour agrees with the series") {
  const MLParams p{0.7, 1.3, 1.0, 1.0, 0.5, -0.5};
  const auto r = mlbiv::eval_univariate_contour(p, 1.0);
  CHECK(rel(r.value, frozen::univariate_07_13_1_1_05_m05_t1) < 1e-9);
  CHECK(rel(r.value, mlbiv::eval_univariate(p, 1.0).value) < 1e-9);
  mlbiv::ContourSpec para;
  para.shape = mlbiv::ContourShape::parabolic;
  CHECK(rel(mlbiv::eval_univariate_contour(p, 1.0, para).value, frozen::univariate_07_13_1_1_05_m05_t1) < 1e-9);
}

TEST_CASE("node doubling stays within the error estimate") {
  const MLParams p{0.6, 1.4, 1.7, 2.0, {0.3, 0.4}, -0.6};
  for (double t : {0.25, 1.0, 2.0}) {
    mlbiv::ContourSpec c;
    const auto coarse = mlbiv::eval_univariate_contour(p, t, c);
    c.nodes *= 2;
    const auto fine = mlbiv::eval_univariate_contour(p, t, c);
    CHECK(std::abs(fine.value - coarse.value) <= coarse.err_estimate);
  }
}

TEST_CASE("contour branch violations are reported") {
  mlbiv::ContourSpec c;
  c.scale = 0.5;
  CHECK_THROWS_AS(mlbiv::eval_univariate_contour({0.5, 0.5, 1, 1, 0.9, 0.9}, 1.0, c), mlbiv::BranchCutError);
  c.scale = -1.0;
  CHECK_THROWS_AS(mlbiv::eval_univariate_contour({1, 1, 1, 1, 1, 1}, 1.0, c), mlbiv::DomainError);
  CHECK_THROWS_AS(mlbiv::eval_univariate_contour({1, 1, 1, 1, 1, 1}, 0.0), mlbiv::DomainError);
  c = {};
  c.nodes = 4;
  CHECK_THROWS_AS(mlbiv::eval_univariate_contour({1, 1, 1, 1, 1, 1}, 1.0, c), mlbiv::DomainError);
}

TEST_CASE("laplace closed form") {
  CHECK(rel(mlbiv::laplace_closed_form({1, 1, 1, 1, 1, 1}, 3.0), 1.0) < 1e-15);
  CHECK(rel(mlbiv::laplace_closed_form({0.3, 0.9, 0.5, 0, 1, 1}, 4.0), 0.5) < 1e-15);
  CHECK(rel(mlbiv::laplace_closed_form({0.5, 0.8, 1.2, 2.0, 0.3, 0.1}, 2.0), frozen::laplace_05_08_12_2_03_01_s2) <
        1e-14);
  CHECK_THROWS_AS(mlbiv::laplace_closed_form({1, 1, 1, 1, 1, 1}, 1.0), mlbiv::BranchCutError);
  CHECK_THROWS_AS(mlbiv::laplace_closed_form({1, 1, 1, 1, 1, 1}, -1.0), mlbiv::DomainError);
}

TEST_CASE("laplace numeric") {
  const auto e2t = mlbiv::laplace_numeric({1, 1, 1, 1, 1, 1}, 4.0, 40.0, 80);
  CHECK(std::abs(e2t.value - 0.5) < 1e-6);
  const auto one = mlbiv::laplace_numeric({0.6, 0.8, 1, 0, 1, 1}, 1.0, 40.0, 80);
  CHECK(std::abs(one.value - 1.0) < 1e-6);
  const MLParams p{0.8, 0.6, 1.0, 1.0, 0.4, 0.3};
  const auto got = mlbiv::laplace_numeric(p, 3.0, 60.0, 120);
  CHECK(rel(got.value, mlbiv::laplace_closed_form(p, 3.0)) < 1e-6);
  // singular endpoint, Re(gamma) < 1
  const MLParams q{0.5, 0.8, 0.4, 2.0, 0.3, 0.1};
  CHECK(rel(mlbiv::laplace_numeric(q, 6.0, 12.0, 30).value, mlbiv::laplace_closed_form(q, 6.0)) < 1e-8);
  CHECK_THROWS_AS(mlbiv::laplace_numeric({1, 1, 1, 1, 1, 1}, 1.0, 5.0, 20), mlbiv::DomainError);
}
