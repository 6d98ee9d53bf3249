#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mlbiv/contour.hpp"
#include "mlbiv/errors.hpp"
#include "mlbiv/fde.hpp"
#include "mlbiv/operators.hpp"
#include "mlbiv/presets.hpp"
#include "mlbiv/verify.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using mlbiv::Complex;
using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

namespace {

mlbiv::EvalOptions options(double tol, int max_shell) {
  mlbiv::EvalOptions o;
  o.tol = tol;
  o.max_shell = max_shell;
  return o;
}

mlbiv::SampledFunction to_sampled(const CArray& values, double c, double d) {
  if (values.ndim() != 1) throw mlbiv::GridError("expected a one-dimensional array");
  mlbiv::SampledFunction f{c, d, {}};
  f.values.assign(values.data(), values.data() + values.size());
  return f;
}

CArray to_array(const mlbiv::SampledFunction& f) {
  CArray out(static_cast<py::ssize_t>(f.values.size()));
  std::copy(f.values.begin(), f.values.end(), out.mutable_data());
  return out;
}

// Operators share one signature: values on a uniform grid over [c, d].
template <class Op>
auto bind_operator(Op op) {
  return [op](const CArray& values, double c, double d, Complex alpha, Complex beta, Complex gamma, Complex delta,
              Complex omega1, Complex omega2, double tol, int max_shell) {
    const auto f = to_sampled(values, c, d);
    mlbiv::OperatorRequest req{{alpha, beta, gamma, delta, omega1, omega2}, c, options(tol, max_shell)};
    mlbiv::OperatorResult r;
    {
      py::gil_scoped_release release;
      r = op(req, f);
    }
    return to_array(r.function);
  };
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bivariate Mittag-Leffler functions and the associated fractional operators";

  py::register_exception<mlbiv::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<mlbiv::ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  py::class_<mlbiv::EvalResult>(m, "EvalResult")
      .def_readonly("value", &mlbiv::EvalResult::value)
      .def_readonly("err_estimate", &mlbiv::EvalResult::err_estimate)
      .def_readonly("shells_used", &mlbiv::EvalResult::shells_used)
      .def_readonly("converged", &mlbiv::EvalResult::converged)
      .def("__repr__", [](const mlbiv::EvalResult& r) {
        return "EvalResult(value=" + py::repr(py::cast(r.value)).cast<std::string>() +
               ", err_estimate=" + std::to_string(r.err_estimate) + ", shells_used=" + std::to_string(r.shells_used) +
               ")";
      });

  const double tol = mlbiv::EvalOptions{}.tol;
  const int max_shell = mlbiv::EvalOptions{}.max_shell;

  m.def(
      "bivariate",
      [](Complex x, Complex y, Complex alpha, Complex beta, Complex gamma, Complex delta, double tol, int max_shell) {
        return mlbiv::eval_bivariate({alpha, beta, gamma, delta}, x, y, options(tol, max_shell));
      },
      "x"_a, "y"_a, "alpha"_a = 1.0, "beta"_a = 1.0, "gamma"_a = 1.0, "delta"_a = 1.0, "tol"_a = tol,
      "max_shell"_a = max_shell, "E^delta_{alpha,beta,gamma}(x, y) by shell summation.");

  m.def(
      "univariate",
      [](double t, Complex alpha, Complex beta, Complex gamma, Complex delta, Complex omega1, Complex omega2,
         double tol, int max_shell) {
        return mlbiv::eval_univariate({alpha, beta, gamma, delta, omega1, omega2}, t, options(tol, max_shell));
      },
      "t"_a, "alpha"_a = 1.0, "beta"_a = 1.0, "gamma"_a = 1.0, "delta"_a = 1.0, "omega1"_a = 1.0, "omega2"_a = 1.0,
      "tol"_a = tol, "max_shell"_a = max_shell, "t^{gamma-1} E(omega1 t^alpha, omega2 t^beta).");

  m.def(
      "univariate_contour",
      [](double t, Complex alpha, Complex beta, Complex gamma, Complex delta, Complex omega1, Complex omega2,
         int nodes) {
        mlbiv::ContourSpec c;
        c.nodes = nodes;
        return mlbiv::eval_univariate_contour({alpha, beta, gamma, delta, omega1, omega2}, t, c);
      },
      "t"_a, "alpha"_a = 1.0, "beta"_a = 1.0, "gamma"_a = 1.0, "delta"_a = 1.0, "omega1"_a = 1.0, "omega2"_a = 1.0,
      "nodes"_a = 64, "Univariate form from the complex contour integral (t > 0).");

  m.def(
      "prabhakar",
      [](Complex x, Complex alpha, Complex gamma, Complex delta, double tol, int max_shell) {
        return mlbiv::eval_prabhakar(alpha, gamma, delta, x, options(tol, max_shell));
      },
      "x"_a, "alpha"_a = 1.0, "gamma"_a = 1.0, "delta"_a = 1.0, "tol"_a = tol, "max_shell"_a = max_shell);

  m.def(
      "laplace",
      [](Complex s, Complex alpha, Complex beta, Complex gamma, Complex delta, Complex omega1, Complex omega2) {
        return mlbiv::laplace_closed_form({alpha, beta, gamma, delta, omega1, omega2}, s);
      },
      "s"_a, "alpha"_a = 1.0, "beta"_a = 1.0, "gamma"_a = 1.0, "delta"_a = 1.0, "omega1"_a = 1.0, "omega2"_a = 1.0,
      "s^{-gamma} (1 - omega1 s^{-alpha} - omega2 s^{-beta})^{-delta}.");

  m.def(
      "laplace_numeric",
      [](double s, double horizon, int steps, Complex alpha, Complex beta, Complex gamma, Complex delta,
         Complex omega1, Complex omega2) {
        return mlbiv::laplace_numeric({alpha, beta, gamma, delta, omega1, omega2}, s, horizon, steps);
      },
      "s"_a, "horizon"_a = 40.0, "steps"_a = 80, "alpha"_a = 1.0, "beta"_a = 1.0, "gamma"_a = 1.0, "delta"_a = 1.0,
      "omega1"_a = 1.0, "omega2"_a = 1.0);

  m.def("laguerre", &mlbiv::laguerre_bivariate, "n"_a, "alpha"_a, "beta"_a, "gamma"_a, "x"_a, "y"_a);
  m.def(
      "laguerre_generating",
      [](Complex t, int terms, Complex delta, Complex alpha, Complex beta, Complex gamma, Complex x, Complex y) {
        const auto s = mlbiv::laguerre_generating_sum(terms, delta, alpha, beta, gamma, x, y, t);
        return py::make_tuple(s.value, mlbiv::laguerre_generating_closed_form(delta, alpha, beta, gamma, x, y, t).value);
      },
      "t"_a, "terms"_a, "delta"_a, "alpha"_a, "beta"_a, "gamma"_a, "x"_a, "y"_a,
      "(partial sum, closed form) of the Laguerre generating function.");

  const auto op_args = [&] {
    return std::make_tuple("values"_a, "c"_a, "d"_a, "alpha"_a = 1.0, "beta"_a = 1.0, "gamma"_a = 1.0,
                           "delta"_a = 1.0, "omega1"_a = 1.0, "omega2"_a = 1.0, "tol"_a = tol,
                           "max_shell"_a = max_shell);
  };
  std::apply([&](auto... a) { m.def("integral", bind_operator(mlbiv::ml_integral_apply), a..., "Apply J."); },
             op_args());
  std::apply([&](auto... a) { m.def("derivative", bind_operator(mlbiv::ml_derivative_rl), a..., "Apply D."); },
             op_args());
  std::apply(
      [&](auto... a) { m.def("caputo", bind_operator(mlbiv::ml_derivative_caputo), a..., "Apply the Caputo type C."); },
      op_args());
  std::apply([&](auto... a) {
    m.def("caputo_correction", bind_operator(mlbiv::rl_caputo_correction), a..., "D f - C f.");
  }, op_args());

  m.def(
      "rl_integral",
      [](const CArray& values, double c, double d, Complex mu) {
        return to_array(mlbiv::rl_integral_sampled(to_sampled(values, c, d), mu));
      },
      "values"_a, "c"_a, "d"_a, "mu"_a);
  m.def(
      "rl_derivative",
      [](const CArray& values, double c, double d, Complex mu) {
        return to_array(mlbiv::rl_derivative_sampled(to_sampled(values, c, d), mu).function);
      },
      "values"_a, "c"_a, "d"_a, "mu"_a);

  m.def(
      "bound_constant",
      [](double c, double d, Complex alpha, Complex beta, Complex gamma, Complex delta, Complex omega1,
         Complex omega2) {
        return mlbiv::bound_constant({{alpha, beta, gamma, delta, omega1, omega2}, c, {}}, d);
      },
      "c"_a, "d"_a, "alpha"_a = 1.0, "beta"_a = 1.0, "gamma"_a = 1.0, "delta"_a = 1.0, "omega1"_a = 1.0,
      "omega2"_a = 1.0, "A with ||J f||_1 <= A ||f||_1 on (c, d).");

  m.def(
      "rl_fde_residual",
      [](std::vector<double> t, Complex alpha, Complex beta, Complex gamma, Complex omega1, Complex omega2) {
        return mlbiv::rl_fde_residual({alpha, beta, gamma, omega1, omega2, std::move(t)});
      },
      "t"_a, "alpha"_a, "beta"_a, "gamma"_a, "omega1"_a, "omega2"_a);
  m.def(
      "caputo_fde_residual",
      [](std::vector<double> t, Complex alpha, Complex beta, Complex omega1, Complex omega2) {
        return mlbiv::caputo_fde_residual({alpha, beta, 1.0, omega1, omega2, std::move(t)}).residuals;
      },
      "t"_a, "alpha"_a, "beta"_a, "omega1"_a, "omega2"_a);

  m.def("presets", [] {
    py::dict out;
    for (const auto& p : mlbiv::presets()) {
      out[py::str(p.name)] = py::dict("alpha"_a = p.params.alpha, "beta"_a = p.params.beta, "gamma"_a = p.params.gamma,
                                      "delta"_a = p.params.delta, "univariate"_a = p.univariate);
    }
    return out;
  });

  m.def("suite_names", &mlbiv::suite_names);
  m.def(
      "verify",
      [](const std::string& suite) {
        py::gil_scoped_release release;
        return mlbiv::to_json(mlbiv::run_suites(suite));
      },
      "suite"_a = "all", "Run property suites; returns the JSON report as a string.");
}
