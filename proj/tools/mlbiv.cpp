// mlbiv: evaluate bivariate Mittag-Leffler functions, tabulate them, apply the
// associated fractional operators to sampled data and run the property suites.
//
// Exit codes: 0 ok, 1 verify failure, 2 bad input or parameters, 3 no convergence.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "mlbiv/contour.hpp"
#include "mlbiv/errors.hpp"
#include "mlbiv/io.hpp"
#include "mlbiv/operators.hpp"
#include "mlbiv/presets.hpp"
#include "mlbiv/verify.hpp"

using mlbiv::Complex;
using mlbiv::io::format_double;
using json = nlohmann::ordered_json;

namespace {

enum class Format { csv, json };

// "re" or "re,im"
Complex parse_complex(const std::string& s) {
  auto parse = [&](const std::string& part) {
    double v = 0.0;
    const char* first = part.data();
    const char* last = part.data() + part.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (part.empty() || ec != std::errc() || ptr != last) throw mlbiv::DomainError("not a number: '" + s + "'");
    return v;
  };
  const auto comma = s.find(',');
  if (comma == std::string::npos) return parse(s);
  return {parse(s.substr(0, comma)), parse(s.substr(comma + 1))};
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

struct Common {
  std::string alpha = "1", beta = "1", gamma = "1", delta = "1", w1 = "1", w2 = "1";
  std::string preset;
  double tol = mlbiv::EvalOptions{}.tol;
  int max_shell = mlbiv::EvalOptions{}.max_shell;
  Format format = Format::csv;
  std::string out;

  void attach(CLI::App* app, bool with_preset) {
    app->add_option("-a,--alpha", alpha, "alpha, as re or re,im");
    app->add_option("-b,--beta", beta, "beta");
    app->add_option("-g,--gamma", gamma, "gamma");
    app->add_option("-d,--delta", delta, "delta");
    app->add_option("--w1", w1, "omega1 (univariate form and operators)");
    app->add_option("--w2", w2, "omega2");
    if (with_preset) app->add_option("--preset", preset, "figure preset fig1a..fig1e, fig2a..fig2d");
    app->add_option("--tol", tol, "series tolerance")->capture_default_str();
    app->add_option("--max-shell", max_shell, "series shell cap")->capture_default_str();
    app->add_option("--format", format, "csv or json")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"csv", Format::csv}, {"json", Format::json}}));
    app->add_option("--out", out, "output file (default stdout)");
  }

  mlbiv::MLParams params() const {
    if (!preset.empty()) {
      const auto p = mlbiv::find_preset(preset);
      if (!p) throw mlbiv::DomainError("unknown preset '" + preset + "'");
      return p->params;
    }
    mlbiv::MLParams p{parse_complex(alpha), parse_complex(beta), parse_complex(gamma),
                      parse_complex(delta), parse_complex(w1),   parse_complex(w2)};
    p.validate();
    return p;
  }

  mlbiv::EvalOptions options() const {
    mlbiv::EvalOptions o;
    o.tol = tol;
    o.max_shell = max_shell;
    o.validate();
    return o;
  }

  mlbiv::io::Metadata metadata(const mlbiv::MLParams& p) const {
    mlbiv::io::Metadata m;
    if (!preset.empty()) m.add("preset", preset);
    auto put = [&](const std::string& k, Complex z) {
      m.add(k, z.imag() == 0.0 ? format_double(z.real()) : format_double(z.real()) + ";" + format_double(z.imag()));
    };
    put("alpha", p.alpha);
    put("beta", p.beta);
    put("gamma", p.gamma);
    put("delta", p.delta);
    put("omega1", p.omega1);
    put("omega2", p.omega2);
    m.add("tol", tol);
    m.add("max_shell", max_shell);
    return m;
  }

  // Everything is assembled in memory first so a failure never leaves a
  // partial file behind.
  void emit(const std::string& text) const {
    if (out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw mlbiv::DomainError("cannot write " + out);
    f << text;
  }
};

// ---------------------------------------------------------------- eval

struct EvalCmd {
  Common common;
  bool univariate = false;
  std::string x = "0", y = "0";
  double t = 1.0;
  bool contour = false;

  void attach(CLI::App* app) {
    common.attach(app, true);
    auto* uni = app->add_flag("--univariate", univariate, "t^{gamma-1} E(omega1 t^alpha, omega2 t^beta)");
    app->add_flag("--bivariate", "E(x, y) (default)")->excludes(uni);
    app->add_option("-x", x, "x, as re or re,im");
    app->add_option("-y", y, "y");
    app->add_option("-t", t, "t >= 0 for --univariate");
    app->add_flag("--contour", contour, "also evaluate by the contour integral (univariate, t > 0)");
  }

  int run() const {
    const auto p = common.params();
    const auto opts = common.options();
    const auto r = univariate ? mlbiv::eval_univariate(p, t, opts)
                              : mlbiv::eval_bivariate(p.bivariate(), parse_complex(x), parse_complex(y), opts);
    std::optional<mlbiv::EvalResult> c;
    if (contour) {
      if (!univariate) throw mlbiv::DomainError("--contour needs --univariate");
      c = mlbiv::eval_univariate_contour(p, t);
    }
    std::ostringstream os;
    if (common.format == Format::json) {
      json j;
      j["value"] = complex_json(r.value);
      j["err"] = r.err_estimate;
      j["shells"] = r.shells_used;
      j["converged"] = r.converged;
      if (c) {
        j["contour_value"] = complex_json(c->value);
        j["contour_err"] = c->err_estimate;
        j["contour_nodes"] = c->shells_used;
      }
      os << j.dump(2) << '\n';
    } else {
      os << "re,im,err,shells,converged";
      if (c) os << ",contour_re,contour_im,contour_err";
      os << '\n'
         << format_double(r.value.real()) << ',' << format_double(r.value.imag()) << ',' << format_double(r.err_estimate)
         << ',' << r.shells_used << ',' << (r.converged ? 1 : 0);
      if (c) {
        os << ',' << format_double(c->value.real()) << ',' << format_double(c->value.imag()) << ','
           << format_double(c->err_estimate);
      }
      os << '\n';
    }
    common.emit(os.str());
    return 0;
  }
};

// ---------------------------------------------------------------- grid

struct GridCmd {
  Common common;
  std::optional<double> lo, hi, step;
  std::optional<double> ylo, yhi;
  bool univariate = false;

  void attach(CLI::App* app) {
    common.attach(app, true);
    app->add_flag("--univariate", univariate, "tabulate the univariate form in t (implied by fig2 presets)");
    app->add_option("--from", lo, "start of the x (or t) range");
    app->add_option("--to", hi, "end of the x (or t) range");
    app->add_option("--y-from", ylo, "start of the y range (default: same as x)");
    app->add_option("--y-to", yhi, "end of the y range");
    app->add_option("--step", step, "grid spacing");
  }

  static std::vector<double> axis(double a, double b, double h) {
    if (!(h > 0.0) || !std::isfinite(h)) throw mlbiv::DomainError("step must be positive");
    if (!(b >= a)) throw mlbiv::DomainError("empty range");
    const auto n = static_cast<std::size_t>(std::floor((b - a) / h + 1e-9));
    if (n > 1000000) throw mlbiv::DomainError("grid too large");
    std::vector<double> v;
    for (std::size_t i = 0; i <= n; ++i) v.push_back(a + static_cast<double>(i) * h);
    return v;
  }

  int run() const {
    const auto p = common.params();
    const auto opts = common.options();
    mlbiv::Preset defaults;
    bool uni = univariate;
    if (!common.preset.empty()) {
      defaults = *mlbiv::find_preset(common.preset);
      uni = uni || defaults.univariate;
    } else if (uni) {
      defaults.lo = 0.0;
      defaults.step = 0.05;
    }
    const double a = lo.value_or(defaults.lo), b = hi.value_or(defaults.hi), h = step.value_or(defaults.step);
    const auto xs = axis(a, b, h);
    std::ostringstream os;
    auto meta = common.metadata(p);

    if (uni) {
      std::vector<mlbiv::io::SeriesRow> rows;
      for (double t : xs) {
        const auto r = mlbiv::eval_univariate(p, t, opts);
        rows.push_back({t, r.value, r.err_estimate});
      }
      if (common.format == Format::json) {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back({{"t", r.t}, {"value", complex_json(r.value)}, {"err", r.err}});
        os << arr.dump(2) << '\n';
      } else {
        mlbiv::io::write_series_csv(os, rows, meta);
      }
    } else {
      const auto ys = axis(ylo.value_or(a), yhi.value_or(b), h);
      std::vector<mlbiv::io::GridRow> rows;
      for (double x : xs) {
        for (double y : ys) {
          const auto r = mlbiv::eval_bivariate(p.bivariate(), x, y, opts);
          rows.push_back({x, y, r.value, r.err_estimate});
        }
      }
      if (common.format == Format::json) {
        json arr = json::array();
        for (const auto& r : rows) {
          arr.push_back({{"x", r.x}, {"y", r.y}, {"value", complex_json(r.value)}, {"err", r.err}});
        }
        os << arr.dump(2) << '\n';
      } else {
        mlbiv::io::write_grid_csv(os, rows, meta);
      }
    }
    common.emit(os.str());
    return 0;
  }
};

// ---------------------------------------------------------------- laplace

struct LaplaceCmd {
  Common common;
  double s = 2.0;
  double horizon = 40.0;
  int steps = 80;

  void attach(CLI::App* app) {
    common.attach(app, false);
    app->add_option("-s", s, "transform variable (real, > 0)")->capture_default_str();
    app->add_option("--horizon", horizon, "truncation point T of the numerical transform")->capture_default_str();
    app->add_option("--steps", steps, "Gauss-Legendre panels on [0, T]")->capture_default_str();
  }

  int run() const {
    const auto p = common.params();
    mlbiv::LaplaceOptions lo;
    lo.series = common.options();
    const Complex closed = mlbiv::laplace_closed_form(p, s);
    const auto num = mlbiv::laplace_numeric(p, s, horizon, steps, lo);
    const double rel = std::abs(num.value - closed) / std::abs(closed);
    std::ostringstream os;
    if (common.format == Format::json) {
      json j;
      j["s"] = s;
      j["closed_form"] = complex_json(closed);
      j["numeric"] = complex_json(num.value);
      j["numeric_err"] = num.err_estimate;
      j["rel_diff"] = rel;
      os << j.dump(2) << '\n';
    } else {
      os << "s,closed_re,closed_im,numeric_re,numeric_im,numeric_err,rel_diff\n"
         << format_double(s) << ',' << format_double(closed.real()) << ',' << format_double(closed.imag()) << ','
         << format_double(num.value.real()) << ',' << format_double(num.value.imag()) << ','
         << format_double(num.err_estimate) << ',' << format_double(rel) << '\n';
    }
    common.emit(os.str());
    return 0;
  }
};

// ---------------------------------------------------------------- op

enum class OpKind { I, D, C };

struct OpCmd {
  Common common;
  OpKind kind = OpKind::I;
  std::string input = "-";
  mlbiv::DerivativeScheme scheme = mlbiv::DerivativeScheme::product;

  void attach(CLI::App* app) {
    common.attach(app, false);
    app->add_option("--kind", kind, "I (integral), D (RL type inverse) or C (Caputo type)")
        ->required()
        ->transform(CLI::CheckedTransformer(std::map<std::string, OpKind>{{"I", OpKind::I}, {"D", OpKind::D}, {"C", OpKind::C}}));
    app->add_option("--in", input, "input CSV t,re,im on a uniform grid ('-' for stdin)");
    app->add_option("--scheme", scheme, "derivative discretization: product or fd")
        ->transform(CLI::CheckedTransformer(std::map<std::string, mlbiv::DerivativeScheme>{
            {"product", mlbiv::DerivativeScheme::product}, {"fd", mlbiv::DerivativeScheme::finite_difference}}));
  }

  int run() const {
    const auto p = common.params();
    const auto f = input == "-" ? mlbiv::io::read_function_csv(std::cin) : mlbiv::io::read_function_csv_file(input);
    const mlbiv::OperatorRequest req{p, f.c, common.options(), scheme};
    mlbiv::OperatorResult r;
    switch (kind) {
      case OpKind::I: r = mlbiv::ml_integral_apply(req, f); break;
      case OpKind::D: r = mlbiv::ml_derivative_rl(req, f); break;
      case OpKind::C: r = mlbiv::ml_derivative_caputo(req, f); break;
    }
    auto meta = common.metadata(p);
    meta.add("kind", std::string(kind == OpKind::I ? "I" : kind == OpKind::D ? "D" : "C"));
    meta.add("shells", r.shells_used);
    meta.add("tail_bound", r.err_estimate);
    if (r.origin_extrapolated) meta.add("origin", std::string("extrapolated"));
    std::ostringstream os;
    if (common.format == Format::json) {
      json j;
      j["shells"] = r.shells_used;
      j["tail_bound"] = r.err_estimate;
      j["origin_extrapolated"] = r.origin_extrapolated;
      json rows = json::array();
      for (std::size_t i = 0; i < r.function.values.size(); ++i) {
        rows.push_back({{"t", r.function.node(i)}, {"value", complex_json(r.function.values[i])}});
      }
      j["values"] = rows;
      os << j.dump(2) << '\n';
    } else {
      mlbiv::io::write_function_csv(os, r.function, meta);
    }
    common.emit(os.str());
    return 0;
  }
};

// ---------------------------------------------------------------- laguerre

struct LaguerreCmd {
  Common common;
  int n = 0;
  std::string x = "0", y = "0";
  std::optional<std::string> t;
  int terms = 60;

  void attach(CLI::App* app) {
    common.attach(app, false);
    app->add_option("-n", n, "polynomial degree")->capture_default_str();
    app->add_option("-x", x, "x");
    app->add_option("-y", y, "y");
    app->add_option("-t", t, "evaluate the generating function at t (|t| < 1) instead; uses -d as delta");
    app->add_option("--terms", terms, "partial sum length N for -t")->capture_default_str();
  }

  int run() const {
    const auto p = common.params();
    const Complex xv = parse_complex(x), yv = parse_complex(y);
    std::ostringstream os;
    if (!t) {
      if (n < 0) throw mlbiv::DomainError("n must be non-negative");
      const Complex v = mlbiv::laguerre_bivariate(n, p.alpha, p.beta, p.gamma, xv, yv);
      if (common.format == Format::json) {
        os << json{{"n", n}, {"value", complex_json(v)}}.dump(2) << '\n';
      } else {
        os << "n,re,im\n" << n << ',' << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
      }
    } else {
      const Complex tv = parse_complex(*t);
      const auto sum = mlbiv::laguerre_generating_sum(terms, p.delta, p.alpha, p.beta, p.gamma, xv, yv, tv);
      const auto closed =
          mlbiv::laguerre_generating_closed_form(p.delta, p.alpha, p.beta, p.gamma, xv, yv, tv, common.options());
      if (common.format == Format::json) {
        json j;
        j["terms"] = terms;
        j["partial_sum"] = complex_json(sum.value);
        j["last_term"] = sum.last_term;
        j["diverging"] = sum.diverging;
        j["closed_form"] = complex_json(closed.value);
        os << j.dump(2) << '\n';
      } else {
        os << "terms,sum_re,sum_im,last_term,closed_re,closed_im\n"
           << terms << ',' << format_double(sum.value.real()) << ',' << format_double(sum.value.imag()) << ','
           << format_double(sum.last_term) << ',' << format_double(closed.value.real()) << ','
           << format_double(closed.value.imag()) << '\n';
      }
    }
    common.emit(os.str());
    return 0;
  }
};

// ---------------------------------------------------------------- verify

struct VerifyCmd {
  std::string suite = "all";
  std::string out;
  bool list = false;

  void attach(CLI::App* app) {
    app->add_option("--suite", suite, "suite name, comma separated list, or all")->capture_default_str();
    app->add_option("--out", out, "write the JSON report here");
    app->add_flag("--list", list, "print the suite names");
  }

  int run() const {
    if (list) {
      for (const auto& n : mlbiv::suite_names()) std::cout << n << '\n';
      return 0;
    }
    const auto reports = mlbiv::run_suites(suite);
    bool ok = true;
    for (const auto& r : reports) {
      ok = ok && r.pass;
      std::cerr << (r.pass ? "pass " : "FAIL ") << r.suite << "  max_error=" << r.max_error << " tol=" << r.tolerance
                << (r.note.empty() ? "" : "  " + r.note) << '\n';
    }
    const std::string text = (reports.size() == 1 ? mlbiv::to_json(reports.front()) : mlbiv::to_json(reports)) + "\n";
    if (out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out, std::ios::binary);
      if (!f) throw mlbiv::DomainError("cannot write " + out);
      f << text;
    }
    return ok ? 0 : 1;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bivariate Mittag-Leffler functions and fractional operators"};
  app.require_subcommand(1);

  EvalCmd eval;
  GridCmd grid;
  LaplaceCmd laplace;
  OpCmd op;
  LaguerreCmd laguerre;
  VerifyCmd verify;
  auto* c_eval = app.add_subcommand("eval", "evaluate E(x, y) or the univariate form at one point");
  auto* c_grid = app.add_subcommand("grid", "tabulate over a grid (figure presets available)");
  auto* c_laplace = app.add_subcommand("laplace", "closed-form and numerical Laplace transform");
  auto* c_op = app.add_subcommand("op", "apply I, D or C to a sampled function");
  auto* c_laguerre = app.add_subcommand("laguerre", "bivariate Laguerre polynomials and their generating function");
  auto* c_verify = app.add_subcommand("verify", "run property suites, JSON report");
  eval.attach(c_eval);
  grid.attach(c_grid);
  laplace.attach(c_laplace);
  op.attach(c_op);
  laguerre.attach(c_laguerre);
  verify.attach(c_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_eval->parsed()) return eval.run();
    if (c_grid->parsed()) return grid.run();
    if (c_laplace->parsed()) return laplace.run();
    if (c_op->parsed()) return op.run();
    if (c_laguerre->parsed()) return laguerre.run();
    if (c_verify->parsed()) return verify.run();
  } catch (const mlbiv::DomainError& e) {
    std::cerr << "mlbiv: " << e.what() << '\n';
    return 2;
  } catch (const mlbiv::ConvergenceError& e) {
    std::cerr << "mlbiv: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "mlbiv: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
