#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "mlbiv/errors.hpp"
#include "mlbiv/io.hpp"
#include "mlbiv/presets.hpp"
#include "mlbiv/verify.hpp"

using mlbiv::Complex;
namespace io = mlbiv::io;

TEST_CASE("seventeen significant digits") {
  CHECK(io::format_double(0.1) == "0.10000000000000001");
  CHECK(io::format_double(1.0) == "1");
  CHECK(io::format_double(-2.5e-300) == "-2.5e-300");
  CHECK(io::format_double(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("function CSV round trip is bit exact") {
  auto f = mlbiv::sample([](double t) { return Complex(std::exp(t) / 3.0, std::sin(7.0 * t)); }, -0.3, 1.7, 37);
  std::ostringstream a;
  io::Metadata meta;
  meta.add("kind", std::string("I"));
  meta.add("shells", 12);
  io::write_function_csv(a, f, meta);
  CHECK(a.str().rfind("# kind=I shells=12\nt,re,im\n", 0) == 0);
  std::istringstream in(a.str());
  const auto g = io::read_function_csv(in);
  CHECK(g.c == f.c);
  CHECK(g.d == f.d);
  REQUIRE(g.values.size() == f.values.size());
  for (std::size_t j = 0; j < f.values.size(); ++j) CHECK(g.values[j] == f.values[j]);
  std::ostringstream b;
  io::write_function_csv(b, g, meta);
  CHECK(a.str() == b.str());
}

TEST_CASE("function CSV rejects bad input") {
  auto read = [](const std::string& s) {
    std::istringstream in(s);
    return io::read_function_csv(in);
  };
  std::string ok = "t,re,im\n";
  for (int j = 0; j <= 8; ++j) ok += std::to_string(j * 0.125) + ",1,0\n";
  CHECK(read(ok).values.size() == 9);
  CHECK(read("# comment\n" + ok).values.size() == 9);
  CHECK_THROWS_AS(read(""), mlbiv::FormatError);
  CHECK_THROWS_AS(read("x,re,im\n0,1,0\n1,1,0\n"), mlbiv::FormatError);
  CHECK_THROWS_AS(read("t,re,im\n0,1\n1,1,0\n"), mlbiv::FormatError);
  CHECK_THROWS_AS(read("t,re,im\n0,1,zz\n1,1,0\n"), mlbiv::FormatError);
  CHECK_THROWS_AS(read("t,re,im\n0,1,0\n0.1,1,0\n0.3,1,0\n"), mlbiv::FormatError);
  CHECK_THROWS_AS(read("t,re,im\n1,1,0\n0,1,0\n"), mlbiv::FormatError);
  // too coarse for the operators
  CHECK_THROWS_AS(read("t,re,im\n0,1,0\n1,1,0\n"), mlbiv::FormatError);
  CHECK_THROWS_AS(read("t,re,im\n0,nan,0\n" + ok.substr(8)), mlbiv::FormatError);
}

TEST_CASE("grid and series tables") {
  std::ostringstream os;
  io::write_grid_csv(os, {{0.0, 0.5, Complex(1.0, -0.25), 1e-16}});
  CHECK(os.str() == "x,y,re,im,err\n0,0.5,1,-0.25,9.9999999999999998e-17\n");
  std::ostringstream ts;
  io::write_series_csv(ts, {{2.0, Complex(3.0), 0.0}});
  CHECK(ts.str() == "t,re,im,err\n2,3,0,0\n");
}

TEST_CASE("figure presets") {
  CHECK(mlbiv::presets().size() == 9);
  const auto d = mlbiv::find_preset("fig1d");
  REQUIRE(d);
  CHECK(d->params.alpha == Complex(1.5));
  CHECK(d->params.beta == Complex(1.0));
  CHECK(!d->univariate);
  const auto c = mlbiv::find_preset("fig2c");
  REQUIRE(c);
  CHECK(c->univariate);
  CHECK(c->params.alpha == Complex(0.25));
  CHECK(!mlbiv::find_preset("fig3"));
  CHECK(mlbiv::eval_bivariate(mlbiv::find_preset("fig1a")->params.bivariate(), 0.0, 0.0).value == Complex(1.0));
  for (const auto& p : mlbiv::presets()) {
    CHECK(p.params.gamma == Complex(1.0));
    CHECK(p.params.delta == Complex(1.0));
  }
}

TEST_CASE("verify report schema") {
  const auto r = mlbiv::run_suite("exponential");
  CHECK(r.pass);
  CHECK(r.cases == 25);
  const auto j = nlohmann::json::parse(mlbiv::to_json(r));
  CHECK(j["suite"] == "exponential");
  CHECK(j["cases"] == 25);
  CHECK(j["max_error"].is_number());
  CHECK(j["tolerance"] == 1e-10);
  CHECK(j["pass"] == true);
  CHECK_THROWS_AS(mlbiv::run_suite("nope"), mlbiv::DomainError);
  CHECK_THROWS_AS(mlbiv::run_suites("exponential,nope"), mlbiv::DomainError);
  CHECK(mlbiv::run_suites("gamma,reflection").size() == 2);
}
