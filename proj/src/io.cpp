#include "mlbiv/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "mlbiv/errors.hpp"

namespace mlbiv::io {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_field(const std::string& raw, std::size_t line) {
  const std::string s = trim(raw);
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc() || ptr != last) {
    throw FormatError("line " + std::to_string(line) + ": not a number: '" + s + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = s.find(',', start);
    out.push_back(s.substr(start, comma - start));
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

void write_meta(std::ostream& out, const Metadata& meta) {
  if (meta.entries.empty()) return;
  out << '#';
  for (const auto& [k, v] : meta.entries) out << ' ' << k << '=' << v;
  out << '\n';
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

SampledFunction read_function_csv(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  std::vector<double> t;
  std::vector<Complex> values;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    if (!header) {
      if (s != "t,re,im") throw FormatError("expected header 't,re,im', got '" + s + "'");
      header = true;
      continue;
    }
    const auto fields = split(s);
    if (fields.size() != 3) throw FormatError("line " + std::to_string(lineno) + ": expected 3 fields");
    t.push_back(parse_field(fields[0], lineno));
    values.emplace_back(parse_field(fields[1], lineno), parse_field(fields[2], lineno));
  }
  if (!header) throw FormatError("missing header 't,re,im'");
  if (t.size() < 2) throw FormatError("need at least two rows");

  const std::size_t M = t.size() - 1;
  const double c = t.front(), d = t.back();
  if (!(d > c)) throw FormatError("grid must be ascending");
  const double h = (d - c) / static_cast<double>(M);
  for (std::size_t j = 0; j <= M; ++j) {
    const double expect = c + static_cast<double>(j) * h;
    if (!(std::abs(t[j] - expect) <= 1e-9 * h)) {
      throw FormatError("grid is not uniform at row " + std::to_string(j));
    }
  }
  SampledFunction f{c, d, std::move(values)};
  try {
    f.validate();
  } catch (const GridError& e) {
    throw FormatError(e.what());
  }
  return f;
}

SampledFunction read_function_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_function_csv(in);
}

void write_function_csv(std::ostream& out, const SampledFunction& f, const Metadata& meta) {
  write_meta(out, meta);
  out << "t,re,im\n";
  for (std::size_t j = 0; j < f.values.size(); ++j) {
    const double t = j + 1 == f.values.size() ? f.d : f.node(j);
    out << format_double(t) << ',' << format_double(f.values[j].real()) << ',' << format_double(f.values[j].imag())
        << '\n';
  }
}

void write_grid_csv(std::ostream& out, const std::vector<GridRow>& rows, const Metadata& meta) {
  write_meta(out, meta);
  out << "x,y,re,im,err\n";
  for (const auto& r : rows) {
    out << format_double(r.x) << ',' << format_double(r.y) << ',' << format_double(r.value.real()) << ','
        << format_double(r.value.imag()) << ',' << format_double(r.err) << '\n';
  }
}

void write_series_csv(std::ostream& out, const std::vector<SeriesRow>& rows, const Metadata& meta) {
  write_meta(out, meta);
  out << "t,re,im,err\n";
  for (const auto& r : rows) {
    out << format_double(r.t) << ',' << format_double(r.value.real()) << ',' << format_double(r.value.imag()) << ','
        << format_double(r.err) << '\n';
  }
}

}  // namespace mlbiv::io
