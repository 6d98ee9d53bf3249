#pragma once

// Text formats shared by the command-line tool, the bindings and the test
// harnesses. Floats are always written with 17 significant digits so that a
// written file re-reads to bit-identical doubles.

#include <iosfwd>
#include <string>
#include <vector>

#include "mlbiv/operators.hpp"

namespace mlbiv::io {

std::string format_double(double v);

/// "# key=value key=value" comment line.
struct Metadata {
  std::vector<std::pair<std::string, std::string>> entries;
  void add(const std::string& key, const std::string& value) { entries.emplace_back(key, value); }
  void add(const std::string& key, double value) { add(key, format_double(value)); }
  void add(const std::string& key, int value) { add(key, std::to_string(value)); }
};

/// `t,re,im` table, optional leading `#` lines. The grid must be ascending and
/// uniform to 1e-9 relative to the step; c and d are the first and last t.
/// Throws FormatError on anything else.
SampledFunction read_function_csv(std::istream& in);
SampledFunction read_function_csv_file(const std::string& path);

void write_function_csv(std::ostream& out, const SampledFunction& f, const Metadata& meta = {});

struct GridRow {
  double x = 0.0;
  double y = 0.0;
  Complex value{0.0};
  double err = 0.0;
};

/// `x,y,re,im,err`
void write_grid_csv(std::ostream& out, const std::vector<GridRow>& rows, const Metadata& meta = {});

struct SeriesRow {
  double t = 0.0;
  Complex value{0.0};
  double err = 0.0;
};

/// `t,re,im,err`
void write_series_csv(std::ostream& out, const std::vector<SeriesRow>& rows, const Metadata& meta = {});

}  // namespace mlbiv::io
