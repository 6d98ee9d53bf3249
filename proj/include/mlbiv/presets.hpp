#pragma once

// Parameter sets of the published surface (fig1*) and curve (fig2*) plots.
// All use gamma = delta = 1.

#include <optional>
#include <string>
#include <vector>

#include "mlbiv/series.hpp"

namespace mlbiv {

struct Preset {
  std::string name;
  MLParams params;
  bool univariate = false;  // fig2*: t^{gamma-1} E(omega1 t^alpha, omega2 t^beta) against t
  double lo = -2.0;         // default range for x, y or t
  double hi = 2.0;
  double step = 0.25;
};

const std::vector<Preset>& presets();
std::optional<Preset> find_preset(const std::string& name);

}  // namespace mlbiv
