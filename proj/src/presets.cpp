#include "mlbiv/presets.hpp"

namespace mlbiv {

namespace {

Preset surface(const std::string& name, double a, double b) {
  return {name, {a, b, 1.0, 1.0, 1.0, 1.0}, false, -2.0, 2.0, 0.25};
}

Preset curve(const std::string& name, double a, double b) {
  return {name, {a, b, 1.0, 1.0, 1.0, 1.0}, true, 0.0, 2.0, 0.05};
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = {
      surface("fig1a", 1.0, 1.0), surface("fig1b", 0.9, 1.0),   surface("fig1c", 1.0, 0.9),
      surface("fig1d", 1.5, 1.0), surface("fig1e", 1.0, 1.5),   curve("fig2a", 1.0, 1.0),
      curve("fig2b", 1.5, 1.5),   curve("fig2c", 0.25, 0.25),   curve("fig2d", 10.0, 10.0),
  };
  return all;
}

std::optional<Preset> find_preset(const std::string& name) {
  for (const auto& p : presets()) {
    if (p.name == name) return p;
  }
  return std::nullopt;
}

}  // namespace mlbiv
