#include "spp/harness/presets.hpp"

#include <cstdio>

#include "spp/constants.hpp"
#include "spp/error.hpp"
#include "spp/waveguide.hpp"

namespace spp {

std::vector<DispersionRow> dispersion_table(const RunConfig& config, std::span<const double> f_grid) {
  config.validate();
  const GrapheneParams params = config.graphene();
  const ChemicalPotential mu = chemical_potential(params);
  std::vector<DispersionRow> rows;
  rows.reserve(f_grid.size());
  for (double f : f_grid) {
    const SppMode m = make_mode(params, mu, constants::two_pi * f, config.drive.frequency_convention);
    rows.push_back({f, m.beta_prime, m.alpha, m.Gamma, m.v_g, m.xi});
  }
  return rows;
}

namespace {

std::string ghz_label(double hz) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fm=%gGHz", hz / 1e9);
  return buf;
}

std::string pump_label(double photons) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "pump=%g", photons);
  return buf;
}

// Grids are read off the plotted axis ranges.
Preset frequency_series(std::string name, std::string description, SweepAxis axis, std::vector<double> grid,
                        RunConfig base, std::initializer_list<double> fm_values) {
  Preset p{std::move(name), std::move(description), false, axis, std::move(grid), {}};
  for (double fm : fm_values) {
    RunConfig c = base;
    c.drive.fm_hz = fm;
    p.series.push_back({ghz_label(fm), c});
  }
  return p;
}

Preset pump_series(std::string name, std::string description, std::vector<double> grid, RunConfig base,
                   std::initializer_list<double> pumps) {
  Preset p{std::move(name), std::move(description), false, SweepAxis::Frequency, std::move(grid), {}};
  for (double pump : pumps) {
    RunConfig c = base;
    c.drive.pump_photons = pump;
    p.series.push_back({pump_label(pump), c});
  }
  return p;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig2",  "fig3a", "fig3b", "fig4a", "fig4b",
                                                 "fig5a", "fig5b", "fig6a", "fig6b"};
  return names;
}

Preset make_preset(std::string_view name, const RunConfig& base) {
  RunConfig ref = base;
  ref.geometry.L = 2.7e-6;
  ref.drive.pump_photons = 1e6;
  ref.drive.Nm = 1e4;

  if (name == "fig2") {
    Preset p{"fig2", "propagation constant and decay rate versus optical frequency", true, SweepAxis::Frequency,
             linspace(150e12, 250e12, 51), {}};
    p.series.push_back({"dispersion", base});
    return p;
  }
  if (name == "fig3a" || name == "fig3b") {
    return frequency_series(std::string(name),
                            name == "fig3a" ? "Lambda versus interaction length" : "n3 versus interaction length",
                            SweepAxis::Length, linspace(0.5e-6, 6e-6, 56), ref, {5e9, 15e9, 45e9});
  }
  if (name == "fig4a") {
    return frequency_series("fig4a", "Lambda versus pump intensity, low microwave frequencies", SweepAxis::Pump,
                            linspace(1e6, 3e7, 59), ref, {5e9, 15e9, 20e9});
  }
  if (name == "fig4b") {
    return frequency_series("fig4b", "Lambda versus pump intensity, high microwave frequencies", SweepAxis::Pump,
                            linspace(1e6, 3e7, 59), ref, {60e9, 80e9, 90e9});
  }
  if (name == "fig5a" || name == "fig5b") {
    return frequency_series(std::string(name),
                            name == "fig5a" ? "Lambda versus microwave photon number"
                                            : "n3 versus microwave photon number",
                            SweepAxis::Photons, linspace(1e2, 1e4, 45), ref, {5e9, 15e9, 45e9});
  }
  if (name == "fig6a") {
    return pump_series("fig6a", "Lambda versus microwave frequency, moderate pump", linspace(1e9, 119e9, 60), ref,
                       {9e6, 10.9e6, 12.9e6});
  }
  if (name == "fig6b") {
    return pump_series("fig6b", "Lambda versus microwave frequency, strong pump", linspace(1e9, 119e9, 60), ref,
                       {1.9e7, 2.1e7, 2.4e7});
  }
  throw ConfigError("unknown preset '" + std::string(name) + "'");
}

nlohmann::json Preset::metadata() const {
  nlohmann::json j;
  j["preset"] = name;
  j["description"] = description;
  j["axis"] = dispersion ? "optical_frequency" : to_string(axis);
  j["assumed_range"] = {{"from", grid.front()}, {"to", grid.back()}, {"points", grid.size()}};
  j["range_note"] = "grid ranges are read from plotted axes and are assumptions";
  j["series"] = nlohmann::json::array();
  for (const auto& s : series) j["series"].push_back({{"label", s.label}, {"config", to_json(s.config)}});
  return j;
}

}  // namespace spp
