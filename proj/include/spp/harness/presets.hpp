#ifndef SPP_HARNESS_PRESETS_HPP
#define SPP_HARNESS_PRESETS_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "spp/harness/sweep.hpp"

namespace spp {

/// One row of the dispersion table (mode quantities versus optical frequency).
struct DispersionRow {
  double f_hz = 0.0;
  cplx beta;
  cplx alpha;
  double gamma = 0.0;
  double v_g = 0.0;
  double xi = 0.0;
};

std::vector<DispersionRow> dispersion_table(const RunConfig& config, std::span<const double> f_grid);

/// A curve of a figure preset: the swept grid is shared, the fixed
/// parameters differ per series.
struct SeriesSpec {
  std::string label;
  RunConfig config;
};

struct Preset {
  std::string name;
  std::string description;
  bool dispersion = false;   // fig2 emits a dispersion table instead of runs
  SweepAxis axis = SweepAxis::Length;
  std::vector<double> grid;
  std::vector<SeriesSpec> series;

  /// Grid range, density and fixed values, for emission alongside the data.
  nlohmann::json metadata() const;
};

const std::vector<std::string>& preset_names();

/// Builds a preset on top of `base` (material, numerics and any values the
/// preset does not fix are taken from it).
Preset make_preset(std::string_view name, const RunConfig& base = {});

}  // namespace spp

#endif  // SPP_HARNESS_PRESETS_HPP
