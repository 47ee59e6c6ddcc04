#include "spp/harness/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "spp/error.hpp"

namespace spp {

std::string to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::Length: return "length";
    case SweepAxis::Pump: return "pump";
    case SweepAxis::Photons: return "photons";
    case SweepAxis::Frequency: return "frequency";
  }
  return "?";
}

SweepAxis parse_axis(std::string_view name) {
  for (auto axis : {SweepAxis::Length, SweepAxis::Pump, SweepAxis::Photons, SweepAxis::Frequency}) {
    if (to_string(axis) == name) return axis;
  }
  throw ConfigError("unknown sweep axis '" + std::string(name) + "' (length|pump|photons|frequency)");
}

RunConfig with_axis(RunConfig config, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::Length: config.geometry.L = value; break;
    case SweepAxis::Pump: config.drive.pump_photons = value; break;
    case SweepAxis::Photons: config.drive.Nm = value; break;
    case SweepAxis::Frequency: config.drive.fm_hz = value; break;
  }
  return config;
}

std::vector<SweepRow> sweep(const RunConfig& config, SweepAxis axis, std::span<const double> grid,
                            unsigned threads) {
  if (grid.empty()) throw ConfigError("sweep grid is empty");
  if (!std::is_sorted(grid.begin(), grid.end())) throw ConfigError("sweep grid must be ascending");

  std::vector<SweepRow> rows(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      rows[i].axis_value = grid[i];
      try {
        rows[i].result = run_single(with_axis(config, axis, grid[i]));
      } catch (const std::exception& e) {
        rows[i].error = e.what();
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(grid.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return rows;
}

std::vector<double> linspace(double from, double to, int points) {
  if (points < 1) throw ConfigError("points must be >= 1");
  if (points == 1) return {from};
  std::vector<double> out(static_cast<std::size_t>(points));
  const double step = (to - from) / (points - 1);
  for (int k = 0; k < points; ++k) out[static_cast<std::size_t>(k)] = from + step * k;
  out.back() = to;
  return out;
}

}  // namespace spp
