#ifndef SPP_HARNESS_SWEEP_HPP
#define SPP_HARNESS_SWEEP_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spp/harness/run.hpp"

namespace spp {

enum class SweepAxis { Length, Pump, Photons, Frequency };

std::string to_string(SweepAxis axis);
SweepAxis parse_axis(std::string_view name);

/// One grid point. Exactly one of `result` or `error` is populated.
struct SweepRow {
  double axis_value = 0.0;
  std::optional<RunResult> result;
  std::string error;
};

/// `config` with the swept quantity replaced by `value`.
RunConfig with_axis(RunConfig config, SweepAxis axis, double value);

/// Evaluates every grid point (in parallel when `threads` != 1; 0 means all
/// hardware threads). Rows come back in grid order; failures are recorded in
/// the row and do not stop the sweep.
std::vector<SweepRow> sweep(const RunConfig& config, SweepAxis axis, std::span<const double> grid,
                            unsigned threads = 0);

std::vector<double> linspace(double from, double to, int points);

}  // namespace spp

#endif  // SPP_HARNESS_SWEEP_HPP
