#ifndef SPP_HARNESS_EMIT_HPP
#define SPP_HARNESS_EMIT_HPP

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"
#include "spp/harness/presets.hpp"
#include "spp/harness/sweep.hpp"

namespace spp {

enum class Format { Csv, Json };

Format parse_format(std::string_view name);

inline constexpr int kSignificantDigits = 12;

/// `value` rounded to 12 significant digits (the precision of every emitted number).
double round_significant(double value);

/// "%.12g" rendering; empty for NaN is never produced, NaN prints as "nan".
std::string format_number(double value);

/// RFC-4180 field: quoted when it contains a comma, quote, CR or LF.
std::string csv_field(std::string_view text);

/// Column header of sweep tables.
std::string_view sweep_csv_header();

/// Result with every reported number rounded as it is emitted. The
/// configuration echo is kept exact.
RunResult rounded(RunResult result);

nlohmann::json to_json(const RunResult& result);
RunResult result_from_json(const nlohmann::json& doc);

nlohmann::json sweep_to_json(std::span<const SweepRow> rows, SweepAxis axis);

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);
void write_run_csv(std::ostream& out, const RunResult& result);
void write_dispersion_csv(std::ostream& out, std::span<const DispersionRow> rows);

/// Opens `path` for writing, runs `writer`, and surfaces failures as IoError.
void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer);

}  // namespace spp

#endif  // SPP_HARNESS_EMIT_HPP
