// Command-line front end: dispersion tables, single runs and parameter sweeps.
//
// Exit codes: 0 success, 1 configuration or I/O error, 2 numeric error.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spp/error.hpp"
#include "spp/harness/emit.hpp"
#include "spp/harness/presets.hpp"
#include "spp/harness/run.hpp"
#include "spp/harness/sweep.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Options {
  std::string config_path;
  std::string out_path;
  std::string format;
  std::string trajectory_path;
  std::string preset;
  std::string axis;
  std::optional<double> from;
  std::optional<double> to;
  int points = 0;
  unsigned threads = 0;
};

spp::RunConfig load(const Options& opt) {
  return opt.config_path.empty() ? spp::RunConfig{} : spp::load_config(opt.config_path);
}

// Writes to --out when given, stdout otherwise.
void deliver(const Options& opt, const std::function<void(std::ostream&)>& writer) {
  if (opt.out_path.empty()) {
    writer(std::cout);
    std::cout.flush();
  } else {
    spp::write_file(opt.out_path, writer);
  }
}

fs::path sibling(const fs::path& base, const std::string& tag, const std::string& ext) {
  fs::path p = base;
  p.replace_filename(base.stem().string() + "." + tag + ext);
  return p;
}

std::string file_tag(std::string label) {
  for (char& ch : label) {
    if (ch == '=' || ch == '/' || ch == ' ') ch = '_';
  }
  return label;
}

void write_dispersion(const Options& opt, const std::vector<spp::DispersionRow>& rows, spp::Format format) {
  if (format == spp::Format::Csv) {
    deliver(opt, [&](std::ostream& out) { spp::write_dispersion_csv(out, rows); });
    return;
  }
  json j = json::array();
  for (const auto& r : rows) {
    j.push_back({{"f_hz", r.f_hz},
                 {"re_beta", r.beta.real()},
                 {"im_beta", r.beta.imag()},
                 {"re_alpha", r.alpha.real()},
                 {"gamma", r.gamma},
                 {"v_g", r.v_g},
                 {"xi", r.xi}});
  }
  deliver(opt, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
}

int cmd_dispersion(const Options& opt) {
  const spp::RunConfig cfg = load(opt);
  const auto grid = spp::linspace(opt.from.value_or(150e12), opt.to.value_or(250e12), opt.points > 0 ? opt.points : 51);
  const auto format = opt.format.empty() ? spp::Format::Csv : spp::parse_format(opt.format);
  write_dispersion(opt, spp::dispersion_table(cfg, grid), format);
  return 0;
}

int cmd_run(const Options& opt) {
  spp::RunConfig cfg = load(opt);
  if (!opt.trajectory_path.empty()) cfg.numerics.emit_trajectory = true;

  std::vector<spp::MomentState> trajectory;
  const spp::RunResult result = spp::run_single(cfg, cfg.numerics.emit_trajectory ? &trajectory : nullptr);

  if (cfg.numerics.emit_trajectory) {
    fs::path path = opt.trajectory_path;
    if (path.empty()) path = opt.out_path.empty() ? fs::path("trajectory.csv") : sibling(opt.out_path, "trajectory", ".csv");
    spp::write_file(path, [&](std::ostream& out) { spp::write_trajectory_csv(out, trajectory); });
  }

  const auto format = opt.format.empty() ? spp::Format::Json : spp::parse_format(opt.format);
  deliver(opt, [&](std::ostream& out) {
    if (format == spp::Format::Json) {
      out << spp::to_json(result).dump(2) << '\n';
    } else {
      spp::write_run_csv(out, result);
    }
  });
  return 0;
}

int cmd_sweep(const Options& opt) {
  const spp::RunConfig cfg = load(opt);
  const auto format = opt.format.empty() ? spp::Format::Csv : spp::parse_format(opt.format);

  spp::Preset preset;
  if (!opt.preset.empty()) {
    preset = spp::make_preset(opt.preset, cfg);
  } else {
    if (opt.axis.empty() || !opt.from || !opt.to || opt.points < 1) {
      throw spp::ConfigError("sweep needs --preset, or --axis with --from, --to and --points");
    }
    preset.name = "custom";
    preset.description = "user-defined sweep";
    preset.axis = spp::parse_axis(opt.axis);
    preset.grid = spp::linspace(*opt.from, *opt.to, opt.points);
    preset.series.push_back({"custom", cfg});
  }

  if (preset.dispersion) {
    write_dispersion(opt, spp::dispersion_table(preset.series.front().config, preset.grid), format);
    return 0;
  }

  struct Series {
    std::string label;
    std::vector<spp::SweepRow> rows;
  };
  std::vector<Series> results;
  bool any_failed = false;
  for (const auto& s : preset.series) {
    results.push_back({s.label, spp::sweep(s.config, preset.axis, preset.grid, opt.threads)});
    for (const auto& row : results.back().rows) any_failed = any_failed || !row.result;
  }

  if (format == spp::Format::Json) {
    json j;
    j["metadata"] = preset.metadata();
    j["series"] = json::array();
    for (const auto& s : results) {
      j["series"].push_back({{"label", s.label}, {"sweep", spp::sweep_to_json(s.rows, preset.axis)}});
    }
    deliver(opt, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
  } else if (results.size() == 1) {
    deliver(opt, [&](std::ostream& out) { spp::write_sweep_csv(out, results.front().rows); });
  } else if (!opt.out_path.empty()) {
    const fs::path base = opt.out_path;
    for (const auto& s : results) {
      spp::write_file(sibling(base, file_tag(s.label), base.extension().string()),
                      [&](std::ostream& out) { spp::write_sweep_csv(out, s.rows); });
    }
    spp::write_file(sibling(base, "meta", ".json"),
                    [&](std::ostream& out) { out << preset.metadata().dump(2) << '\n'; });
  } else {
    for (const auto& s : results) {
      std::cout << "# series: " << s.label << '\n';
      spp::write_sweep_csv(std::cout, s.rows);
      std::cout << '\n';
    }
  }
  if (any_failed) std::cerr << "warning: some grid points failed; see the error cells\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Microwave-optical entanglement in a graphene plasmonic capacitor"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "JSON run configuration")->check(CLI::ExistingFile);
    sub->add_option("--out", opt.out_path, "output file (default: stdout)");
    sub->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };

  auto* dispersion = app.add_subcommand("dispersion", "mode table versus optical frequency");
  add_common(dispersion);
  dispersion->add_option("--from", opt.from, "first frequency (Hz)");
  dispersion->add_option("--to", opt.to, "last frequency (Hz)");
  dispersion->add_option("--points", opt.points, "number of grid points");

  auto* run = app.add_subcommand("run", "single end-to-end run");
  add_common(run);
  run->add_option("--emit-trajectory", opt.trajectory_path, "write the moment trajectory CSV to this path");

  auto* sweep = app.add_subcommand("sweep", "parameter sweep (preset or custom axis)");
  add_common(sweep);
  sweep->add_option("--preset", opt.preset, "figure preset")->check(CLI::IsMember(spp::preset_names()));
  sweep->add_option("--axis", opt.axis, "length|pump|photons|frequency");
  sweep->add_option("--from", opt.from, "first grid value (SI units)");
  sweep->add_option("--to", opt.to, "last grid value (SI units)");
  sweep->add_option("--points", opt.points, "number of grid points");
  sweep->add_option("--threads", opt.threads, "worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*dispersion) return cmd_dispersion(opt);
    if (*run) return cmd_run(opt);
    return cmd_sweep(opt);
  } catch (const spp::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const spp::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const spp::Error& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return 2;
  }
}
