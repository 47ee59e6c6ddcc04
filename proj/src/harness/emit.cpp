#include "spp/harness/emit.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "spp/error.hpp"

namespace spp {

using nlohmann::json;

namespace {

constexpr const char* kEol = "\r\n";

json number(double v) { return std::isfinite(v) ? json(round_significant(v)) : json(nullptr); }

json pair(cplx z) { return json::array({number(z.real()), number(z.imag())}); }

cplx read_pair(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

double read_number(const json& j) { return j.is_null() ? std::nan("") : j.get<double>(); }

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw ConfigError("unknown format '" + std::string(name) + "' (csv|json)");
}

double round_significant(double value) {
  if (!std::isfinite(value) || value == 0.0) return value;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", kSignificantDigits, value);
  return std::strtod(buf, nullptr);
}

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", kSignificantDigits, value);
  return buf;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string_view sweep_csv_header() {
  return "axis_value,lambda,lambda_imag,n3,entangled,t_end_s,dt_s,conjugate_drift,re_g2,im_g2,re_g3,im_g3";
}

RunResult rounded(RunResult r) {
  auto rd = [](double& v) { v = round_significant(v); };
  auto rc = [](cplx& z) { z = {round_significant(z.real()), round_significant(z.imag())}; };
  rd(r.lambda);
  rd(r.lambda_imag);
  rd(r.n3);
  rd(r.t_end);
  rd(r.dt_accepted);
  rd(r.convergence_delta);
  rd(r.conjugate_drift);
  rc(r.g2);
  rc(r.g3);
  for (auto& m : r.modes) {
    rd(m.f_hz);
    rc(m.beta);
    rc(m.alpha);
    rd(m.gamma);
    rd(m.v_g);
    rd(m.xi);
  }
  auto& d = r.diagnostics;
  rd(d.mu_validity_ratio);
  rd(d.sigma_perturbation_ratio);
  rd(d.eps_eff_imag_ratio);
  rd(d.containment_exponent);
  rc(d.I12);
  rc(d.I13);
  rd(d.occupation_imag);
  rd(d.min_occupation);
  rd(d.first_moment_pairing);
  return r;
}

json to_json(const RunResult& r) {
  json j;
  j["code_version"] = r.code_version;
  j["lambda"] = number(r.lambda);
  j["lambda_imag"] = number(r.lambda_imag);
  j["entangled"] = r.entangled;
  j["n3"] = number(r.n3);
  j["n2_proxy"] = r.n2_proxy ? number(*r.n2_proxy) : json(nullptr);
  j["t_end_s"] = number(r.t_end);
  j["dt_s"] = number(r.dt_accepted);
  j["convergence_delta"] = number(r.convergence_delta);
  j["halvings"] = r.halvings;
  j["conjugate_drift"] = number(r.conjugate_drift);
  j["g2"] = pair(r.g2);
  j["g3"] = pair(r.g3);
  j["modes"] = json::array();
  for (const auto& m : r.modes) {
    j["modes"].push_back({{"role", m.role},
                          {"f_hz", number(m.f_hz)},
                          {"beta", pair(m.beta)},
                          {"alpha", pair(m.alpha)},
                          {"gamma", number(m.gamma)},
                          {"v_g", number(m.v_g)},
                          {"xi", number(m.xi)}});
  }
  const auto& d = r.diagnostics;
  j["diagnostics"] = {{"mu_validity_ratio", number(d.mu_validity_ratio)},
                      {"sigma_perturbation_ratio", number(d.sigma_perturbation_ratio)},
                      {"eps_eff_imag_ratio", number(d.eps_eff_imag_ratio)},
                      {"containment_exponent", number(d.containment_exponent)},
                      {"I12", pair(d.I12)},
                      {"I13", pair(d.I13)},
                      {"occupation_imag", number(d.occupation_imag)},
                      {"min_occupation", number(d.min_occupation)},
                      {"first_moment_pairing", number(d.first_moment_pairing)},
                      {"lambda_imag_flagged", d.lambda_imag_flagged},
                      {"perturbative", d.perturbative}};
  j["config"] = to_json(r.config);
  return j;
}

RunResult result_from_json(const json& j) {
  try {
    RunResult r;
    r.code_version = j.at("code_version").get<std::string>();
    r.lambda = read_number(j.at("lambda"));
    r.lambda_imag = read_number(j.at("lambda_imag"));
    r.entangled = j.at("entangled").get<bool>();
    r.n3 = read_number(j.at("n3"));
    if (!j.at("n2_proxy").is_null()) r.n2_proxy = j.at("n2_proxy").get<double>();
    r.t_end = read_number(j.at("t_end_s"));
    r.dt_accepted = read_number(j.at("dt_s"));
    r.convergence_delta = read_number(j.at("convergence_delta"));
    r.halvings = j.at("halvings").get<int>();
    r.conjugate_drift = read_number(j.at("conjugate_drift"));
    r.g2 = read_pair(j.at("g2"));
    r.g3 = read_pair(j.at("g3"));
    const auto& modes = j.at("modes");
    for (std::size_t k = 0; k < r.modes.size(); ++k) {
      const auto& m = modes.at(k);
      r.modes[k] = ModeSummary{m.at("role").get<std::string>(), read_number(m.at("f_hz")),
                               read_pair(m.at("beta")),          read_pair(m.at("alpha")),
                               read_number(m.at("gamma")),       read_number(m.at("v_g")),
                               read_number(m.at("xi"))};
    }
    const auto& dj = j.at("diagnostics");
    auto& d = r.diagnostics;
    d.mu_validity_ratio = read_number(dj.at("mu_validity_ratio"));
    d.sigma_perturbation_ratio = read_number(dj.at("sigma_perturbation_ratio"));
    d.eps_eff_imag_ratio = read_number(dj.at("eps_eff_imag_ratio"));
    d.containment_exponent = read_number(dj.at("containment_exponent"));
    d.I12 = read_pair(dj.at("I12"));
    d.I13 = read_pair(dj.at("I13"));
    d.occupation_imag = read_number(dj.at("occupation_imag"));
    d.min_occupation = read_number(dj.at("min_occupation"));
    d.first_moment_pairing = read_number(dj.at("first_moment_pairing"));
    d.lambda_imag_flagged = dj.at("lambda_imag_flagged").get<bool>();
    d.perturbative = dj.at("perturbative").get<bool>();
    r.config = config_from_json(j.at("config"));
    return r;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed result document: ") + e.what());
  }
}

json sweep_to_json(std::span<const SweepRow> rows, SweepAxis axis) {
  json j;
  j["axis"] = to_string(axis);
  j["rows"] = json::array();
  for (const auto& row : rows) {
    json r = {{"axis_value", number(row.axis_value)}};
    if (row.result) {
      r["result"] = to_json(*row.result);
    } else {
      r["error"] = row.error;
    }
    j["rows"].push_back(std::move(r));
  }
  return j;
}

namespace {

void write_result_fields(std::ostream& out, const RunResult& r) {
  out << ',' << format_number(r.lambda) << ',' << format_number(r.lambda_imag) << ',' << format_number(r.n3)
      << ',' << (r.entangled ? "true" : "false") << ',' << format_number(r.t_end) << ','
      << format_number(r.dt_accepted) << ',' << format_number(r.conjugate_drift) << ','
      << format_number(r.g2.real()) << ',' << format_number(r.g2.imag()) << ',' << format_number(r.g3.real())
      << ',' << format_number(r.g3.imag());
}

}  // namespace

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << sweep_csv_header() << kEol;
  for (const auto& row : rows) {
    out << format_number(row.axis_value);
    if (row.result) {
      write_result_fields(out, *row.result);
    } else {
      // Failed point: the message goes in the classification column.
      out << ",,,," << csv_field("error: " + row.error) << ",,,,,,,";
    }
    out << kEol;
  }
}

void write_run_csv(std::ostream& out, const RunResult& result) {
  out << sweep_csv_header() << kEol;
  write_result_fields(out, result);
  out << kEol;
}

void write_dispersion_csv(std::ostream& out, std::span<const DispersionRow> rows) {
  out << "f_hz,re_beta,im_beta,re_alpha,gamma,v_g,xi" << kEol;
  for (const auto& r : rows) {
    out << format_number(r.f_hz) << ',' << format_number(r.beta.real()) << ',' << format_number(r.beta.imag())
        << ',' << format_number(r.alpha.real()) << ',' << format_number(r.gamma) << ','
        << format_number(r.v_g) << ',' << format_number(r.xi) << kEol;
  }
}

void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  writer(out);
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace spp
