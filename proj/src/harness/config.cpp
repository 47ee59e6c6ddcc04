#include "spp/harness/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>

#include "spp/error.hpp"

namespace spp {

using nlohmann::json;

namespace {

template <typename Enum>
Enum parse_enum(const json& value, const std::string& key, const std::map<std::string, Enum>& names) {
  if (!value.is_string()) throw ConfigError(key + " must be a string");
  const auto it = names.find(value.get<std::string>());
  if (it == names.end()) {
    std::string options;
    for (const auto& [name, _] : names) options += (options.empty() ? "" : ", ") + name;
    throw ConfigError(key + " must be one of: " + options);
  }
  return it->second;
}

const std::map<std::string, B0Convention> kB0 = {{"coherent", B0Convention::Coherent},
                                                 {"zero", B0Convention::Zero}};
const std::map<std::string, PumpLetter> kPump = {{"uniform_A", PumpLetter::UniformA},
                                                 {"as_printed", PumpLetter::AsPrinted}};
const std::map<std::string, FrequencyConvention> kFreq = {{"as_printed", FrequencyConvention::AsPrinted},
                                                          {"angular", FrequencyConvention::Angular}};
const std::map<std::string, Method> kMethod = {{"rk4", Method::Rk4}, {"euler", Method::Euler}};

template <typename Enum>
std::string name_of(Enum v, const std::map<std::string, Enum>& names) {
  for (const auto& [name, value] : names) {
    if (value == v) return name;
  }
  return "?";
}

double number(const json& value, const std::string& key) {
  if (!value.is_number()) throw ConfigError(key + " must be a number");
  return value.get<double>();
}

using Handler = std::function<void(const json&)>;

// Applies handlers to the members of `block`; any key without a handler is rejected.
void read_block(const json& block, const std::string& name, const std::map<std::string, Handler>& handlers) {
  if (!block.is_object()) throw ConfigError(name + " must be an object");
  for (const auto& [key, value] : block.items()) {
    const auto it = handlers.find(key);
    if (it == handlers.end()) throw ConfigError("unknown key '" + name + "." + key + "'");
    it->second(value);
  }
}

}  // namespace

std::string to_string(B0Convention v) { return name_of(v, kB0); }
std::string to_string(PumpLetter v) { return name_of(v, kPump); }
std::string to_string(FrequencyConvention v) { return name_of(v, kFreq); }
std::string to_string(Method v) { return name_of(v, kMethod); }

GrapheneParams RunConfig::graphene() const {
  GrapheneParams p;
  p.n0 = material.n0;
  p.tau = material.tau;
  p.T = material.T;
  p.Vf = material.Vf;
  p.eps_r = material.eps_r;
  p.d = geometry.d;
  return p;
}

Geometry RunConfig::geometry_params() const {
  return Geometry::make(geometry.L, geometry.W, geometry.d, material.eps_r);
}

void RunConfig::validate() const {
  auto positive = [](double v, const char* key) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(std::string(key) + " must be positive");
  };
  auto non_negative = [](double v, const char* key) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw ConfigError(std::string(key) + " must be non-negative");
  };
  positive(material.n0, "material.n0");
  positive(material.tau, "material.tau");
  positive(material.T, "material.T");
  positive(material.Vf, "material.Vf");
  if (!(material.eps_r >= 1.0)) throw ConfigError("material.eps_r must be >= 1");
  positive(geometry.L, "geometry.L");
  positive(geometry.W, "geometry.W");
  positive(geometry.d, "geometry.d");
  positive(drive.f1_hz, "drive.f1_hz");
  positive(drive.fm_hz, "drive.fm_hz");
  if (!(drive.fm_hz < drive.f1_hz)) throw ConfigError("drive.fm_hz must be below drive.f1_hz");
  non_negative(drive.pump_photons, "drive.pump_photons");
  non_negative(drive.Nm, "drive.Nm");
  non_negative(drive.Gamma_m, "drive.Gamma_m");
  if (numerics.dt0) positive(*numerics.dt0, "numerics.dt0");
  positive(numerics.convergence_target, "numerics.convergence_target");
}

RunConfig config_from_json(const json& doc) {
  RunConfig cfg;
  if (!doc.is_object()) throw ConfigError("configuration must be a JSON object");

  auto num = [](double& slot, const std::string& key) {
    return Handler([&slot, key](const json& v) { slot = number(v, key); });
  };

  std::map<std::string, Handler> top = {
      {"material",
       [&](const json& b) {
         auto& m = cfg.material;
         read_block(b, "material",
                    {{"n0", num(m.n0, "material.n0")},
                     {"tau", num(m.tau, "material.tau")},
                     {"T", num(m.T, "material.T")},
                     {"Vf", num(m.Vf, "material.Vf")},
                     {"eps_r", num(m.eps_r, "material.eps_r")}});
       }},
      {"geometry",
       [&](const json& b) {
         auto& g = cfg.geometry;
         read_block(b, "geometry",
                    {{"L", num(g.L, "geometry.L")}, {"W", num(g.W, "geometry.W")}, {"d", num(g.d, "geometry.d")}});
       }},
      {"drive",
       [&](const json& b) {
         auto& d = cfg.drive;
         read_block(b, "drive",
                    {{"f1_hz", num(d.f1_hz, "drive.f1_hz")},
                     {"fm_hz", num(d.fm_hz, "drive.fm_hz")},
                     {"pump_photons", num(d.pump_photons, "drive.pump_photons")},
                     {"Nm", num(d.Nm, "drive.Nm")},
                     {"Gamma_m", num(d.Gamma_m, "drive.Gamma_m")},
                     {"b0_convention",
                      [&](const json& v) { d.b0_convention = parse_enum(v, "drive.b0_convention", kB0); }},
                     {"pump_letter", [&](const json& v) { d.pump_letter = parse_enum(v, "drive.pump_letter", kPump); }},
                     {"frequency_convention", [&](const json& v) {
                        d.frequency_convention = parse_enum(v, "drive.frequency_convention", kFreq);
                      }}});
       }},
      {"numerics",
       [&](const json& b) {
         auto& n = cfg.numerics;
         read_block(b, "numerics",
                    {{"method", [&](const json& v) { n.method = parse_enum(v, "numerics.method", kMethod); }},
                     {"dt0",
                      [&](const json& v) {
                        if (v.is_null()) {
                          n.dt0.reset();
                        } else {
                          n.dt0 = number(v, "numerics.dt0");
                        }
                      }},
                     {"convergence_target", num(n.convergence_target, "numerics.convergence_target")},
                     {"emit_trajectory", [&](const json& v) {
                        if (!v.is_boolean()) throw ConfigError("numerics.emit_trajectory must be a boolean");
                        n.emit_trajectory = v.get<bool>();
                      }}});
       }},
  };
  read_block(doc, "config", top);
  cfg.validate();
  return cfg;
}

json to_json(const RunConfig& cfg) {
  json j;
  j["material"] = {{"n0", cfg.material.n0},
                   {"tau", cfg.material.tau},
                   {"T", cfg.material.T},
                   {"Vf", cfg.material.Vf},
                   {"eps_r", cfg.material.eps_r}};
  j["geometry"] = {{"L", cfg.geometry.L}, {"W", cfg.geometry.W}, {"d", cfg.geometry.d}};
  j["drive"] = {{"f1_hz", cfg.drive.f1_hz},
                {"fm_hz", cfg.drive.fm_hz},
                {"pump_photons", cfg.drive.pump_photons},
                {"Nm", cfg.drive.Nm},
                {"Gamma_m", cfg.drive.Gamma_m},
                {"b0_convention", to_string(cfg.drive.b0_convention)},
                {"pump_letter", to_string(cfg.drive.pump_letter)},
                {"frequency_convention", to_string(cfg.drive.frequency_convention)}};
  j["numerics"] = {{"method", to_string(cfg.numerics.method)},
                   {"dt0", cfg.numerics.dt0 ? json(*cfg.numerics.dt0) : json(nullptr)},
                   {"convergence_target", cfg.numerics.convergence_target},
                   {"emit_trajectory", cfg.numerics.emit_trajectory}};
  return j;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("invalid JSON in '" + path.string() + "': " + e.what());
  }
  return config_from_json(doc);
}

}  // namespace spp
