#ifndef SPP_HARNESS_CONFIG_HPP
#define SPP_HARNESS_CONFIG_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "spp/coupling.hpp"
#include "spp/dynamics.hpp"
#include "spp/material.hpp"

namespace spp {

/// Everything a run needs. SI units throughout: frequencies in Hz, lengths in
/// metres, temperatures in kelvin. Defaults are the reference operating point.
struct RunConfig {
  struct Material {
    double n0 = 1e18;
    double tau = 0.5e-12;
    double T = 3e-3;
    double Vf = 1e6;
    double eps_r = 1.0;
  } material;

  struct GeometryBlock {
    double L = 2.7e-6;
    double W = 1e-6;
    double d = 1e-6;
  } geometry;

  struct Drive {
    double f1_hz = 193e12;
    double fm_hz = 45e9;
    double pump_photons = 1e6;   // |A1|^2
    double Nm = 1e4;             // initial <B+B>
    double Gamma_m = 1e6;        // 1/s
    B0Convention b0_convention = B0Convention::Coherent;
    PumpLetter pump_letter = PumpLetter::UniformA;
    FrequencyConvention frequency_convention = FrequencyConvention::AsPrinted;
  } drive;

  struct Numerics {
    Method method = Method::Rk4;
    std::optional<double> dt0;   // default t_end / 100
    double convergence_target = 1e-6;
    bool emit_trajectory = false;
  } numerics;

  GrapheneParams graphene() const;
  Geometry geometry_params() const;

  /// Throws ConfigError on any invalid value.
  void validate() const;
};

RunConfig config_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const RunConfig& config);
RunConfig load_config(const std::filesystem::path& path);

std::string to_string(B0Convention v);
std::string to_string(PumpLetter v);
std::string to_string(FrequencyConvention v);
std::string to_string(Method v);

}  // namespace spp

#endif  // SPP_HARNESS_CONFIG_HPP
