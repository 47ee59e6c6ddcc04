#ifndef SPP_HARNESS_RUN_HPP
#define SPP_HARNESS_RUN_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spp/dynamics.hpp"
#include "spp/harness/config.hpp"

namespace spp {

/// Library version stamped into every result.
const std::string& code_version();

/// Waveguide quantities of one optical mode, as reported in results.
struct ModeSummary {
  std::string role;   // pump | upper | lower
  double f_hz = 0.0;
  cplx beta;
  cplx alpha;
  double gamma = 0.0;
  double v_g = 0.0;
  double xi = 0.0;

  bool operator==(const ModeSummary&) const = default;
};

struct RunDiagnostics {
  double mu_validity_ratio = 0.0;        // V_vac mu'' / mu'
  double sigma_perturbation_ratio = 0.0; // |V_vac sigma''| / |sigma'| at the pump
  double eps_eff_imag_ratio = 0.0;       // max over the three modes
  double containment_exponent = 0.0;     // Re(alpha) d / 2 of the pump
  cplx I12;
  cplx I13;
  double occupation_imag = 0.0;
  double min_occupation = 0.0;
  double first_moment_pairing = 0.0;
  bool lambda_imag_flagged = false;
  bool perturbative = true;

  bool operator==(const RunDiagnostics&) const = default;
};

struct RunResult {
  double lambda = 0.0;
  double lambda_imag = 0.0;
  bool entangled = false;
  double n3 = 0.0;                    // Re <A3+A3>(t_end)
  std::optional<double> n2_proxy;     // <A2+A2> is not evolved; always absent
  double t_end = 0.0;
  double dt_accepted = 0.0;
  double convergence_delta = 0.0;
  int halvings = 0;
  double conjugate_drift = 0.0;
  cplx g2;
  cplx g3;
  std::array<ModeSummary, 3> modes;
  RunDiagnostics diagnostics;
  RunConfig config;
  std::string code_version;

  /// Field-wise equality; the configuration is compared via its JSON echo.
  bool operator==(const RunResult& other) const;
};

/// End-to-end evaluation: material -> modes -> rates -> moment dynamics -> Lambda.
/// When `trajectory` is non-null it receives the full trajectory at the accepted step.
RunResult run_single(const RunConfig& config, std::vector<MomentState>* trajectory = nullptr);

}  // namespace spp

#endif  // SPP_HARNESS_RUN_HPP
