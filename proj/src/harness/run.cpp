#include "spp/harness/run.hpp"

#include <algorithm>
#include <cmath>

#include "spp/constants.hpp"
#include "spp/coupling.hpp"
#include "spp/entanglement.hpp"
#include "spp/waveguide.hpp"

#ifndef SPP_VERSION
#define SPP_VERSION "0.0.0"
#endif

namespace spp {

const std::string& code_version() {
  static const std::string version = SPP_VERSION;
  return version;
}

bool RunResult::operator==(const RunResult& o) const {
  return lambda == o.lambda && lambda_imag == o.lambda_imag && entangled == o.entangled && n3 == o.n3 &&
         n2_proxy == o.n2_proxy && t_end == o.t_end && dt_accepted == o.dt_accepted &&
         convergence_delta == o.convergence_delta && halvings == o.halvings &&
         conjugate_drift == o.conjugate_drift && g2 == o.g2 && g3 == o.g3 && modes == o.modes &&
         diagnostics == o.diagnostics && to_json(config) == to_json(o.config) && code_version == o.code_version;
}

namespace {

ModeSummary summarize(const char* role, const SppMode& m) {
  return ModeSummary{role, m.frequency_hz(), m.beta_prime, m.alpha, m.Gamma, m.v_g, m.xi};
}

}  // namespace

RunResult run_single(const RunConfig& config, std::vector<MomentState>* trajectory) {
  config.validate();
  const GrapheneParams params = config.graphene();
  const Geometry geom = config.geometry_params();
  const FrequencyConvention convention = config.drive.frequency_convention;

  const double omega_1 = constants::two_pi * config.drive.f1_hz;
  const double omega_m = constants::two_pi * config.drive.fm_hz;
  const double v_vac = microwave_vacuum_voltage(omega_m, geom);
  const ChemicalPotential mu = chemical_potential(params, v_vac);

  const SppMode pump = make_mode(params, mu, omega_1, convention);
  const SppMode upper = make_mode(params, mu, omega_1 + omega_m, convention);
  const SppMode lower = make_mode(params, mu, omega_1 - omega_m, convention);

  const cplx I12 = mode_overlap(pump, upper);
  const cplx I13 = mode_overlap(pump, lower);
  const CouplingRates rates = conversion_rates(pump, upper, lower, geom, omega_m, I12, I13);

  SystemParams sp;
  sp.g2 = rates.g2;
  sp.g3 = rates.g3;
  sp.Gamma2 = upper.Gamma;
  sp.Gamma3 = lower.Gamma;
  sp.Gamma_m = config.drive.Gamma_m;
  sp.A = std::sqrt(config.drive.pump_photons);
  sp.N_m = config.drive.Nm;
  sp.b0_convention = config.drive.b0_convention;
  sp.pump_letter = config.drive.pump_letter;

  const LinearSystem system = build_system(sp);
  const MomentState state0 = initial_state(sp);
  // The interaction time is set by the pump carrier.
  const double t_end = geom.L / pump.v_g;
  const double dt0 = config.numerics.dt0.value_or(t_end / 100.0);
  const Convergence conv =
      convergence_check(system, state0, t_end, dt0, config.numerics.method, config.numerics.convergence_target);

  if (trajectory) integrate(system, state0, t_end, conv.dt, config.numerics.method, trajectory);

  const DuanResult duan = duan_lambda(conv.final);
  const MomentDiagnostics md = assess(conv.final, sp.N_m);
  const Conductivity sigma_pump = conductivity(params, mu, omega_1, convention);

  RunResult r;
  r.lambda = duan.lambda;
  r.lambda_imag = duan.lambda_imag;
  r.entangled = duan.entangled;
  r.n3 = conv.final[Moment::A3dA3].real();
  r.t_end = t_end;
  r.dt_accepted = conv.dt;
  r.convergence_delta = conv.delta;
  r.halvings = conv.halvings;
  r.conjugate_drift = md.conjugate_drift;
  r.g2 = rates.g2;
  r.g3 = rates.g3;
  r.modes = {summarize("pump", pump), summarize("upper", upper), summarize("lower", lower)};

  auto& d = r.diagnostics;
  d.mu_validity_ratio = mu.validity_ratio;
  d.sigma_perturbation_ratio = std::abs(v_vac * sigma_pump.sigma_dprime) / std::abs(sigma_pump.sigma_prime);
  d.eps_eff_imag_ratio =
      std::max({pump.eps_eff_imag_ratio(), upper.eps_eff_imag_ratio(), lower.eps_eff_imag_ratio()});
  d.containment_exponent = containment_exponent(pump, geom.d);
  d.I12 = I12;
  d.I13 = I13;
  d.occupation_imag = md.occupation_imag;
  d.min_occupation = md.min_occupation;
  d.first_moment_pairing = md.first_moment_pairing;
  d.lambda_imag_flagged = duan.imag_flagged();
  d.perturbative = mu.perturbative() && d.sigma_perturbation_ratio <= kPerturbativeWarnRatio;

  r.config = config;
  r.code_version = code_version();
  return r;
}

}  // namespace spp
