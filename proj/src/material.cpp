#include "spp/material.hpp"

#include <cmath>
#include <string>

#include "spp/constants.hpp"
#include "spp/error.hpp"

namespace spp {

namespace {

constexpr const char* kModule = "material";

void require_finite(const cplx& v, const char* term) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw NumericError(kModule, std::string("non-finite value in conductivity term '") + term + "'");
  }
}

}  // namespace

double GrapheneParams::capacitance() const { return constants::eps0 * eps_r / d; }

void GrapheneParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError(kModule, std::string(name) + " must be positive and finite");
    }
  };
  positive(n0, "n0");
  positive(tau, "tau");
  positive(T, "T");
  positive(Vf, "Vf");
  positive(d, "d");
  if (!(eps_r >= 1.0) || !std::isfinite(eps_r)) {
    throw DomainError(kModule, "eps_r must be >= 1");
  }
}

ChemicalPotential chemical_potential(const GrapheneParams& params, double v_ref) {
  params.validate();
  const double root = std::sqrt(constants::pi * params.n0);
  ChemicalPotential mu;
  mu.mu_prime = constants::hbar * params.Vf * root;
  mu.mu_dprime = constants::hbar * params.Vf * params.capacitance() / (constants::q * root);
  mu.validity_ratio = std::abs(v_ref) * mu.mu_dprime / mu.mu_prime;
  return mu;
}

double log1p_exp_neg(double x) {
  if (x > 700.0) return 0.0;
  if (x < -700.0) return -x;  // ln(e^-x (1 + e^x)) ~ -x
  return x >= 0.0 ? std::log1p(std::exp(-x)) : -x + std::log1p(std::exp(x));
}

Conductivity conductivity(const GrapheneParams& params, const ChemicalPotential& mu, double omega,
                          FrequencyConvention convention) {
  using namespace constants;
  if (!(omega > 0.0)) throw DomainError(kModule, "omega must be positive");
  if (!(mu.mu_prime > 0.0)) throw DomainError(kModule, "mu_prime must be positive");

  const cplx i{0.0, 1.0};
  const double freq = convention == FrequencyConvention::AsPrinted ? omega / two_pi : omega;
  const cplx rate = freq + i / params.tau;  // (omega/2pi + i/tau) or (omega + i/tau)
  const double kt = k_B * params.T;
  const double x = mu.mu_prime / kt;

  Conductivity s;
  s.interband_prime = i * q * q / (4.0 * pi * hbar) *
                      std::log((2.0 * mu.mu_prime - rate * hbar) / (2.0 * mu.mu_prime + rate * hbar));
  require_finite(s.interband_prime, "interband sigma'");

  // kT (mu/kT + 2 ln(1 + e^(-mu/kT))) = mu + 2 kT ln(1 + e^(-mu/kT)), which stays finite as T -> 0.
  const cplx drude = i * q * q / (pi * hbar * hbar * rate);
  require_finite(drude, "intraband prefactor");
  s.intraband_prime = drude * (mu.mu_prime + 2.0 * kt * log1p_exp_neg(x));
  require_finite(s.intraband_prime, "intraband sigma'");

  s.interband_dprime = i * q * q / (pi * hbar) * (rate * hbar) /
                       (4.0 * mu.mu_prime * mu.mu_prime - rate * rate * hbar * hbar) * mu.mu_dprime;
  require_finite(s.interband_dprime, "interband sigma''");

  s.intraband_dprime = drude * std::tanh(0.5 * x) * mu.mu_dprime;
  require_finite(s.intraband_dprime, "intraband sigma''");

  s.sigma_prime = s.interband_prime + s.intraband_prime;
  s.sigma_dprime = s.interband_dprime + s.intraband_dprime;
  return s;
}

}  // namespace spp
