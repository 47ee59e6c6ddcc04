#include "spp/coupling.hpp"

#include <cmath>
#include <string>

#include "spp/constants.hpp"
#include "spp/error.hpp"

namespace spp {

namespace {

constexpr const char* kModule = "coupling";

// 1/2 eps'' sinc(dbL/2) e^(i dbL/2) sqrt(2 w_pump w_side hbar w_m / (C A eps_pump eps_side)) I / sqrt(xi xi)
cplx rate(const SppMode& pump, const SppMode& side, cplx mismatch, const Geometry& geom, double omega_m,
          cplx overlap) {
  const double radicand = 2.0 * pump.omega * side.omega * constants::hbar * omega_m /
                          (geom.C * geom.area() * pump.eps_eff_prime.real() * side.eps_eff_prime.real());
  if (!(radicand >= 0.0) || !std::isfinite(radicand)) {
    throw NumericError(kModule, "negative or non-finite radicand in conversion rate");
  }
  const cplx phase = 0.5 * mismatch * geom.L;
  const cplx i{0.0, 1.0};
  return 0.5 * side.eps_eff_dprime * complex_sinc(phase) * std::exp(i * phase) * std::sqrt(radicand) *
         overlap / std::sqrt(pump.xi * side.xi);
}

}  // namespace

Geometry Geometry::make(double L, double W, double d, double eps_r) {
  Geometry g;
  g.L = L;
  g.W = W;
  g.d = d;
  g.C = constants::eps0 * eps_r / d;
  g.validate();
  return g;
}

void Geometry::validate() const {
  if (!(L > 0.0) || !(W > 0.0) || !(d > 0.0) || !(C > 0.0)) {
    throw DomainError(kModule, "geometry values must be positive");
  }
}

cplx complex_sinc(cplx z) {
  if (std::abs(z) < 1e-4) {
    const cplx z2 = z * z;
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sin(z) / z;
}

double microwave_vacuum_voltage(double omega_m, const Geometry& geom) {
  return std::sqrt(2.0 * constants::hbar * omega_m / (geom.C * geom.area()));
}

CouplingRates conversion_rates(const SppMode& pump, const SppMode& upper, const SppMode& lower,
                               const Geometry& geom, double omega_m, cplx I12, cplx I13) {
  geom.validate();
  if (!(omega_m > 0.0)) throw DomainError(kModule, "omega_m must be positive");
  const double tol = 1e-9 * pump.omega;
  if (std::abs(upper.omega - (pump.omega + omega_m)) > tol ||
      std::abs(lower.omega - (pump.omega - omega_m)) > tol) {
    throw DomainError(kModule, "sideband frequencies inconsistent with pump +/- omega_m");
  }
  CouplingRates r;
  r.delta_beta_12 = pump.beta_prime - upper.beta_prime;
  r.delta_beta_31 = lower.beta_prime - pump.beta_prime;
  r.g2 = rate(pump, upper, r.delta_beta_12, geom, omega_m, I12);
  r.g3 = rate(pump, lower, r.delta_beta_31, geom, omega_m, I13);
  return r;
}

}  // namespace spp
