#ifndef SPP_COUPLING_HPP
#define SPP_COUPLING_HPP

#include <complex>

#include "spp/waveguide.hpp"

namespace spp {

/// Capacitor and waveguide geometry. Plate area is L * W.
struct Geometry {
  double L = 2.7e-6;   // m
  double W = 1e-6;     // m
  double d = 1e-6;     // m
  double C = 0.0;      // F/m^2

  static Geometry make(double L, double W, double d, double eps_r);

  double area() const { return L * W; }
  void validate() const;
};

/// Conversion rates of the upper (g2) and lower (g3) sideband processes and
/// the phase mismatches they were evaluated with.
struct CouplingRates {
  cplx g2;              // rad/s
  cplx g3;              // rad/s
  cplx delta_beta_12;   // beta1 - beta2
  cplx delta_beta_31;   // beta3 - beta1
};

/// sin(z)/z on the complex plane, series form near the origin.
cplx complex_sinc(cplx z);

/// Single-photon voltage amplitude sqrt(2 hbar omega_m / (C A_r)).
double microwave_vacuum_voltage(double omega_m, const Geometry& geom);

CouplingRates conversion_rates(const SppMode& pump, const SppMode& upper, const SppMode& lower,
                               const Geometry& geom, double omega_m, cplx I12, cplx I13);

}  // namespace spp

#endif  // SPP_COUPLING_HPP
