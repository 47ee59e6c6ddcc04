#ifndef SPP_WAVEGUIDE_HPP
#define SPP_WAVEGUIDE_HPP

#include <complex>
#include <functional>

#include "spp/material.hpp"

namespace spp {

/// Per-frequency quantities of the TM surface-plasmon mode on the sheet.
struct SppMode {
  double omega = 0.0;      // rad/s
  double k0 = 0.0;         // rad/m
  double eps_r = 1.0;      // surrounding medium
  cplx beta_prime;         // rad/m
  cplx beta_dprime;        // rad/m per V
  cplx alpha;              // 1/m
  cplx eps_eff_prime;
  cplx eps_eff_dprime;     // 1/V
  double Gamma = 0.0;      // 1/s, 2 v_g Im(beta')
  double v_g = 0.0;        // m/s, df/dRe(beta)
  double xi = 0.0;

  double frequency_hz() const;
  /// |Im eps_eff'| / |Re eps_eff'|; the normalizers use the real part only.
  double eps_eff_imag_ratio() const;
};

/// Transverse integrals of the mode profile (closed form).
struct ModeProfileIntegrals {
  double int_Dy2 = 0.0;   // integral |D_y|^2 dx
  double int_Dxz2 = 0.0;  // integral (|D_x|^2 + |D_z|^2) dx
  double V_L = 0.0;       // area * int_Dxz2
};

/// beta = k0 sqrt(1 - (2 / (Z0 sigma))^2), branch Re > 0, Im >= 0.
cplx solve_dispersion(cplx sigma_prime, double omega);

/// First-order voltage coefficient of beta.
cplx perturbed_beta(cplx beta_prime, const Conductivity& sigma);

/// alpha = sqrt(beta^2 - eps k0^2), branch Re > 0.
cplx transverse_alpha(cplx beta_prime, double k0, double eps_r);

/// Maps angular frequency to the complex propagation constant.
using Dispersion = std::function<cplx(double omega)>;

/// Group velocity df/dRe(beta) by Richardson-refined central differences.
double group_velocity(const Dispersion& dispersion, double omega);

/// The propagation constant as a function of frequency for fixed material.
Dispersion material_dispersion(const GrapheneParams& params, const ChemicalPotential& mu,
                               FrequencyConvention convention);

/// Builds the full mode at one frequency.
SppMode make_mode(const GrapheneParams& params, const ChemicalPotential& mu, double omega,
                  FrequencyConvention convention = FrequencyConvention::AsPrinted);

ModeProfileIntegrals mode_integrals(const SppMode& mode, double area);

/// Normalized cross integral of the (D_x, D_z) profiles of two modes.
cplx mode_overlap(const SppMode& m, const SppMode& n);

/// Free-Hamiltonian matching factor; always > 1/2.
double xi_factor(const SppMode& mode);

/// Re(alpha) * d / 2, the decay exponent of the field at the electrodes.
double containment_exponent(const SppMode& mode, double d);

}  // namespace spp

#endif  // SPP_WAVEGUIDE_HPP
