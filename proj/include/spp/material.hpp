#ifndef SPP_MATERIAL_HPP
#define SPP_MATERIAL_HPP

#include <complex>

namespace spp {

using cplx = std::complex<double>;

/// How the carrier frequency enters the conductivity denominators.
///   AsPrinted: (omega/2pi + i/tau), literally as in the source model.
///   Angular:   (omega + i/tau).
enum class FrequencyConvention { AsPrinted, Angular };

/// Perturbative-validity ratios above this value are flagged.
inline constexpr double kPerturbativeWarnRatio = 0.1;

/// Material and environment constants of the graphene-loaded capacitor.
/// n0 is a sheet density (1/m^2).
struct GrapheneParams {
  double n0 = 1e18;       // 1/m^2
  double tau = 0.5e-12;   // s
  double T = 3e-3;        // K
  double Vf = 1e6;        // m/s
  double eps_r = 1.0;     // gap filler
  double d = 1e-6;        // m

  /// Capacitance per unit area, eps0 * eps_r / d.
  double capacitance() const;

  /// Throws DomainError when any invariant is violated.
  void validate() const;
};

/// Chemical potential split into its static part and its first-order
/// sensitivity to the capacitor voltage.
struct ChemicalPotential {
  double mu_prime = 0.0;   // J
  double mu_dprime = 0.0;  // J/V
  // mu_dprime * V_ref / mu_prime for the reference voltage supplied by the caller.
  double validity_ratio = 0.0;

  double at(double voltage) const { return mu_prime + voltage * mu_dprime; }
  bool perturbative() const { return validity_ratio <= kPerturbativeWarnRatio; }
};

ChemicalPotential chemical_potential(const GrapheneParams& params, double v_ref = 0.0);

/// Sheet conductivity and its first-order voltage coefficient. The interband
/// and intraband contributions are kept separately for inspection.
struct Conductivity {
  cplx sigma_prime;         // S
  cplx sigma_dprime;        // S/V
  cplx interband_prime;
  cplx intraband_prime;
  cplx interband_dprime;
  cplx intraband_dprime;
};

Conductivity conductivity(const GrapheneParams& params, const ChemicalPotential& mu, double omega,
                          FrequencyConvention convention = FrequencyConvention::AsPrinted);

/// ln(1 + e^(-x)) without underflow or overflow; exactly 0 for x > 700.
double log1p_exp_neg(double x);

}  // namespace spp

#endif  // SPP_MATERIAL_HPP
