#include "spp/waveguide.hpp"

#include <cmath>
#include <sstream>

#include "spp/constants.hpp"
#include "spp/error.hpp"

namespace spp {

namespace {

constexpr const char* kModule = "waveguide";

bool forward_lossy(cplx b) { return b.real() > 0.0 && b.imag() >= 0.0; }

std::string describe(cplx z) {
  std::ostringstream os;
  os.precision(10);
  os << "(" << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i)";
  return os.str();
}

// Squared modulus integral of (D_x, D_z) with the 1/(omega eps eps0) scale removed.
double profile_norm(const SppMode& m) { return std::norm(m.beta_prime) + std::norm(m.alpha); }

}  // namespace

double SppMode::frequency_hz() const { return omega / constants::two_pi; }

double SppMode::eps_eff_imag_ratio() const {
  return std::abs(eps_eff_prime.imag()) / std::abs(eps_eff_prime.real());
}

cplx solve_dispersion(cplx sigma_prime, double omega) {
  if (sigma_prime == cplx{}) throw DomainError(kModule, "sigma' must be non-zero");
  if (!(omega > 0.0)) throw DomainError(kModule, "omega must be positive");
  const double k0 = omega / constants::c;
  const cplx ratio = 2.0 / (constants::Z0 * sigma_prime);
  const cplx root = k0 * std::sqrt(1.0 - ratio * ratio);
  if (forward_lossy(root)) return root;
  if (forward_lossy(-root)) return -root;
  throw NumericError(kModule, "dispersion branch ambiguity: roots " + describe(root) + " and " +
                                  describe(-root) + " both violate Re(beta) > 0, Im(beta) >= 0");
}

cplx perturbed_beta(cplx beta_prime, const Conductivity& sigma) {
  const cplx half = 0.5 * constants::Z0 * sigma.sigma_prime;
  const cplx denom = 1.0 - half * half;
  if (std::abs(denom) < 1e-12) {
    throw NumericError(kModule, "resonant conductivity: 1 - (Z0 sigma'/2)^2 vanishes");
  }
  return beta_prime / denom * (sigma.sigma_dprime / sigma.sigma_prime);
}

cplx transverse_alpha(cplx beta_prime, double k0, double eps_r) {
  cplx a = std::sqrt(beta_prime * beta_prime - eps_r * k0 * k0);
  if (a.real() < 0.0) a = -a;
  if (!(a.real() > 0.0)) {
    throw DomainError(kModule, "mode not confined: alpha = " + describe(a) + " has no branch with Re > 0");
  }
  return a;
}

double group_velocity(const Dispersion& dispersion, double omega) {
  constexpr int kMaxRefinements = 10;
  constexpr double kTolerance = 1e-6;
  const double f = omega / constants::two_pi;

  // d Re(beta) / df by central differences with step h (Hz).
  auto slope = [&](double h) {
    const double up = dispersion(constants::two_pi * (f + h)).real();
    const double down = dispersion(constants::two_pi * (f - h)).real();
    return (up - down) / (2.0 * h);
  };

  double h = 1e-4 * f;
  double coarse = slope(h);
  double previous = std::nan("");
  for (int k = 0; k < kMaxRefinements; ++k) {
    h *= 0.5;
    const double fine = slope(h);
    const double estimate = (4.0 * fine - coarse) / 3.0;
    if (std::isfinite(previous) && std::abs(estimate - previous) <= kTolerance * std::abs(estimate)) {
      if (!(estimate > 0.0)) throw NumericError(kModule, "non-positive dRe(beta)/df");
      return 1.0 / estimate;
    }
    previous = estimate;
    coarse = fine;
  }
  throw NumericError(kModule, "group velocity did not converge after 10 refinements");
}

Dispersion material_dispersion(const GrapheneParams& params, const ChemicalPotential& mu,
                               FrequencyConvention convention) {
  return [params, mu, convention](double w) {
    return solve_dispersion(conductivity(params, mu, w, convention).sigma_prime, w);
  };
}

SppMode make_mode(const GrapheneParams& params, const ChemicalPotential& mu, double omega,
                  FrequencyConvention convention) {
  const Conductivity sigma = conductivity(params, mu, omega, convention);
  SppMode m;
  m.omega = omega;
  m.k0 = omega / constants::c;
  m.eps_r = params.eps_r;
  m.beta_prime = solve_dispersion(sigma.sigma_prime, omega);
  m.beta_dprime = perturbed_beta(m.beta_prime, sigma);
  m.alpha = transverse_alpha(m.beta_prime, m.k0, params.eps_r);
  m.eps_eff_prime = (m.beta_prime / m.k0) * (m.beta_prime / m.k0);
  m.eps_eff_dprime = 2.0 * m.beta_prime * m.beta_dprime / (m.k0 * m.k0);
  m.v_g = group_velocity(material_dispersion(params, mu, convention), omega);
  m.Gamma = 2.0 * m.v_g * m.beta_prime.imag();
  m.xi = xi_factor(m);
  return m;
}

ModeProfileIntegrals mode_integrals(const SppMode& mode, double area) {
  const double re_alpha = mode.alpha.real();
  if (!(re_alpha > 0.0)) throw DomainError(kModule, "mode not confined");
  const double scale = mode.omega * mode.eps_r * constants::eps0;
  ModeProfileIntegrals out;
  // |exp(-alpha |x|)|^2 = exp(-2 Re(alpha) |x|), integrated over both half-lines.
  out.int_Dy2 = 1.0 / re_alpha;
  out.int_Dxz2 = profile_norm(mode) / (scale * scale) / re_alpha;
  out.V_L = area * out.int_Dxz2;
  return out;
}

cplx mode_overlap(const SppMode& m, const SppMode& n) {
  const cplx decay = std::conj(m.alpha) + n.alpha;
  if (!(decay.real() > 0.0) || !(m.alpha.real() > 0.0) || !(n.alpha.real() > 0.0)) {
    throw DomainError(kModule, "overlap requires confined modes (Re alpha > 0)");
  }
  const cplx cross =
      2.0 * (std::conj(m.beta_prime) * n.beta_prime + std::conj(m.alpha) * n.alpha) / decay;
  const double self_m = profile_norm(m) / m.alpha.real();
  const double self_n = profile_norm(n) / n.alpha.real();
  return cross / std::sqrt(self_m * self_n);
}

double xi_factor(const SppMode& mode) {
  if (!(mode.alpha.real() > 0.0)) throw DomainError(kModule, "mode not confined");
  const double scale = mode.omega * mode.eps_r * constants::eps0;
  // int|D_y|^2 / int(|D_x|^2 + |D_z|^2); the common 1/Re(alpha) cancels.
  const double ratio = scale * scale / profile_norm(mode);
  return 0.5 + constants::mu0 / (2.0 * constants::eps0 * mode.eps_eff_prime.real()) * ratio;
}

double containment_exponent(const SppMode& mode, double d) { return mode.alpha.real() * d / 2.0; }

}  // namespace spp
