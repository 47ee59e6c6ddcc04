#ifndef SPP_TESTS_QUADRATURE_HPP
#define SPP_TESTS_QUADRATURE_HPP

// Numeric mode-profile integrals used to check the closed forms.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>

#include "spp/constants.hpp"
#include "spp/waveguide.hpp"

namespace quadrature {

using cplx = std::complex<double>;

// Integral over the real line of an even function, by adaptive Gauss-Kronrod on [0, cut].
template <typename F>
cplx integrate_even(F f, double cut) {
  using boost::math::quadrature::gauss_kronrod;
  auto re = [&](double x) { return f(x).real(); };
  auto im = [&](double x) { return f(x).imag(); };
  const double r = gauss_kronrod<double, 61>::integrate(re, 0.0, cut / 4, 12, 1e-12) +
                   gauss_kronrod<double, 61>::integrate(re, cut / 4, cut, 12, 1e-12);
  const double i = gauss_kronrod<double, 61>::integrate(im, 0.0, cut / 4, 12, 1e-12) +
                   gauss_kronrod<double, 61>::integrate(im, cut / 4, cut, 12, 1e-12);
  return 2.0 * cplx{r, i};
}

// Field components of a mode, without the common amplitude.
struct Profile {
  spp::SppMode m;
  double scale() const { return m.omega * m.eps_r * spp::constants::eps0; }
  cplx envelope(double x) const { return std::exp(-m.alpha * std::abs(x)); }
  cplx dx(double x) const { return cplx{0, 1} * m.beta_prime / scale() * envelope(x); }
  cplx dz(double x) const { return cplx{0, 1} * m.alpha / scale() * envelope(x); }
  double cut() const { return 20.0 / m.alpha.real(); }
};

struct Integrals {
  double dy2 = 0.0;
  double dxz2 = 0.0;
};

inline Integrals self_integrals(const Profile& p) {
  Integrals out;
  out.dy2 = integrate_even([&](double x) { return cplx{std::norm(p.envelope(x)), 0.0}; }, p.cut()).real();
  out.dxz2 =
      integrate_even([&](double x) { return cplx{std::norm(p.dx(x)) + std::norm(p.dz(x)), 0.0}; }, p.cut()).real();
  return out;
}

inline cplx overlap(const Profile& p, const Profile& q) {
  const cplx cross = integrate_even(
      [&](double x) { return std::conj(p.dx(x)) * q.dx(x) + std::conj(p.dz(x)) * q.dz(x); },
      std::max(p.cut(), q.cut()));
  return cross / std::sqrt(self_integrals(p).dxz2 * self_integrals(q).dxz2);
}

inline double xi(const Profile& p) {
  const auto s = self_integrals(p);
  return 0.5 + spp::constants::mu0 / (2.0 * spp::constants::eps0 * p.m.eps_eff_prime.real()) * s.dy2 / s.dxz2;
}

}  // namespace quadrature

#endif  // SPP_TESTS_QUADRATURE_HPP
