#ifndef SPP_TESTS_REFERENCE_HPP
#define SPP_TESTS_REFERENCE_HPP

// The default operating point as a moment system, and its exact propagator.

#include <unsupported/Eigen/MatrixFunctions>

#include "spp/constants.hpp"
#include "spp/coupling.hpp"
#include "spp/dynamics.hpp"
#include "spp/waveguide.hpp"

namespace reference {

struct Setup {
  spp::SystemParams params;
  double t_end = 0.0;
};

inline Setup default_setup() {
  using namespace spp;
  const GrapheneParams gp;
  const auto mu = chemical_potential(gp);
  const double w1 = constants::two_pi * 193e12;
  const double wm = constants::two_pi * 45e9;
  const auto pump = make_mode(gp, mu, w1);
  const auto upper = make_mode(gp, mu, w1 + wm);
  const auto lower = make_mode(gp, mu, w1 - wm);
  const auto geom = Geometry::make(2.7e-6, 1e-6, 1e-6, 1.0);
  const auto r =
      conversion_rates(pump, upper, lower, geom, wm, mode_overlap(pump, upper), mode_overlap(pump, lower));
  Setup s;
  s.params.g2 = r.g2;
  s.params.g3 = r.g3;
  s.params.Gamma2 = upper.Gamma;
  s.params.Gamma3 = lower.Gamma;
  s.params.Gamma_m = 1e6;
  s.params.A = 1e3;
  s.params.N_m = 1e4;
  s.t_end = geom.L / pump.v_g;
  return s;
}

// x(t) for x' = M x + c through the exponential of the augmented generator.
inline spp::MomentVector exact(const spp::LinearSystem& sys, const spp::MomentVector& x0, double t) {
  using spp::cplx;
  Eigen::Matrix<cplx, 15, 15> aug = Eigen::Matrix<cplx, 15, 15>::Zero();
  aug.topLeftCorner<14, 14>() = sys.M * t;
  aug.topRightCorner<14, 1>() = sys.c * t;
  Eigen::Matrix<cplx, 15, 1> y;
  y << x0, cplx{1.0, 0.0};
  return (aug.exp() * y).head<14>();
}

inline double state_error(const spp::MomentVector& a, const spp::MomentVector& b) {
  return (a - b).norm() / b.norm();
}

// Log-log slope of the final-state error over dt = t_end/n, t_end/2n, t_end/4n.
inline double order_slope(const Setup& s, spp::Method method, double n) {
  const auto sys = spp::build_system(s.params);
  const auto x0 = spp::initial_state(s.params);
  const auto ref = exact(sys, x0.x, s.t_end);
  double logh[3], loge[3];
  for (int k = 0; k < 3; ++k) {
    const double dt = s.t_end / (n * (1 << k));
    logh[k] = std::log(dt);
    loge[k] = std::log(state_error(spp::integrate(sys, x0, s.t_end, dt, method).x, ref));
  }
  return (loge[2] - loge[0]) / (logh[2] - logh[0]);
}

}  // namespace reference

#endif  // SPP_TESTS_REFERENCE_HPP
