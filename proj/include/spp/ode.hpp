#ifndef SPP_ODE_HPP
#define SPP_ODE_HPP

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace spp::ode {

// Fixed-step integrators for the affine linear system x' = M x + c. Templated
// on the Eigen types so fixed-size blocks (3x3 subsystems, 14x14 moment
// systems) share one implementation.

template <typename Matrix, typename Vector>
Vector affine_rhs(const Matrix& M, const Vector& c, const Vector& x) {
  Vector dx = c;
  dx.noalias() += M * x;
  return dx;
}

template <typename Matrix, typename Vector>
void euler_step(const Matrix& M, const Vector& c, Vector& x, double dt) {
  x += dt * affine_rhs(M, c, x);
}

template <typename Matrix, typename Vector>
void rk4_step(const Matrix& M, const Vector& c, Vector& x, double dt) {
  const Vector k1 = affine_rhs(M, c, x);
  const Vector k2 = affine_rhs(M, c, Vector(x + 0.5 * dt * k1));
  const Vector k3 = affine_rhs(M, c, Vector(x + 0.5 * dt * k2));
  const Vector k4 = affine_rhs(M, c, Vector(x + dt * k3));
  x += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

/// Number of steps covering [0, t_end] with step dt, the last possibly shorter.
inline long step_count(double t_end, double dt) {
  const double n = t_end / dt;
  const double whole = std::floor(n);
  // Absorb a remainder below round-off instead of taking a ~0-length step.
  return static_cast<long>(n - whole > 1e-9 ? whole + 1.0 : std::max(whole, 1.0));
}

}  // namespace spp::ode

#endif  // SPP_ODE_HPP
