#include "spp/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "spp/entanglement.hpp"
#include "spp/error.hpp"
#include "spp/ode.hpp"

namespace spp {

namespace {

constexpr const char* kModule = "dynamics";

bool finite(const MomentVector& x) {
  for (int k = 0; k < kMomentCount; ++k) {
    if (!std::isfinite(x(k).real()) || !std::isfinite(x(k).imag())) return false;
  }
  return true;
}

}  // namespace

const std::array<std::string_view, kMomentCount>& moment_names() {
  static const std::array<std::string_view, kMomentCount> names = {
      "A2", "A3", "B", "A2d", "A3d", "Bd", "A3B", "A3A2", "A3dA3", "A3dBd", "A3dA2d", "BdB", "BdA2", "BdA3d"};
  return names;
}

void SystemParams::validate() const {
  if (!(Gamma2 >= 0.0) || !(Gamma3 >= 0.0) || !(Gamma_m >= 0.0)) {
    throw DomainError(kModule, "decay rates must be non-negative");
  }
  if (!(A >= 0.0)) throw DomainError(kModule, "pump amplitude must be non-negative");
  if (!(N_m >= 0.0)) throw DomainError(kModule, "microwave photon number must be non-negative");
}

MomentState initial_state(const SystemParams& params) {
  params.validate();
  MomentState s;
  if (params.b0_convention == B0Convention::Coherent) {
    s[Moment::B] = std::sqrt(params.N_m);
    s[Moment::Bd] = std::sqrt(params.N_m);
  }
  s[Moment::BdB] = params.N_m;
  // Optical occupations start at zero, so every factorized cross moment
  // sqrt(<B+B>) sqrt(<A+A>) vanishes as well.
  return s;
}

LinearSystem build_system(const SystemParams& p) {
  p.validate();
  using M = Moment;
  const cplx A{p.A, 0.0};
  const cplx Ac = std::conj(A);
  const cplx A1 = p.pump_letter == PumpLetter::AsPrinted ? cplx{0.0, p.A} : A;
  const cplx g2 = p.g2, g3 = p.g3;
  const cplx g2c = std::conj(g2), g3c = std::conj(g3);

  LinearSystem sys;
  auto set = [&sys](M row, M col, cplx v) { sys.M(index(row), index(col)) += v; };

  // First moments and their conjugates.
  set(M::A2, M::A2, -p.Gamma2 / 2.0);
  set(M::A2, M::B, g2 * A);

  set(M::A3, M::A3, -p.Gamma3 / 2.0);
  set(M::A3, M::Bd, g3 * A);

  set(M::B, M::B, -p.Gamma_m / 2.0);
  set(M::B, M::A2, -g2 * Ac);
  set(M::B, M::A3d, g3 * A);

  set(M::A2d, M::A2d, -p.Gamma2 / 2.0);
  set(M::A2d, M::Bd, g2c * Ac);

  set(M::A3d, M::A3d, -p.Gamma3 / 2.0);
  set(M::A3d, M::B, g3c * Ac);

  set(M::Bd, M::Bd, -p.Gamma_m / 2.0);
  set(M::Bd, M::A2d, -g2c * A);
  set(M::Bd, M::A3, g3c * Ac);

  // Second moments. <A3 A3+> in the <A3 B> equation is closed as <A3+ A3> + 1.
  set(M::A3B, M::A3B, -p.Gamma_m / 2.0);
  set(M::A3B, M::A3A2, -g2 * Ac);
  set(M::A3B, M::A3dA3, g3 * A);
  sys.c(index(M::A3B)) = g3 * A;

  set(M::A3A2, M::A3A2, -p.Gamma2 / 2.0);
  set(M::A3A2, M::A3B, g2 * A);

  set(M::A3dA3, M::A3dA3, -p.Gamma3 / 2.0);
  set(M::A3dA3, M::A3dBd, g3 * A);

  set(M::A3dBd, M::A3dBd, -p.Gamma_m / 2.0);
  set(M::A3dBd, M::A3dA2d, -g2 * A);
  set(M::A3dBd, M::A3dA3, g3 * Ac);

  set(M::A3dA2d, M::A3dA2d, -p.Gamma2 / 2.0);
  set(M::A3dA2d, M::A3dBd, g2 * Ac);

  set(M::BdB, M::BdB, -p.Gamma_m / 2.0);
  set(M::BdB, M::BdA2, -g2 * std::conj(A1));
  set(M::BdB, M::BdA3d, g3 * A1);

  set(M::BdA2, M::BdA2, -p.Gamma2 / 2.0);
  set(M::BdA2, M::BdB, g2 * A);

  set(M::BdA3d, M::BdA3d, -p.Gamma_m / 2.0);
  set(M::BdA3d, M::BdB, g3 * Ac);

  return sys;
}

MomentState integrate(const LinearSystem& system, const MomentState& state0, double t_end, double dt,
                      Method method, std::vector<MomentState>* trajectory) {
  if (!(t_end > 0.0)) throw DomainError(kModule, "t_end must be positive");
  if (!(dt > 0.0)) throw DomainError(kModule, "dt must be positive");

  const long steps = ode::step_count(t_end, dt);
  MomentState s = state0;
  s.t = 0.0;
  if (trajectory) {
    trajectory->clear();
    trajectory->reserve(static_cast<std::size_t>(steps) + 1);
    trajectory->push_back(s);
  }
  for (long k = 0; k < steps; ++k) {
    const bool last = k + 1 == steps;
    const double h = last ? t_end - static_cast<double>(k) * dt : dt;
    if (method == Method::Rk4) {
      ode::rk4_step(system.M, system.c, s.x, h);
    } else {
      ode::euler_step(system.M, system.c, s.x, h);
    }
    s.t = last ? t_end : static_cast<double>(k + 1) * dt;
    if (!finite(s.x)) {
      throw NumericError(kModule, "non-finite moment at step " + std::to_string(k + 1));
    }
    if (trajectory) trajectory->push_back(s);
  }
  return s;
}

Convergence convergence_check(const LinearSystem& system, const MomentState& state0, double t_end,
                              double dt0, Method method, double target, int max_halvings) {
  if (!(dt0 > 0.0)) throw DomainError(kModule, "dt0 must be positive");
  double dt = std::min(dt0, t_end);
  double previous = duan_lambda(integrate(system, state0, t_end, dt, method)).lambda;
  for (int k = 1; k <= max_halvings; ++k) {
    dt *= 0.5;
    MomentState final = integrate(system, state0, t_end, dt, method);
    const double current = duan_lambda(final).lambda;
    const double change = std::abs(current - previous);
    const double delta = change == 0.0 ? 0.0 : change / std::abs(current);
    if (delta < target) return Convergence{dt, delta, k, final};
    previous = current;
  }
  throw NumericError(kModule, "Lambda did not converge within " + std::to_string(max_halvings) + " halvings");
}

MomentDiagnostics assess(const MomentState& s, double N_m) {
  MomentDiagnostics d;
  const double scale = std::max(1.0, N_m);
  d.occupation_imag = std::max(std::abs(s[Moment::A3dA3].imag()), std::abs(s[Moment::BdB].imag())) / scale;
  d.min_occupation = std::min(s[Moment::A3dA3].real(), s[Moment::BdB].real());
  d.conjugate_drift = std::abs(s[Moment::A3dBd] - std::conj(s[Moment::A3B]));
  d.first_moment_pairing = std::max({std::abs(s[Moment::A2d] - std::conj(s[Moment::A2])),
                                     std::abs(s[Moment::A3d] - std::conj(s[Moment::A3])),
                                     std::abs(s[Moment::Bd] - std::conj(s[Moment::B]))});
  return d;
}

void write_trajectory_csv(std::ostream& out, const std::vector<MomentState>& trajectory) {
  out << "t_s";
  for (auto name : moment_names()) out << ",re_" << name << ",im_" << name;
  out << "\r\n";
  char buf[32];
  for (const auto& s : trajectory) {
    std::snprintf(buf, sizeof buf, "%.12g", s.t);
    out << buf;
    for (int k = 0; k < kMomentCount; ++k) {
      std::snprintf(buf, sizeof buf, ",%.12g", s.x(k).real());
      out << buf;
      std::snprintf(buf, sizeof buf, ",%.12g", s.x(k).imag());
      out << buf;
    }
    out << "\r\n";
  }
}

}  // namespace spp
