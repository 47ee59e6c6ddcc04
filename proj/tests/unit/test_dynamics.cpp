#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include "doctest.h"
#include "spp/constants.hpp"
#include "spp/coupling.hpp"
#include "spp/dynamics.hpp"
#include "spp/entanglement.hpp"
#include "spp/error.hpp"
#include "spp/waveguide.hpp"
#include "support/oracle.hpp"
#include "support/reference.hpp"

using namespace spp;
using M = Moment;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

using reference::default_setup;
using reference::exact;
using reference::state_error;

}  // namespace

TEST_CASE("moment names") {
  const auto& names = moment_names();
  CHECK(names.front() == "A2");
  CHECK(names[index(M::A3B)] == "A3B");
  CHECK(names.back() == "BdA3d");
}

TEST_CASE("initial state") {
  SystemParams p;
  p.N_m = 1e4;
  auto s = initial_state(p);
  CHECK(s[M::B] == cplx{100.0, 0.0});
  CHECK(s[M::Bd] == cplx{100.0, 0.0});
  CHECK(s[M::BdB] == cplx{1e4, 0.0});
  for (int k = 0; k < kMomentCount; ++k) {
    if (k != index(M::B) && k != index(M::Bd) && k != index(M::BdB)) CHECK(s.x(k) == cplx{});
  }

  p.b0_convention = B0Convention::Zero;
  s = initial_state(p);
  CHECK(s[M::B] == cplx{});
  CHECK(s[M::Bd] == cplx{});
  CHECK(s[M::BdB] == cplx{1e4, 0.0});

  p.N_m = 0.0;
  p.b0_convention = B0Convention::Coherent;
  CHECK(initial_state(p).x.isZero(0.0));

  p.N_m = -1.0;
  CHECK_THROWS_AS(initial_state(p), DomainError);
}

TEST_CASE("uncoupled system is diagonal decay") {
  SystemParams p;
  p.Gamma2 = 2.0;
  p.Gamma3 = 4.0;
  p.Gamma_m = 6.0;
  p.A = 1e3;
  const auto sys = build_system(p);
  CHECK(sys.c.isZero(0.0));
  MomentMatrix off = sys.M;
  off.diagonal().setZero();
  CHECK(off.isZero(0.0));
  // printed damping of each equation
  const std::pair<M, double> expected[] = {
      {M::A2, 1.0},    {M::A3, 2.0},     {M::B, 3.0},     {M::A2d, 1.0},     {M::A3d, 2.0},
      {M::Bd, 3.0},    {M::A3B, 3.0},    {M::A3A2, 1.0},  {M::A3dA3, 2.0},   {M::A3dBd, 3.0},
      {M::A3dA2d, 1.0}, {M::BdB, 3.0},   {M::BdA2, 1.0},  {M::BdA3d, 3.0}};
  for (const auto& [m, rate] : expected) CHECK(sys.M(index(m), index(m)) == cplx{-rate, 0.0});
}

TEST_CASE("no pump, no coupling") {
  auto p = default_setup().params;
  p.A = 0.0;
  const auto sys = build_system(p);
  CHECK(sys.c.isZero(0.0));
  MomentMatrix off = sys.M;
  off.diagonal().setZero();
  CHECK(off.isZero(0.0));
}

TEST_CASE("coupling pattern of the printed equations") {
  // (row, column) of every off-diagonal entry, read from the printed rate equations
  const std::set<std::pair<M, M>> expected = {
      {M::A2, M::B},          {M::A3, M::Bd},          {M::B, M::A2},        {M::B, M::A3d},
      {M::A2d, M::Bd},        {M::A3d, M::B},          {M::Bd, M::A2d},      {M::Bd, M::A3},
      {M::A3B, M::A3A2},      {M::A3B, M::A3dA3},      {M::A3A2, M::A3B},    {M::A3dA3, M::A3dBd},
      {M::A3dBd, M::A3dA2d},  {M::A3dBd, M::A3dA3},    {M::A3dA2d, M::A3dBd}, {M::BdB, M::BdA2},
      {M::BdB, M::BdA3d},     {M::BdA2, M::BdB},       {M::BdA3d, M::BdB}};
  const auto sys = build_system(default_setup().params);
  std::set<std::pair<M, M>> found;
  for (int i = 0; i < kMomentCount; ++i) {
    for (int j = 0; j < kMomentCount; ++j) {
      if (i != j && sys.M(i, j) != cplx{}) found.insert({static_cast<M>(i), static_cast<M>(j)});
    }
  }
  CHECK(found == expected);
  CHECK(found.size() == 19);

  // the closure <A3 A3+> = <A3+ A3> + 1 adds the only constant term
  int affine = 0;
  for (int i = 0; i < kMomentCount; ++i) affine += sys.c(i) != cplx{};
  CHECK(affine == 1);
  const auto p = default_setup().params;
  CHECK(sys.c(index(M::A3B)) == p.g3 * p.A);
  // as an augmented 15x15 generator [M c; 0 0] the system has 20 off-diagonal couplings
  CHECK(found.size() + affine == 20);
}

TEST_CASE("pump letter switch touches only the <B+B> equation") {
  auto p = default_setup().params;
  const auto uniform = build_system(p);
  p.pump_letter = PumpLetter::AsPrinted;
  const auto printed = build_system(p);
  MomentMatrix diff = printed.M - uniform.M;
  const cplx i{0.0, 1.0};
  CHECK(printed.M(index(M::BdB), index(M::BdA2)) == -p.g2 * std::conj(i * p.A));
  CHECK(printed.M(index(M::BdB), index(M::BdA3d)) == p.g3 * (i * p.A));
  diff.row(index(M::BdB)).setZero();
  CHECK(diff.isZero(0.0));
}

TEST_CASE("decay-only evolution") {
  SystemParams p;
  p.Gamma_m = 1e6;
  p.N_m = 1e4;
  const auto sys = build_system(p);
  const double t = 1.0 / p.Gamma_m;
  std::vector<MomentState> traj;
  const auto final = integrate(sys, initial_state(p), t, t / 100.0, Method::Rk4, &traj);
  CHECK(rel(final[M::BdB], cplx{1e4 * std::exp(-0.5), 0.0}) < 1e-8);
  CHECK(rel(final[M::B], cplx{100.0 * std::exp(-0.5), 0.0}) < 1e-8);
  CHECK(traj.size() == 101);
  CHECK(traj.front().t == 0.0);
  CHECK(traj.back().t == t);

  const auto conv = convergence_check(sys, initial_state(p), t, t / 100.0, Method::Rk4);
  CHECK(conv.halvings <= 3);
}

TEST_CASE("last step lands on t_end") {
  SystemParams p;
  p.Gamma_m = 1.0;
  p.N_m = 1.0;
  std::vector<MomentState> traj;
  const auto final = integrate(build_system(p), initial_state(p), 1.0, 0.3, Method::Rk4, &traj);
  REQUIRE(traj.size() == 5);
  CHECK(traj[3].t == doctest::Approx(0.9));
  CHECK(traj[4].t == 1.0);
  CHECK(final.t == 1.0);
  CHECK(rel(final[M::BdB], cplx{std::exp(-0.5), 0.0}) < 1e-5);

  CHECK_THROWS_AS(integrate(build_system(p), initial_state(p), 0.0, 0.1), DomainError);
  CHECK_THROWS_AS(integrate(build_system(p), initial_state(p), 1.0, 0.0), DomainError);
}

TEST_CASE("lower sideband stays empty without a microwave field") {
  auto p = default_setup().params;
  p.b0_convention = B0Convention::Zero;
  const auto s = default_setup();
  std::vector<MomentState> traj;
  integrate(build_system(p), initial_state(p), s.t_end, s.t_end / 200.0, Method::Rk4, &traj);
  for (const auto& st : traj) {
    CHECK(st[M::A3] == cplx{});
    CHECK(st[M::A3d] == cplx{});
  }
}

TEST_CASE("linearity without the pump") {
  const auto s = default_setup();
  auto p = s.params;
  p.A = 0.0;
  const auto sys = build_system(p);
  MomentState x0 = initial_state(s.params);
  x0[M::A3B] = cplx{0.3, -0.2};
  x0[M::A2] = cplx{1.5, 0.5};
  MomentState scaled = x0;
  const cplx lambda{2.5, -1.25};
  scaled.x *= lambda;
  const auto a = integrate(sys, x0, s.t_end, s.t_end / 100.0);
  const auto b = integrate(sys, scaled, s.t_end, s.t_end / 100.0);
  CHECK(state_error(b.x, lambda * a.x) < 1e-14);
}

TEST_CASE("beam-splitter subsystem against its matrix exponential") {
  SystemParams p;
  p.g2 = cplx{3e7, 2e6};
  p.A = 1e3;
  p.N_m = 1e4;
  const auto sys = build_system(p);
  const double t = 5e-11;
  const auto x0 = initial_state(p);
  std::vector<MomentState> traj;
  integrate(sys, x0, t, t / 2000.0, Method::Rk4, &traj);

  // <B+B>' = -g2 A <B+A2>,  <B+A2>' = g2 A <B+B>,  <B+A3+>' = 0
  Eigen::Matrix3cd K = Eigen::Matrix3cd::Zero();
  K(0, 1) = -p.g2 * p.A;
  K(1, 0) = p.g2 * p.A;
  Eigen::Vector3cd y0(x0[M::BdB], x0[M::BdA2], x0[M::BdA3d]);
  for (std::size_t k = 0; k < traj.size(); k += 250) {
    const Eigen::Vector3cd ref = (Eigen::Matrix3cd(K * traj[k].t)).exp() * y0;
    const Eigen::Vector3cd got(traj[k][M::BdB], traj[k][M::BdA2], traj[k][M::BdA3d]);
    CHECK((got - ref).norm() <= 1e-8 * ref.norm());
  }
}

TEST_CASE("default operating point") {
  const auto s = default_setup();
  const auto sys = build_system(s.params);
  const auto x0 = initial_state(s.params);
  CHECK(rel(cplx{s.t_end, 0.0}, cplx{oracle::t_end, 0.0}) < 1e-6);

  const auto conv = convergence_check(sys, x0, s.t_end, s.t_end / 100.0, Method::Rk4);
  CHECK(conv.delta < 1e-6);
  CHECK(conv.final[M::A3dA3] == cplx{});
  CHECK(rel(conv.final[M::A3], oracle::A3_final) < 1e-6);
  CHECK(rel(conv.final[M::A3B], oracle::A3B_final) < 1e-6);
  CHECK(rel(conv.final[M::BdB], oracle::BdB_final) < 1e-6);
  CHECK(rel(cplx{duan_lambda(conv.final).lambda, 0.0}, cplx{oracle::lambda_final.real(), 0.0}) < 1e-6);

  // the exact propagator agrees with the integrator
  CHECK(state_error(conv.final.x, exact(sys, x0.x, s.t_end)) < 1e-9);
}

TEST_CASE("trajectory invariants at the default operating point") {
  const auto s = default_setup();
  std::vector<MomentState> traj;
  integrate(build_system(s.params), initial_state(s.params), s.t_end, s.t_end / 200.0, Method::Rk4, &traj);
  const double n = s.params.N_m;
  for (const auto& st : traj) {
    CHECK(st[M::A3dA3].real() >= -1e-9 * n);
    CHECK(st[M::BdB].real() >= -1e-9 * n);
    const auto d = assess(st, n);
    CHECK(d.first_moment_pairing <= 1e-9 * std::max(1.0, st[M::B].real()));
    CHECK(d.occupation_imag < 1e-5);
  }
}

TEST_CASE("integration order") {
  const auto s = default_setup();
  CHECK(std::abs(reference::order_slope(s, Method::Rk4, 10.0) - 4.0) < 0.3);
  CHECK(std::abs(reference::order_slope(s, Method::Euler, 200.0) - 1.0) < 0.2);
}

TEST_CASE("strong coupling forces a small step") {
  SystemParams p;
  // g3 << g2 keeps the <A2>, <B> pair oscillating at |g2 A|; equal rates would cancel the rotation
  p.g2 = cplx{1e9, 0.0};
  p.g3 = cplx{1e6, 0.0};
  p.Gamma2 = 1e9;
  p.Gamma3 = 1e9;
  p.Gamma_m = 1e6;
  p.A = 1e3;
  p.N_m = 1e4;
  const double gA = std::abs(p.g2 * p.A);
  const double t = 10.0 / gA;
  const auto conv = convergence_check(build_system(p), initial_state(p), t, t / 100.0, Method::Rk4);
  CHECK(conv.dt <= 1.0 / (50.0 * gA));
}

TEST_CASE("convergence and integration failures") {
  const auto s = default_setup();
  const auto sys = build_system(s.params);
  const auto x0 = initial_state(s.params);
  CHECK_THROWS_AS(convergence_check(sys, x0, s.t_end, 0.0, Method::Rk4), DomainError);
  CHECK_THROWS_AS(convergence_check(sys, x0, s.t_end, s.t_end / 10.0, Method::Euler, 1e-300, 3), NumericError);

  LinearSystem blowup;
  blowup.M(0, 0) = 1e300;
  MomentState one;
  one.x(0) = 1e300;
  try {
    integrate(blowup, one, 1.0, 0.25);
    FAIL("expected overflow");
  } catch (const NumericError& e) {
    CHECK(std::string(e.what()).find("step 1") != std::string::npos);
  }
}

TEST_CASE("trajectory CSV") {
  SystemParams p;
  p.Gamma_m = 1.0;
  p.N_m = 4.0;
  std::vector<MomentState> traj;
  integrate(build_system(p), initial_state(p), 1.0, 0.5, Method::Rk4, &traj);
  std::ostringstream out;
  write_trajectory_csv(out, traj);
  const std::string text = out.str();
  std::istringstream in(text);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    REQUIRE(line.back() == '\r');
    CHECK(std::count(line.begin(), line.end(), ',') == 28);
    if (rows == 0) {
      CHECK(line.rfind("t_s,re_A2,im_A2,re_A3,", 0) == 0);
      CHECK(line.find("re_BdA3d,im_BdA3d\r") != std::string::npos);
    }
    ++rows;
  }
  CHECK(rows == 4);
}
