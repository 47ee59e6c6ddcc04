#ifndef SPP_DYNAMICS_HPP
#define SPP_DYNAMICS_HPP

#include <array>
#include <complex>
#include <iosfwd>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace spp {

using cplx = std::complex<double>;

/// Slots of the evolved moment vector. First moments come first, then the
/// eight second moments of the regression-theorem hierarchy.
enum class Moment : int {
  A2 = 0,   // <A2>
  A3,       // <A3>
  B,        // <B>
  A2d,      // <A2+>
  A3d,      // <A3+>
  Bd,       // <B+>
  A3B,      // <A3 B>
  A3A2,     // <A3 A2>
  A3dA3,    // <A3+ A3>
  A3dBd,    // <A3+ B+>
  A3dA2d,   // <A3+ A2+>
  BdB,      // <B+ B>
  BdA2,     // <B+ A2>
  BdA3d,    // <B+ A3+>
};

inline constexpr int kMomentCount = 14;

constexpr int index(Moment m) { return static_cast<int>(m); }

/// Column names used in trajectory dumps.
const std::array<std::string_view, kMomentCount>& moment_names();

using MomentVector = Eigen::Matrix<cplx, kMomentCount, 1>;
using MomentMatrix = Eigen::Matrix<cplx, kMomentCount, kMomentCount>;

struct MomentState {
  MomentVector x = MomentVector::Zero();
  double t = 0.0;

  cplx operator[](Moment m) const { return x(index(m)); }
  cplx& operator[](Moment m) { return x(index(m)); }
};

/// Initial microwave mean: coherent sqrt(N_m), or zero.
enum class B0Convention { Coherent, Zero };

/// How the pump letter in the <B+B> equation is read.
///   UniformA:  the same real amplitude A everywhere.
///   AsPrinted: A1 = iA in the <B+B> equation only.
enum class PumpLetter { UniformA, AsPrinted };

enum class Method { Rk4, Euler };

struct SystemParams {
  cplx g2;
  cplx g3;
  double Gamma2 = 0.0;
  double Gamma3 = 0.0;
  double Gamma_m = 0.0;
  double A = 0.0;     // sqrt(pump photons)
  double N_m = 0.0;   // initial microwave photons
  B0Convention b0_convention = B0Convention::Coherent;
  PumpLetter pump_letter = PumpLetter::UniformA;

  void validate() const;
};

/// x' = M x + c.
struct LinearSystem {
  MomentMatrix M = MomentMatrix::Zero();
  MomentVector c = MomentVector::Zero();
};

MomentState initial_state(const SystemParams& params);

LinearSystem build_system(const SystemParams& params);

/// Fixed-step integration to t_end. Fills `trajectory` (including t = 0 and
/// t = t_end) when non-null and returns the final state.
MomentState integrate(const LinearSystem& system, const MomentState& state0, double t_end, double dt,
                      Method method = Method::Rk4, std::vector<MomentState>* trajectory = nullptr);

struct Convergence {
  double dt = 0.0;       // accepted step
  double delta = 0.0;    // relative change of Lambda at the last refinement
  int halvings = 0;
  MomentState final;     // state at t_end with the accepted step
};

/// Halves dt until the final Duan Lambda changes by less than `target`
/// (relative) between successive refinements.
Convergence convergence_check(const LinearSystem& system, const MomentState& state0, double t_end,
                              double dt0, Method method = Method::Rk4, double target = 1e-6,
                              int max_halvings = 12);

/// Realness and conjugate-pair diagnostics of a state.
struct MomentDiagnostics {
  double occupation_imag = 0.0;     // max |Im| of <A3+A3>, <B+B>, relative to max(1, N_m)
  double min_occupation = 0.0;      // min Re of <A3+A3>, <B+B>
  double conjugate_drift = 0.0;     // |<A3+B+> - <A3B>*|
  double first_moment_pairing = 0.0;  // max |<X+> - <X>*|
};

MomentDiagnostics assess(const MomentState& state, double N_m);

/// t_s followed by re/im of every moment, one row per state.
void write_trajectory_csv(std::ostream& out, const std::vector<MomentState>& trajectory);

}  // namespace spp

#endif  // SPP_DYNAMICS_HPP
