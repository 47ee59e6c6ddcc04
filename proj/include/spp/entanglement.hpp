#ifndef SPP_ENTANGLEMENT_HPP
#define SPP_ENTANGLEMENT_HPP

#include <complex>

#include <Eigen/Dense>

#include "spp/dynamics.hpp"

namespace spp {

/// 3x3 determinant by cofactor expansion along the first row.
template <typename Scalar>
std::complex<Scalar> cofactor_det3(const Eigen::Matrix<std::complex<Scalar>, 3, 3>& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// Imaginary residues of Lambda larger than this fraction of |Re Lambda| are flagged.
inline constexpr double kLambdaImagFlagRatio = 1e-3;

struct DuanResult {
  double lambda = 0.0;
  double lambda_imag = 0.0;
  bool entangled = false;   // lambda < 0, strict
  Eigen::Matrix3cd matrix = Eigen::Matrix3cd::Zero();

  bool imag_flagged() const { return std::abs(lambda_imag) > kLambdaImagFlagRatio * std::abs(lambda); }
};

/// Rows [1, <A3>, <B+>; <A3+>, <A3+A3>, <A3+B+>; <B>, <A3B>, <B+B>].
Eigen::Matrix3cd duan_matrix(const MomentState& state);

DuanResult duan_lambda(const Eigen::Matrix3cd& matrix);

DuanResult duan_lambda(const MomentState& state);

}  // namespace spp

#endif  // SPP_ENTANGLEMENT_HPP
