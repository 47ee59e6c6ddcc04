#include "spp/entanglement.hpp"

namespace spp {

Eigen::Matrix3cd duan_matrix(const MomentState& s) {
  Eigen::Matrix3cd m;
  m << cplx{1.0, 0.0}, s[Moment::A3], s[Moment::Bd],
       s[Moment::A3d], s[Moment::A3dA3], s[Moment::A3dBd],
       s[Moment::B], s[Moment::A3B], s[Moment::BdB];
  return m;
}

DuanResult duan_lambda(const Eigen::Matrix3cd& matrix) {
  const cplx det = cofactor_det3(matrix);
  DuanResult r;
  r.lambda = det.real();
  r.lambda_imag = det.imag();
  r.entangled = r.lambda < 0.0;
  r.matrix = matrix;
  return r;
}

DuanResult duan_lambda(const MomentState& state) { return duan_lambda(duan_matrix(state)); }

}  // namespace spp
