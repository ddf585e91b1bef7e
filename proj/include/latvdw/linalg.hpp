#pragma once

#include <array>
#include <complex>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace latvdw {

using complex = std::complex<double>;

using Vec3 = Eigen::Vector3d;
using ComplexVec3 = Eigen::Vector3cd;
using ComplexMat3 = Eigen::Matrix3cd;

/// Rank-3 tensor stored as three matrices; element [a](i, j) is dG_ij/dx_a.
using GradientTensor = std::array<ComplexMat3, 3>;

/// Unconjugated bilinear form u . M . v (the dipole "sandwich").
inline complex sandwich(const ComplexVec3& u, const ComplexMat3& m, const ComplexVec3& v) {
  return u.transpose() * m * v;
}

inline double max_abs(const ComplexMat3& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace latvdw
