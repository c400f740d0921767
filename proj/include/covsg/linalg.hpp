// Small fixed-size linear algebra aliases and comparison helpers shared by
// every module. All numerics are double precision, natural units (hbar=c=1).
#pragma once

#include <Eigen/Dense>
#include <complex>

namespace covsg {

using cplx = std::complex<double>;

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

using Vec2c = Eigen::Vector2cd;
using Vec4c = Eigen::Vector4cd;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;

// Default comparison tolerances; call sites may override.
inline constexpr double kAbsTol = 1e-12;
inline constexpr double kRelTol = 1e-10;

inline bool approx(double a, double b, double abs_tol = kAbsTol,
                   double rel_tol = kRelTol) {
    const double diff = std::abs(a - b);
    return diff <= abs_tol || diff <= rel_tol * std::max(std::abs(a), std::abs(b));
}

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
    return m.cwiseAbs().maxCoeff();
}

// Minkowski metric diag(+,-,-,-). Fixed project-wide; all index raising and
// lowering goes through this one object.
inline const Mat4& minkowski_metric() {
    static const Mat4 g = (Mat4() << 1, 0, 0, 0,
                                     0, -1, 0, 0,
                                     0, 0, -1, 0,
                                     0, 0, 0, -1).finished();
    return g;
}

}  // namespace covsg
