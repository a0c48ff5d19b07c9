#pragma once

#include <complex>
#include <Eigen/Dense>

#include "slr/errors.hpp"

namespace slr {

using cd = std::complex<double>;
using ComplexDyadic = Eigen::Matrix3cd;
using Vec3 = Eigen::Vector3d;

// Real 3-vector with unit Euclidean norm (tolerance 1e-12 on construction).
class UnitVector3 {
public:
  explicit UnitVector3(const Vec3& v) : m_v(v) {
    const double n = v.norm();
    if (std::abs(n - 1.0) > 1e-12) {
      if (n == 0.0) throw physics_error("UnitVector3: zero vector");
      m_v /= n;
    }
  }
  static UnitVector3 x() { return UnitVector3(Vec3(1, 0, 0)); }
  static UnitVector3 y() { return UnitVector3(Vec3(0, 1, 0)); }
  static UnitVector3 z() { return UnitVector3(Vec3(0, 0, 1)); }

  const Vec3& vec() const { return m_v; }
  double operator[](int i) const { return m_v[i]; }

private:
  Vec3 m_v;
};

inline cd sandwich(const UnitVector3& u, const ComplexDyadic& d, const UnitVector3& v) {
  return u.vec().cast<cd>().dot(d * v.vec().cast<cd>());
}

} // namespace slr
