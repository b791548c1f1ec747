#pragma once

#include <Eigen/Dense>

#include <string>

namespace hilbert {

/// Point or vector in R^2 or R^3. Storage is inline (max size 3).
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, 3, 1>;

inline Vec vec2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

inline Vec vec3(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}

inline Vec zero_vec(int dim) { return Vec::Zero(dim); }

/// Unit vector on S^{dim-1}. Normalizes on construction.
class Direction {
 public:
  explicit Direction(const Vec& v);

  static Direction from_angle(double theta);

  const Vec& vec() const noexcept { return u_; }
  int dim() const noexcept { return static_cast<int>(u_.size()); }
  double operator[](int i) const { return u_[i]; }
  Direction operator-() const { return Direction(-u_, Normalized{}); }

 private:
  struct Normalized {};
  Direction(const Vec& u, Normalized) : u_(u) {}

  Vec u_;
};

Vec cross3(const Vec& a, const Vec& b);

/// Deterministic orthonormal basis of the tangent space at unit `u`
/// (one vector in 2D, two in 3D). In 2D the tangent is u rotated by +90deg.
void tangent_basis(const Vec& u, Vec& e1, Vec& e2);

std::string format_vec(const Vec& v);

}  // namespace hilbert
