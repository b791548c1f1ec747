#pragma once

#include "hilbert/asymptotics.hpp"

#include <cmath>
#include <random>
#include <string>

namespace hilbert::testing {

inline ConvexBody unit_disk() { return make_ball(1.0, 2); }
inline ConvexBody ellipse21() { return make_ellipse(2.0, 1.0); }
inline ConvexBody offset_disk() { return make_offset_ball(1.0, vec2(0.3, 0.0)); }
inline ConvexBody perturbed() { return make_perturbed_ball(0.05, 3); }
inline ConvexBody ellipsoid() { return make_ellipsoid(1.5, 1.0, 0.8); }
inline ConvexBody unit_ball3() { return make_ball(1.0, 3); }

inline std::vector<ConvexBody> planar_bodies() {
  return {unit_disk(), ellipse21(), offset_disk(), perturbed()};
}

inline std::string data_path(const std::string& name) {
  return std::string(HILBERT_TEST_DATA_DIR) + "/" + name;
}

/// Seeded sampler for directions and interior points.
class Sampler {
 public:
  explicit Sampler(std::uint32_t seed) : rng_(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }

  Vec direction(int dim) {
    std::normal_distribution<double> n(0.0, 1.0);
    Vec v(dim);
    do {
      for (int i = 0; i < dim; ++i) v[i] = n(rng_);
    } while (v.norm() < 1e-6);
    return v / v.norm();
  }

  /// Interior point at a fraction of the radial extent in a random direction.
  Vec interior(const ConvexBody& body, double max_fraction = 0.95) {
    const Vec u = direction(body.dim());
    return uniform(0.0, max_fraction) * body.radial(u) * u;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

inline double rel_err(double value, double expected) {
  return std::abs(value - expected) / std::abs(expected);
}

}  // namespace hilbert::testing
