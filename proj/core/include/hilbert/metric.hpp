#pragma once

#include "hilbert/body.hpp"
#include "hilbert/numerics.hpp"
#include "hilbert/vec.hpp"

namespace hilbert {

/// A body together with the numerical settings used to query it.
struct MetricQuery {
  ConvexBody body;
  ToleranceConfig config{};
};

/// Busemann-Hausdorff density in ambient Cartesian coordinates.
struct DensityValue {
  double sigma = 0.0;
};

/// Points closer than this (in radial gap) to the boundary are rejected.
inline constexpr double kBoundaryExclusion = 1e-9;

/// Throws DomainError unless p is finite, of the body's dimension, and at
/// least kBoundaryExclusion inside the boundary.
void require_interior(const ConvexBody& body, const Vec& p, const char* what);

/// Hilbert distance between interior points, nonnegative; 0 when p == p2.
double hilbert_distance(const MetricQuery& q, const Vec& p, const Vec& p2);

/// Hilbert-Finsler norm 0.5 |v| (1/|p - p_minus| + 1/|p - p_plus|).
double finsler_norm(const MetricQuery& q, const Vec& p, const Vec& v);

/// Closed-form Hilbert norm of the ball of `radius` about `center` (the Klein model).
double klein_norm(double radius, const Vec& center, const Vec& p, const Vec& v);

/// Forward Funk norm: the F > 0 with p + v / F on the boundary.
double funk_norm(const MetricQuery& q, const Vec& p, const Vec& v);

/// Vol_E(unit ball) / Vol_E(Finsler unit ball at p). The tangent unit ball
/// is whitened by a quadratic fit of F^2 before the polar quadrature, so the
/// node count stays small even close to the boundary.
DensityValue busemann_density(const MetricQuery& q, const Vec& p);

/// Same definition for the Funk norm, by direct polar quadrature.
DensityValue funk_density(const MetricQuery& q, const Vec& p);

/// Busemann-Hausdorff density of the Klein metric of a ball of `radius` at a
/// point `depth` inside its boundary.
double klein_density(double radius, double depth, int dim);

/// Tangent-ball sandwich at p: densities of the Klein metrics on the
/// circumscribed (radius R) and inscribed (radius r) tangent balls at the
/// nearest boundary point bound the body's density.
struct DensitySandwich {
  double lower = 0.0;
  double sigma = 0.0;
  double upper = 0.0;
  double depth = 0.0;
  bool holds = false;
};
DensitySandwich density_sandwich(const MetricQuery& q, const BodySummary& summary, const Vec& p,
                                 double rel_slack = 1e-6);

}  // namespace hilbert
