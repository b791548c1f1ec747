#pragma once

#include "hilbert/body.hpp"
#include "hilbert/metric.hpp"

#include <optional>
#include <vector>

namespace hilbert {

/// Largest Hilbert radius accepted by the volume and area routines.
inline constexpr double kMaxRadius = 8.0;

/// Radial function of the metric sphere of radius t about the origin:
/// omega(u) omega(-u) (1 - e^{-2t}) / (omega(u) e^{-2t} + omega(-u)).
double sphere_radial(const ConvexBody& body, const Vec& u, double t);

/// omega(u) - sphere_radial(u, t), evaluated without cancellation.
double sphere_gap(const ConvexBody& body, const Vec& u, double t);

/// Leading coefficients of omega - rho_t ~ coefficient * e^{-2t} and of its
/// first and second angular derivatives (planar bodies only for the latter).
/// `delta2` is the exact second derivative of the leading term;
/// `delta2_as_printed` evaluates the commonly quoted closed form, which
/// omits the 2 omega omega(-u)^2 omega'' term (see README).
struct AsymCoeffs {
  double delta = 0.0;
  std::optional<double> delta1;
  std::optional<double> delta2;
  std::optional<double> delta2_as_printed;
};
AsymCoeffs lemma1_coeffs(const ConvexBody& body, const Vec& u);

/// Polar map tanh(s) omega(u) u and its Jacobian omega^dim tanh^{dim-1}(s) sech^2(s).
Vec phi(const ConvexBody& body, const Vec& u, double s);
double phi_jacobian(const ConvexBody& body, const Vec& u, double s);

/// Parameter s at which the polar map reaches the sphere of radius t.
double sphere_polar_limit(const ConvexBody& body, const Vec& u, double t);

/// Busemann-Hausdorff volume of the metric ball of radius t about the origin,
/// integrated in the polar map coordinates (u, s).
double ball_volume_polar(const MetricQuery& q, double t);

/// Same volume by ambient polar coordinates (u, r); planar bodies only.
double ball_volume_direct(const MetricQuery& q, double t);

/// Busemann-Hausdorff measure of the metric sphere of radius t.
double sphere_area(const MetricQuery& q, double t);

/// Hilbert length of the inscribed n_chords-gon with vertices at equally
/// spaced angles on the sphere; planar bodies only.
double sphere_area_chords(const MetricQuery& q, double t, int n_chords);

/// Vertices rho_t(u_k) u_k at n equally spaced angles (planar bodies).
std::vector<Vec> sphere_vertices(const ConvexBody& body, double t, int n);

/// Euclidean boundary distance of phi(u, s) against the asymptotic bounds
/// 2 omega(u) e^{-2s} and 2 (omega0 / R) omega(u) e^{-2s}, with relative slack
/// eps = 5 e^{-2s}.
struct GapBounds {
  double upper = 0.0;
  double lower = 0.0;
  double actual = 0.0;
  double eps = 0.0;
  bool holds = false;
};
GapBounds boundary_gap_bounds(const ConvexBody& body, const BodySummary& summary, const Vec& u,
                              double s);

}  // namespace hilbert
