#pragma once

#include "hilbert/body.hpp"
#include "hilbert/metric.hpp"
#include "hilbert/spheres.hpp"

#include <span>
#include <vector>

namespace hilbert {

/// One tabulated radius. For Funk runs the area/volume columns hold the
/// forward Funk sphere length and ball volume.
struct ExperimentRow {
  double t = 0.0;
  double sphere_area = 0.0;
  double ball_volume = 0.0;
  double ratio = 0.0;
  double ln_area_over_t = 0.0;

  friend bool operator==(const ExperimentRow&, const ExperimentRow&) = default;
};

/// Shell offsets and volume-asymptote constants of a body.
struct BoundConstants {
  double d1 = 0.0;
  double d2 = 0.0;
  double C1 = 0.0;
  double C2 = 0.0;
};

struct ExperimentReport {
  std::vector<ExperimentRow> rows;
  BodySummary summary;
  BoundConstants constants;
};

/// Limits of Vol(B_t) / Vol(S_t): integral forms, extremal-constant forms and
/// the forms for centrally symmetric bodies (evaluated for every body).
struct RatioBounds {
  double upper_sharp = 0.0;
  double lower_sharp = 0.0;
  double upper_simple = 0.0;
  double lower_simple = 0.0;
  double upper_symmetric = 0.0;
  double lower_symmetric = 0.0;
};

/// Ball volume and sphere area of radius t in hyperbolic space of dimension n + 1.
struct HyperbolicValues {
  double ball_volume = 0.0;
  double sphere_area = 0.0;
};
HyperbolicValues hyperbolic_oracle(double t, int n);

/// Slope of ln(sphere area) against t over a grid inside [4, 8] (>= 4 points).
double entropy_spheres(const MetricQuery& q, std::span<const double> t_grid);
/// Same with ball volumes.
double entropy_balls(const MetricQuery& q, std::span<const double> t_grid);

/// Sphere area, ball volume and their ratio over a strictly increasing grid in (0, 8].
ExperimentReport ratio_curve(const MetricQuery& q, std::span<const double> t_grid);

/// d1 = -ln(0.5 (1 + 1/c)) / 2, d2 = -ln(0.5 (1 + c)) / 2 and the sphere
/// integrals C1 = 2^{-n} int (omega/R)^{n/2}, C2 = 2^{-n} (R/omega0)^{(n+2)/2} int (omega/r)^{n/2}.
BoundConstants shell_constants(const ConvexBody& body, const BodySummary& summary,
                               const ToleranceConfig& config = {});
BoundConstants shell_constants(const ConvexBody& body, const ToleranceConfig& config = {});

/// Asymptotic ball-volume envelope (1/n) C1 e^{n d2} e^{n t} <= Vol(B_t) <= (1/n) C2 e^{n d1} e^{n t}.
struct VolumeEnvelope {
  double lower = 0.0;
  double upper = 0.0;
};
VolumeEnvelope volume_envelope(const BoundConstants& constants, int n, double t);

RatioBounds theorem2_bounds(const ConvexBody& body, const BodySummary& summary,
                            const ToleranceConfig& config = {});
RatioBounds theorem2_bounds(const ConvexBody& body, const ToleranceConfig& config = {});

/// Minimum over a grid of boundary points of cos(angle(radius vector, normal)),
/// compared against omega0 / R.
struct NormalAngleCheck {
  double min_cos = 0.0;
  double bound = 0.0;
  bool holds = false;
};
NormalAngleCheck lemma2_check(const ConvexBody& body, int grid, double slack = 1e-9);

/// Forward Funk ball radius omega(u) (1 - e^{-t}).
double funk_ball_radial(const ConvexBody& body, const Vec& u, double t);
/// Forward Funk length of the Funk sphere, traversed counterclockwise (planar).
double funk_sphere_length(const MetricQuery& q, double t);
/// Funk ball volume with the Funk density (planar).
double funk_ball_volume(const MetricQuery& q, double t);
/// Funk ball volume over Funk sphere length on a strictly increasing grid.
ExperimentReport funk_ratio_curve(const MetricQuery& q, std::span<const double> t_grid);

}  // namespace hilbert
