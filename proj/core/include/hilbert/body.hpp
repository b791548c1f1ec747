#pragma once

#include "hilbert/jet.hpp"
#include "hilbert/numerics.hpp"
#include "hilbert/vec.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hilbert {

// Body families. Each radial function is written once, generic over the
// scalar type, so `double` gives values and `Jet` gives exact derivatives.
// `u` is a unit direction; only the first `dim` entries are meaningful.

struct Ball {
  double radius = 1.0;

  template <class T>
  T omega(const std::array<T, 3>& /*u*/, int /*dim*/) const {
    return T(radius);
  }
};

/// Disk/ball of `radius` centered at `center` (the origin must be interior).
/// omega(u) = <x0,u> + sqrt(rho^2 - |x0|^2 + <x0,u>^2).
struct OffsetBall {
  double radius = 1.0;
  std::array<double, 3> center{};

  template <class T>
  T omega(const std::array<T, 3>& u, int dim) const {
    using std::sqrt;
    T dot(0.0);
    double c2 = 0.0;
    for (int i = 0; i < dim; ++i) {
      dot += T(center[i]) * u[i];
      c2 += center[i] * center[i];
    }
    return dot + sqrt(T(radius * radius - c2) + dot * dot);
  }
};

struct Ellipse {
  double a = 1.0;
  double b = 1.0;

  template <class T>
  T omega(const std::array<T, 3>& u, int /*dim*/) const {
    using std::sqrt;
    return T(1.0) / sqrt(u[0] * u[0] * T(1.0 / (a * a)) + u[1] * u[1] * T(1.0 / (b * b)));
  }
};

struct Ellipsoid {
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;

  template <class T>
  T omega(const std::array<T, 3>& u, int /*dim*/) const {
    using std::sqrt;
    return T(1.0) / sqrt(u[0] * u[0] * T(1.0 / (a * a)) + u[1] * u[1] * T(1.0 / (b * b)) +
                         u[2] * u[2] * T(1.0 / (c * c)));
  }
};

/// omega(theta) = 1 + epsilon * cos(m theta), planar only.
struct PerturbedBall {
  double epsilon = 0.0;
  int m = 3;

  template <class T>
  T omega(const std::array<T, 3>& u, int /*dim*/) const {
    using std::atan2;
    using std::cos;
    const T theta = atan2(u[1], u[0]);
    return T(1.0) + T(epsilon) * cos(T(static_cast<double>(m)) * theta);
  }
};

using BodyFamily = std::variant<Ball, OffsetBall, Ellipse, Ellipsoid, PerturbedBall>;

/// Boundary point with its outward unit normal and principal curvatures
/// (one curvature in 2D, two in 3D, ascending).
struct SurfacePoint {
  Vec point;
  Vec normal;
  std::vector<double> curvatures;
};

/// Extremal constants of a body: radial extremes, asymmetry and curvature
/// extremes, with the tangent-sphere radii r = 1/K and R = 1/k.
struct BodySummary {
  double omega0 = 0.0;  ///< min omega
  double omega1 = 0.0;  ///< max omega
  double c = 1.0;       ///< max omega(u) / omega(-u)
  double k = 0.0;       ///< min normal curvature
  double K = 0.0;       ///< max normal curvature
  double r = 0.0;       ///< 1 / K
  double R = 0.0;       ///< 1 / k
};

/// The two intersections of the line p + R v with the boundary.
/// `t_minus` < 0 < `t_plus` are the signed parameters along the unit v.
struct ChordEndpoints {
  Vec p_minus;
  Vec p_plus;
  double t_minus = 0.0;
  double t_plus = 0.0;
};

/// Result of a nearest-boundary-point query.
struct BoundaryDistance {
  double distance = 0.0;
  Vec nearest;
};

/// Smooth strictly convex body described by its radial function about the
/// origin. Immutable after construction; every query is const and
/// thread-safe.
class ConvexBody {
 public:
  /// Validates positivity and strict convexity on a dense grid
  /// (1024 directions in 2D, 64x128 in 3D). Throws InvalidBodyError.
  ConvexBody(BodyFamily family, int dim);

  int dim() const noexcept { return dim_; }
  const BodyFamily& family() const noexcept { return family_; }
  std::string_view family_name() const noexcept;

  /// Every shipped family is differentiated exactly (forward-mode jets);
  /// no family currently falls back to finite differences.
  bool analytic_derivatives() const noexcept { return true; }

  /// Largest boundary distance from the origin, padded; any ray from an
  /// interior point leaves the body within |p| + bounding_radius().
  double bounding_radius() const noexcept { return bounding_radius_; }

  /// omega(u) for a unit direction u.
  double radial(const Vec& u) const;
  double radial(const Direction& u) const { return radial(u.vec()); }

  /// omega along a local chart of the sphere centred at `u`. In 2D the chart
  /// is the angle (derivatives are d/dtheta); in 3D it is
  /// u(a, b) = normalize(u + a e1 + b e2) with e1, e2 from tangent_basis(u).
  Jet radial_jet(const Vec& u) const;

  /// Chart direction u(a, b) as jets, with the same convention as radial_jet.
  std::array<Jet, 3> chart_direction(const Vec& u) const;

  /// omega evaluated on a jet-valued direction (used to differentiate
  /// compositions such as omega(-u(a, b))).
  Jet radial_of(const std::array<Jet, 3>& u) const;

  /// Boundary point omega(u) u.
  Vec boundary_point(const Vec& u) const { return radial(u) * u; }

  /// Open-domain membership: |p| < omega(p/|p|); the origin is inside.
  bool contains(const Vec& p) const;

  /// omega(iota(p)) - |p| (positive inside). Equals omega(any) at the origin.
  double radial_gap(const Vec& p) const;

  /// Distance s > 0 along the unit `dir` at which p + s dir meets the
  /// boundary; p must be interior. Solved to full double precision.
  double ray_exit(const Vec& p, const Vec& dir) const;

  /// Boundary level function |x| / omega(x/|x|) - 1.
  double level(const Vec& x) const;

 private:
  BodyFamily family_;
  int dim_;
  double bounding_radius_ = 0.0;
};

/// Boundary intersections of the line through interior p along v.
/// Throws DomainError if p is not interior, ArgumentError if v = 0.
ChordEndpoints chord_endpoints(const ConvexBody& body, const Vec& p, const Vec& v);

bool contains(const ConvexBody& body, const Vec& p);

/// Outward unit normal and principal curvatures at omega(u) u.
SurfacePoint normal_and_curvature(const ConvexBody& body, const Vec& u);

/// Grid extremes refined by local golden-section searches. grid_size is the
/// number of directions in 2D (>= 256) or polar*azimuth in 3D, split 1:2
/// (>= 1024, i.e. at least 16x32; 8192 gives the 64x128 grid).
BodySummary summarize(const ConvexBody& body, int grid_size = 2048);

/// Euclidean distance from interior p to the boundary and the nearest point.
BoundaryDistance euclid_dist_to_boundary(const ConvexBody& body, const Vec& p);

/// Euclidean length (2D) or area (3D) of the boundary.
double boundary_measure(const ConvexBody& body, const ToleranceConfig& config = {});

/// Euclidean area (2D) or volume (3D) of the body.
double body_volume(const ConvexBody& body, const ToleranceConfig& config = {});

/// Euclidean boundary element factor at omega(u) u: |dX/dtheta| in 2D and
/// |X_a x X_b| for the unit-speed chart in 3D.
double boundary_area_element(const ConvexBody& body, const Vec& u);

/// Evaluate `f` over all grid directions, then golden-section refine around
/// the best one. Returns the refined direction and its value.
struct SphereExtremum {
  Vec u;
  double value = 0.0;
};
SphereExtremum extremize_on_sphere(int dim, const std::function<double(const Vec&)>& f,
                                   bool maximize, int grid_size);

// Construction helpers mirroring the JSON families.
ConvexBody make_ball(double radius, int dim = 2);
ConvexBody make_offset_ball(double radius, const Vec& center);
ConvexBody make_ellipse(double a, double b);
ConvexBody make_ellipsoid(double a, double b, double c);
ConvexBody make_perturbed_ball(double epsilon, int m);

/// Parse {"family": ..., "params": {...}, "dim": 2|3}. Throws BodySpecError
/// naming the offending field, InvalidBodyError for geometric violations.
ConvexBody make_body(std::string_view json_text);
ConvexBody load_body(const std::string& path);

}  // namespace hilbert
