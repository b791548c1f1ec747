#pragma once

#include "hilbert/errors.hpp"
#include "hilbert/vec.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hilbert {

inline constexpr double kPi = 3.14159265358979323846;

/// Product-rule size on S^2: Gauss-Legendre nodes in cos(phi) times a
/// uniform azimuthal grid.
struct SphereRuleSize {
  int polar = 64;
  int azimuth = 128;

  friend bool operator==(const SphereRuleSize&, const SphereRuleSize&) = default;
};

/// Every numerical knob used by the library. Experiments are reproducible
/// from one instance.
struct ToleranceConfig {
  double root_tol = 1e-12;
  int quad_points_circle = 2048;
  SphereRuleSize quad_rule_sphere2{64, 128};
  double integral_rel_tol = 1e-8;

  // Directions used for the tangent unit-ball volume behind densities.
  int density_points_circle = 64;
  SphereRuleSize density_rule_sphere2{8, 16};
  int funk_density_points_circle = 256;

  // Outer direction rule for ball volumes (the inner radial integral is adaptive).
  int volume_points_circle = 256;
  SphereRuleSize volume_rule_sphere2{16, 32};

  /// Throws ArgumentError unless every tolerance is strictly positive and
  /// every rule has a usable size.
  void validate() const;

  /// Cheaper settings used for 3D runs where minutes matter.
  static ToleranceConfig coarse();

  friend bool operator==(const ToleranceConfig&, const ToleranceConfig&) = default;
};

/// Nodes and weights on S^1 (dimension 1) or S^2 (dimension 2).
/// `antipode[i]` is the index of the node at -nodes[i].
struct QuadratureRule {
  int dimension = 1;
  std::vector<Vec> nodes;
  std::vector<double> weights;
  std::vector<int> antipode;

  std::size_t size() const noexcept { return nodes.size(); }

  /// Periodic trapezoid: n_points equally spaced angles starting at 0.
  static QuadratureRule circle(int n_points);
  /// Gauss-Legendre in z = cos(phi) times uniform azimuth (azimuth must be even).
  static QuadratureRule sphere2(SphereRuleSize size);
  /// Circle rule for dim 2 bodies, product rule for dim 3.
  static QuadratureRule for_body_dim(int dim, int circle_points, SphereRuleSize sphere_size);
};

/// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

/// Total measure of the unit sphere S^{dim-1} in R^dim.
double unit_sphere_measure(int dim);
/// Euclidean volume of the unit ball in R^dim.
double unit_ball_volume(int dim);

double integrate_circle(const std::function<double(const Vec&)>& f, int n_points);
double integrate_sphere2(const std::function<double(const Vec&)>& f, const QuadratureRule& rule);
/// Weighted node sum for either rule dimension.
double integrate_rule(const std::function<double(const Vec&)>& f, const QuadratureRule& rule);

/// Least-squares slope of y against x.
double fit_slope(std::span<const std::pair<double, double>> points);

/// Adaptive Gauss-Kronrod (7/15) with global error control. Subintervals are
/// refined in a deterministic order until the estimated error is below
/// max(abs_tol, rel_tol * |I|).
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, double abs_tol = 0.0, int max_intervals = 400);

/// Bracketed root of g on [a, b]: inverse-quadratic/secant steps with a
/// bisection fallback (Brent). The final bracket width is at most tol, or a
/// few ulps when tol is 0. Throws BracketError without a sign change.
template <class G>
double find_root_bracketed(G&& g, double a, double b, double tol) {
  if (!(tol >= 0.0)) throw ArgumentError("find_root_bracketed: tol must be nonnegative");
  double fa = g(a);
  double fb = g(b);
  if (!std::isfinite(fa) || !std::isfinite(fb)) {
    throw EvaluationError("find_root_bracketed: non-finite value at a bracket end");
  }
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) {
    throw BracketError("find_root_bracketed: no sign change on [" + std::to_string(a) + ", " +
                       std::to_string(b) + "]");
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;
  for (int iter = 0; iter < 300; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double floor_tol = 2.0 * eps * std::abs(b);
    const double tol1 = std::max(0.5 * tol - floor_tol, floor_tol);
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol1 || fb == 0.0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p;
      double q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    } else {
      d = m;
      e = m;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol1 ? d : (m > 0.0 ? tol1 : -tol1);
    fb = g(b);
    if (!std::isfinite(fb)) throw EvaluationError("find_root_bracketed: non-finite value");
  }
  return b;
}

/// Golden-section minimizer of a unimodal f on [a, b].
double golden_section_min(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-12);

/// Evaluates f(0..n-1) into a vector, possibly on several threads. The result
/// order (and therefore any later sum) is independent of scheduling.
std::vector<double> parallel_map(std::size_t n, const std::function<double(std::size_t)>& f);

/// Sum of weights[i] * values[i] in index order.
double ordered_dot(std::span<const double> weights, std::span<const double> values);

}  // namespace hilbert
