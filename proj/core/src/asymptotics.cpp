#include "hilbert/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace hilbert {

namespace {

void check_entropy_grid(std::span<const double> t_grid, const char* what) {
  if (t_grid.size() >= 2 &&
      std::all_of(t_grid.begin(), t_grid.end(), [&](double t) { return t == t_grid.front(); })) {
    throw DegenerateFitError(std::string(what) + ": all t values are equal");
  }
  if (t_grid.size() < 4) throw ArgumentError(std::string(what) + ": need at least 4 t values");
  for (double t : t_grid) {
    if (!(t >= 4.0 && t <= 8.0)) {
      throw ArgumentError(std::string(what) + ": t values must lie in [4, 8]");
    }
  }
}

void check_curve_grid(std::span<const double> t_grid, const char* what) {
  if (t_grid.empty()) throw ArgumentError(std::string(what) + ": empty t grid");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const double t = t_grid[i];
    if (!(t > 0.0 && t <= kMaxRadius)) {
      throw ArgumentError(std::string(what) + ": t values must lie in (0, 8]");
    }
    if (i > 0 && !(t > t_grid[i - 1])) {
      throw ArgumentError(std::string(what) + ": t values must be strictly increasing");
    }
  }
}

double log_slope(std::span<const double> t_grid, const std::function<double(double)>& f) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(t_grid.size());
  for (double t : t_grid) pts.emplace_back(t, std::log(f(t)));
  return fit_slope(pts);
}

double sphere_integral(const ConvexBody& body, const ToleranceConfig& config,
                       const std::function<double(const Vec&)>& f) {
  const auto rule =
      QuadratureRule::for_body_dim(body.dim(), config.quad_points_circle, config.quad_rule_sphere2);
  return integrate_rule(f, rule);
}

}  // namespace

HyperbolicValues hyperbolic_oracle(double t, int n) {
  if (!(t >= 0.0)) throw ArgumentError("hyperbolic_oracle: t must be >= 0");
  if (n == 1) return {2.0 * kPi * (std::cosh(t) - 1.0), 2.0 * kPi * std::sinh(t)};
  if (n == 2) {
    const double sh = std::sinh(t);
    return {kPi * (std::sinh(2.0 * t) - 2.0 * t), 4.0 * kPi * sh * sh};
  }
  throw ArgumentError("hyperbolic_oracle: n must be 1 or 2");
}

double entropy_spheres(const MetricQuery& q, std::span<const double> t_grid) {
  check_entropy_grid(t_grid, "entropy_spheres");
  return log_slope(t_grid, [&](double t) { return sphere_area(q, t); });
}

double entropy_balls(const MetricQuery& q, std::span<const double> t_grid) {
  check_entropy_grid(t_grid, "entropy_balls");
  return log_slope(t_grid, [&](double t) { return ball_volume_polar(q, t); });
}

ExperimentReport ratio_curve(const MetricQuery& q, std::span<const double> t_grid) {
  check_curve_grid(t_grid, "ratio_curve");
  ExperimentReport report;
  report.summary = summarize(q.body);
  report.constants = shell_constants(q.body, report.summary, q.config);
  for (double t : t_grid) {
    ExperimentRow row;
    row.t = t;
    row.sphere_area = sphere_area(q, t);
    row.ball_volume = ball_volume_polar(q, t);
    row.ratio = row.ball_volume / row.sphere_area;
    row.ln_area_over_t = std::log(row.sphere_area) / t;
    report.rows.push_back(row);
  }
  return report;
}

BoundConstants shell_constants(const ConvexBody& body, const BodySummary& s,
                               const ToleranceConfig& config) {
  const double n = body.dim() - 1;
  BoundConstants out;
  out.d1 = -0.5 * std::log(0.5 * (1.0 + 1.0 / s.c)) + 0.0;
  out.d2 = -0.5 * std::log(0.5 * (1.0 + s.c)) + 0.0;
  const double scale = std::pow(2.0, -n);
  out.C1 = scale * sphere_integral(body, config, [&](const Vec& u) {
             return std::pow(body.radial(u) / s.R, 0.5 * n);
           });
  out.C2 = scale * std::pow(s.R / s.omega0, 0.5 * (n + 2.0)) *
           sphere_integral(body, config,
                           [&](const Vec& u) { return std::pow(body.radial(u) / s.r, 0.5 * n); });
  return out;
}

BoundConstants shell_constants(const ConvexBody& body, const ToleranceConfig& config) {
  return shell_constants(body, summarize(body), config);
}

VolumeEnvelope volume_envelope(const BoundConstants& k, int n, double t) {
  if (n < 1) throw ArgumentError("volume_envelope: n must be >= 1");
  const double grow = std::exp(n * t);
  return {k.C1 * std::exp(n * k.d2) * grow / n, k.C2 * std::exp(n * k.d1) * grow / n};
}

RatioBounds theorem2_bounds(const ConvexBody& body, const BodySummary& s,
                            const ToleranceConfig& config) {
  const double n = body.dim() - 1;
  const double h = 0.5 * n;
  const double sphere_int =
      sphere_integral(body, config, [&](const Vec& u) { return std::pow(body.radial(u), h); });
  const double boundary_int = sphere_integral(body, config, [&](const Vec& u) {
    return std::pow(body.radial(u), -h) * boundary_area_element(body, u);
  });
  const double sharp = sphere_int / boundary_int;
  const double euclid = unit_sphere_measure(body.dim()) / boundary_measure(body, config);
  const double kw0 = s.k * s.omega0;
  const double curv_up = std::pow(s.K / s.k, h);
  const double curv_lo = std::pow(s.k / s.K, h);
  const double c_up = std::pow(s.c, h);

  RatioBounds b;
  b.upper_sharp = c_up * curv_up / std::pow(kw0, h + 1.0) * sharp / n;
  b.lower_sharp = curv_lo * std::pow(kw0, h) / c_up * sharp / n;
  b.upper_simple = curv_up * std::pow(s.omega1 / s.omega0, n + 1.0) * std::pow(s.omega1 / s.k, h) /
                   (s.k * s.omega1) * euclid / n;
  b.lower_simple = curv_lo * std::pow(s.omega0 / s.omega1, h) * std::pow(s.omega0, n) *
                   std::pow(kw0, h) * euclid / n;
  b.upper_symmetric =
      c_up * curv_up * std::pow(s.omega1, n) / std::pow(kw0, h + 1.0) * euclid / n;
  b.lower_symmetric = curv_lo * std::pow(kw0, h) * std::pow(s.omega0, n) / c_up * euclid / n;
  return b;
}

RatioBounds theorem2_bounds(const ConvexBody& body, const ToleranceConfig& config) {
  return theorem2_bounds(body, summarize(body), config);
}

NormalAngleCheck lemma2_check(const ConvexBody& body, int grid, double slack) {
  if (grid < 512) throw ArgumentError("lemma2_check: grid must be >= 512");
  const BodySummary s = summarize(body, std::max(grid, body.dim() == 2 ? 256 : 1024));
  auto cosine = [&](const Vec& u) { return normal_and_curvature(body, u).normal.dot(u); };
  NormalAngleCheck out;
  out.min_cos = extremize_on_sphere(body.dim(), cosine, false, grid).value;
  out.bound = s.omega0 / s.R;
  out.holds = out.min_cos >= out.bound - slack;
  return out;
}

double funk_ball_radial(const ConvexBody& body, const Vec& u_in, double t) {
  if (!(t >= 0.0)) throw ArgumentError("funk_ball_radial: t must be >= 0");
  const Vec u = u_in / u_in.norm();
  return body.radial(u) * (-std::expm1(-t));
}

double funk_sphere_length(const MetricQuery& q, double t) {
  const ConvexBody& body = q.body;
  if (body.dim() != 2) throw ArgumentError("funk_sphere_length: planar bodies only");
  if (!(t >= 0.0 && t <= kMaxRadius)) throw ArgumentError("funk_sphere_length: t must lie in [0, 8]");
  if (t == 0.0) return 0.0;
  const double scale = -std::expm1(-t);
  const QuadratureRule rule = QuadratureRule::circle(q.config.quad_points_circle);
  const auto values = parallel_map(rule.size(), [&](std::size_t i) {
    const Vec& u = rule.nodes[i];
    const Jet w = body.radial_jet(u);
    Vec e1;
    Vec e2;
    tangent_basis(u, e1, e2);
    const Vec point = scale * w.v * u;
    const Vec velocity = scale * (w.d[0] * u + w.v * e1);
    return funk_norm(q, point, velocity);
  });
  return ordered_dot(rule.weights, values);
}

double funk_ball_volume(const MetricQuery& q, double t) {
  const ConvexBody& body = q.body;
  if (body.dim() != 2) throw ArgumentError("funk_ball_volume: planar bodies only");
  if (!(t >= 0.0 && t <= kMaxRadius)) throw ArgumentError("funk_ball_volume: t must lie in [0, 8]");
  if (t == 0.0) return 0.0;
  const QuadratureRule rule = QuadratureRule::circle(q.config.volume_points_circle);
  const auto [x, w] = gauss_legendre(12);
  const auto inner = parallel_map(rule.size(), [&](std::size_t i) {
    const Vec& u = rule.nodes[i];
    const double r_max = funk_ball_radial(body, u, t);
    double sum = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      const double r = 0.5 * r_max * (x[k] + 1.0);
      sum += w[k] * funk_density(q, Vec(r * u)).sigma * r;
    }
    return 0.5 * r_max * sum;
  });
  return ordered_dot(rule.weights, inner);
}

ExperimentReport funk_ratio_curve(const MetricQuery& q, std::span<const double> t_grid) {
  if (q.body.dim() != 2) throw ArgumentError("funk_ratio_curve: planar bodies only");
  check_curve_grid(t_grid, "funk_ratio_curve");
  ExperimentReport report;
  report.summary = summarize(q.body);
  report.constants = shell_constants(q.body, report.summary, q.config);
  for (double t : t_grid) {
    ExperimentRow row;
    row.t = t;
    row.sphere_area = funk_sphere_length(q, t);
    row.ball_volume = funk_ball_volume(q, t);
    row.ratio = row.ball_volume / row.sphere_area;
    row.ln_area_over_t = std::log(row.sphere_area) / t;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace hilbert
