#include "hilbert/spheres.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace hilbert {

namespace {

void check_radius(double t, const char* what) {
  if (!std::isfinite(t) || t < 0.0) throw ArgumentError(std::string(what) + ": t must be >= 0");
}

void check_volume_radius(double t, const char* what) {
  check_radius(t, what);
  if (t > kMaxRadius) {
    throw ArgumentError(std::string(what) + ": t must be <= 8 (chord conditioning limit)");
  }
}

std::array<Jet, 3> negate(const std::array<Jet, 3>& u) { return {-u[0], -u[1], -u[2]}; }

// rho_t along the chart at u, as a jet.
Jet sphere_radial_jet(const ConvexBody& body, const std::array<Jet, 3>& dir, double t) {
  const double e = std::exp(-2.0 * t);
  const Jet w = body.radial_of(dir);
  const Jet wm = body.radial_of(negate(dir));
  return w * wm * Jet(1.0 - e) / (w * Jet(e) + wm);
}

// Finsler norm at an interior point without the boundary-distance check.
double raw_norm(const ConvexBody& body, const Vec& p, const Vec& v) {
  const double n = v.norm();
  if (n == 0.0) return 0.0;
  const Vec d = v / n;
  return 0.5 * n * (1.0 / body.ray_exit(p, d) + 1.0 / body.ray_exit(p, Vec(-d)));
}

// Area of the unit ball of a planar norm N, by whitening with a quadratic fit
// of N^2 and a symmetric circle rule.
double planar_norm_ball_area(const std::function<double(const Vec&)>& norm, int points) {
  std::array<Vec, 8> dirs;
  Eigen::Matrix<double, 8, 3> design;
  Eigen::Matrix<double, 8, 1> rhs;
  for (int k = 0; k < 8; ++k) {
    const double a = k * kPi / 8.0;
    dirs[k] = vec2(std::cos(a), std::sin(a));
    const double f = norm(dirs[k]);
    const double f2 = f * f;
    design.row(k) << dirs[k][0] * dirs[k][0] / f2, 2.0 * dirs[k][0] * dirs[k][1] / f2,
        dirs[k][1] * dirs[k][1] / f2;
    rhs[k] = 1.0;
  }
  const Eigen::Vector3d g = design.colPivHouseholderQr().solve(rhs);
  Eigen::Matrix2d gm;
  gm << g[0], g[1], g[1], g[2];
  Eigen::Matrix2d a = Eigen::Matrix2d::Identity();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(gm);
  if (eig.info() == Eigen::Success && eig.eigenvalues().minCoeff() > 0.0) {
    a = eig.eigenvectors() * eig.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
        eig.eigenvectors().transpose();
  }
  const QuadratureRule rule = QuadratureRule::circle(points);
  std::vector<double> values(rule.size(), -1.0);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    if (values[i] >= 0.0) continue;
    const Vec w = a * rule.nodes[i];
    const double f = norm(w);
    values[i] = 1.0 / (f * f);
    values[static_cast<std::size_t>(rule.antipode[i])] = values[i];
  }
  return std::abs(a.determinant()) * 0.5 * ordered_dot(rule.weights, values);
}

}  // namespace

double sphere_radial(const ConvexBody& body, const Vec& u_in, double t) {
  check_radius(t, "sphere_radial");
  const Vec u = u_in / u_in.norm();
  const double w = body.radial(u);
  const double wm = body.radial(Vec(-u));
  const double e = std::exp(-2.0 * t);
  return w * wm * (-std::expm1(-2.0 * t)) / (w * e + wm);
}

double sphere_gap(const ConvexBody& body, const Vec& u_in, double t) {
  check_radius(t, "sphere_gap");
  const Vec u = u_in / u_in.norm();
  const double w = body.radial(u);
  const double wm = body.radial(Vec(-u));
  const double e = std::exp(-2.0 * t);
  return w * (w + wm) * e / (w * e + wm);
}

AsymCoeffs lemma1_coeffs(const ConvexBody& body, const Vec& u_in) {
  const Vec u = u_in / u_in.norm();
  AsymCoeffs out;
  if (body.dim() != 2) {
    const double w = body.radial(u);
    const double wm = body.radial(Vec(-u));
    out.delta = w * (w / wm + 1.0);
    return out;
  }
  const auto dir = body.chart_direction(u);
  const Jet w = body.radial_of(dir);
  const Jet wm = body.radial_of(negate(dir));
  // Leading term of e^{2t} (omega - rho_t) as a function of the angle.
  const Jet lead = w * w / wm + w;
  out.delta = lead.v;
  out.delta1 = lead.d[0];
  out.delta2 = lead.h[0];

  const double a = w.v;
  const double a1 = w.d[0];
  const double a2 = w.h[0];
  const double b = wm.v;
  // Derivatives of u -> omega at -u taken with respect to the same angle:
  // d/du omega(-u) = -omega'(-u), second derivative keeps its sign.
  const double b1 = -wm.d[0];
  const double b2 = wm.h[0];
  const double printed = a * a * (2.0 * b1 * b1 - b * b2) + b * b * (2.0 * a1 * a1 + b * a2) +
                         2.0 * b * a * (2.0 * b1 * a1);
  out.delta2_as_printed = printed / (a * a * a);
  return out;
}

Vec phi(const ConvexBody& body, const Vec& u_in, double s) {
  if (!(s >= 0.0)) throw ArgumentError("phi: s must be >= 0");
  const Vec u = u_in / u_in.norm();
  return std::tanh(s) * body.radial(u) * u;
}

double phi_jacobian(const ConvexBody& body, const Vec& u_in, double s) {
  if (!(s >= 0.0)) throw ArgumentError("phi_jacobian: s must be >= 0");
  const Vec u = u_in / u_in.norm();
  const int dim = body.dim();
  const double th = std::tanh(s);
  const double sech = 1.0 / std::cosh(s);
  return std::pow(body.radial(u), dim) * std::pow(th, dim - 1) * sech * sech;
}

double sphere_polar_limit(const ConvexBody& body, const Vec& u_in, double t) {
  check_radius(t, "sphere_polar_limit");
  const Vec u = u_in / u_in.norm();
  const double w = body.radial(u);
  const double gap = sphere_gap(body, u, t);
  return 0.5 * std::log((2.0 * w - gap) / gap);
}

double ball_volume_polar(const MetricQuery& q, double t) {
  check_volume_radius(t, "ball_volume_polar");
  q.config.validate();
  if (t == 0.0) return 0.0;
  const ConvexBody& body = q.body;
  const QuadratureRule rule = QuadratureRule::for_body_dim(body.dim(), q.config.volume_points_circle,
                                                           q.config.volume_rule_sphere2);
  const auto inner = parallel_map(rule.size(), [&](std::size_t i) {
    const Vec& u = rule.nodes[i];
    const double s_max = sphere_polar_limit(body, u, t);
    auto integrand = [&](double s) {
      if (s == 0.0) return 0.0;
      const Vec x = phi(body, u, s);
      return busemann_density(q, x).sigma * phi_jacobian(body, u, s);
    };
    return integrate_adaptive(integrand, 0.0, s_max, q.config.integral_rel_tol);
  });
  return ordered_dot(rule.weights, inner);
}

double ball_volume_direct(const MetricQuery& q, double t) {
  check_volume_radius(t, "ball_volume_direct");
  q.config.validate();
  const ConvexBody& body = q.body;
  if (body.dim() != 2) throw ArgumentError("ball_volume_direct: planar bodies only");
  if (t == 0.0) return 0.0;
  const QuadratureRule rule = QuadratureRule::circle(q.config.volume_points_circle);
  const auto inner = parallel_map(rule.size(), [&](std::size_t i) {
    const Vec& u = rule.nodes[i];
    const double r_max = sphere_radial(body, u, t);
    auto integrand = [&](double r) {
      if (r == 0.0) return 0.0;
      return busemann_density(q, Vec(r * u)).sigma * r;
    };
    return integrate_adaptive(integrand, 0.0, r_max, q.config.integral_rel_tol);
  });
  return ordered_dot(rule.weights, inner);
}

double sphere_area(const MetricQuery& q, double t) {
  check_volume_radius(t, "sphere_area");
  q.config.validate();
  const ConvexBody& body = q.body;
  const int dim = body.dim();
  const QuadratureRule rule =
      QuadratureRule::for_body_dim(dim, q.config.quad_points_circle, q.config.quad_rule_sphere2);
  if (t == 0.0) return 0.0;
  const auto values = parallel_map(rule.size(), [&](std::size_t i) {
    const Vec& u = rule.nodes[i];
    const auto dir = body.chart_direction(u);
    const Jet rho = sphere_radial_jet(body, dir, t);
    std::array<Jet, 3> x;
    for (int k = 0; k < 3; ++k) x[k] = rho * dir[k];
    Vec point(dim);
    Vec xa(dim);
    Vec xb(dim);
    for (int k = 0; k < dim; ++k) {
      point[k] = x[k].v;
      xa[k] = x[k].d[0];
      xb[k] = x[k].d[1];
    }
    require_interior(body, point, "sphere_area");
    if (dim == 2) return raw_norm(body, point, xa);
    // Pulled-back norm on the chart plane; its unit ball gives the density.
    auto pulled = [&](const Vec& w) { return raw_norm(body, point, Vec(w[0] * xa + w[1] * xb)); };
    const double area = planar_norm_ball_area(pulled, q.config.density_points_circle);
    return kPi / area;
  });
  return ordered_dot(rule.weights, values);
}

std::vector<Vec> sphere_vertices(const ConvexBody& body, double t, int n) {
  if (body.dim() != 2) throw ArgumentError("sphere_vertices: planar bodies only");
  if (n < 3) throw ArgumentError("sphere_vertices: need at least 3 vertices");
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double th = 2.0 * kPi * k / n;
    const Vec u = vec2(std::cos(th), std::sin(th));
    out.push_back(sphere_radial(body, u, t) * u);
  }
  return out;
}

double sphere_area_chords(const MetricQuery& q, double t, int n_chords) {
  check_volume_radius(t, "sphere_area_chords");
  if (q.body.dim() != 2) throw ArgumentError("sphere_area_chords: planar bodies only");
  if (n_chords < 64) throw ArgumentError("sphere_area_chords: n_chords must be >= 64");
  if (t == 0.0) return 0.0;
  const auto verts = sphere_vertices(q.body, t, n_chords);
  const auto lengths = parallel_map(verts.size(), [&](std::size_t k) {
    return hilbert_distance(q, verts[k], verts[(k + 1) % verts.size()]);
  });
  double total = 0.0;
  for (double l : lengths) total += l;
  return total;
}

GapBounds boundary_gap_bounds(const ConvexBody& body, const BodySummary& summary, const Vec& u_in,
                              double s) {
  if (!(s >= 1.0)) throw ArgumentError("boundary_gap_bounds: s must be >= 1");
  const Vec u = u_in / u_in.norm();
  const double w = body.radial(u);
  const double e = std::exp(-2.0 * s);
  GapBounds out;
  out.upper = 2.0 * w * e;
  out.lower = 2.0 * (summary.omega0 / summary.R) * w * e;
  out.eps = 5.0 * e;
  out.actual = euclid_dist_to_boundary(body, phi(body, u, s)).distance;
  out.holds = out.lower * (1.0 - out.eps) <= out.actual && out.actual <= out.upper * (1.0 + out.eps);
  return out;
}

}  // namespace hilbert
