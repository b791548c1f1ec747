#include "hilbert/metric.hpp"

#include <Eigen/Eigenvalues>

#include <array>
#include <cmath>
#include <vector>

namespace hilbert {

namespace {

// Hilbert norm of a unit direction at an already validated point.
double unit_norm(const ConvexBody& body, const Vec& p, const Vec& dir) {
  return 0.5 * (1.0 / body.ray_exit(p, dir) + 1.0 / body.ray_exit(p, Vec(-dir)));
}

double norm_unchecked(const ConvexBody& body, const Vec& p, const Vec& v) {
  const double n = v.norm();
  if (n == 0.0) return 0.0;
  return n * unit_norm(body, p, Vec(v / n));
}

std::vector<Vec> fit_directions(int dim) {
  std::vector<Vec> dirs;
  if (dim == 2) {
    for (int k = 0; k < 8; ++k) {
      const double a = k * kPi / 8.0;
      dirs.push_back(vec2(std::cos(a), std::sin(a)));
    }
    return dirs;
  }
  const double s2 = 1.0 / std::sqrt(2.0);
  const double s3 = 1.0 / std::sqrt(3.0);
  dirs = {vec3(1, 0, 0),     vec3(0, 1, 0),      vec3(0, 0, 1),      vec3(s2, s2, 0),
          vec3(s2, -s2, 0),  vec3(s2, 0, s2),    vec3(s2, 0, -s2),   vec3(0, s2, s2),
          vec3(0, s2, -s2),  vec3(s3, s3, s3),   vec3(s3, s3, -s3),  vec3(s3, -s3, s3),
          vec3(s3, -s3, -s3)};
  return dirs;
}

using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, 3, 3>;

// Linear frame A with F(p, A w) close to |w|: first scale a normal/tangent
// frame, then undo the best quadratic fit of F^2 in that frame.
Mat whitening_frame(const ConvexBody& body, const Vec& p) {
  const int dim = body.dim();
  const double pn = p.norm();
  const Vec u = pn > 0.0 ? Vec(p / pn) : Vec(Vec::Unit(dim, 0));
  const Vec normal = normal_and_curvature(body, u).normal;
  Vec e1;
  Vec e2;
  tangent_basis(normal, e1, e2);
  Mat a0(dim, dim);
  a0.col(0) = normal / unit_norm(body, p, normal);
  a0.col(1) = e1 / unit_norm(body, p, e1);
  if (dim == 3) a0.col(2) = e2 / unit_norm(body, p, e2);

  const auto dirs = fit_directions(dim);
  const int unknowns = dim == 2 ? 3 : 6;
  Eigen::MatrixXd design(static_cast<Eigen::Index>(dirs.size()), unknowns);
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(dirs.size()));
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    const Vec& w = dirs[k];
    const double f = norm_unchecked(body, p, Vec(a0 * w));
    const double f2 = f * f;
    const auto row = static_cast<Eigen::Index>(k);
    // Rows scaled by 1/f^2 so the fit minimizes relative error.
    if (dim == 2) {
      design.row(row) << w[0] * w[0], 2.0 * w[0] * w[1], w[1] * w[1];
    } else {
      design.row(row) << w[0] * w[0], w[1] * w[1], w[2] * w[2], 2.0 * w[0] * w[1],
          2.0 * w[0] * w[2], 2.0 * w[1] * w[2];
    }
    design.row(row) /= f2;
    rhs[row] = 1.0;
  }
  const Eigen::VectorXd g = design.colPivHouseholderQr().solve(rhs);
  Mat gm(dim, dim);
  if (dim == 2) {
    gm << g[0], g[1], g[1], g[2];
  } else {
    gm << g[0], g[3], g[4], g[3], g[1], g[5], g[4], g[5], g[2];
  }
  Eigen::SelfAdjointEigenSolver<Mat> eig(gm);
  const auto& lambda = eig.eigenvalues();
  if (eig.info() != Eigen::Success || !(lambda.minCoeff() > 0.0) || !lambda.allFinite()) {
    return a0;
  }
  const Mat inv_sqrt =
      eig.eigenvectors() * lambda.cwiseSqrt().cwiseInverse().asDiagonal() *
      eig.eigenvectors().transpose();
  return a0 * inv_sqrt;
}

}  // namespace

void require_interior(const ConvexBody& body, const Vec& p, const char* what) {
  if (p.size() != body.dim()) {
    throw ArgumentError(std::string(what) + ": point has dimension " + std::to_string(p.size()) +
                        ", body has dimension " + std::to_string(body.dim()));
  }
  if (!p.allFinite()) throw DomainError(std::string(what) + ": point is not finite");
  if (!body.contains(p) || body.radial_gap(p) < kBoundaryExclusion) {
    throw DomainError(std::string(what) + ": point " + format_vec(p) +
                      " is not strictly inside the body");
  }
}

double hilbert_distance(const MetricQuery& q, const Vec& p, const Vec& p2) {
  require_interior(q.body, p, "hilbert_distance");
  require_interior(q.body, p2, "hilbert_distance");
  const Vec diff = p2 - p;
  const double D = diff.norm();
  if (D == 0.0) return 0.0;
  const Vec dir = diff / D;
  // p1 lies behind p, q1 beyond p2 on the chord through both points.
  const double behind = q.body.ray_exit(p, Vec(-dir));
  const double beyond = q.body.ray_exit(p2, dir);
  return 0.5 * (std::log1p(D / behind) + std::log1p(D / beyond));
}

double finsler_norm(const MetricQuery& q, const Vec& p, const Vec& v) {
  require_interior(q.body, p, "finsler_norm");
  if (v.size() != q.body.dim()) throw ArgumentError("finsler_norm: vector dimension mismatch");
  return norm_unchecked(q.body, p, v);
}

double klein_norm(double radius, const Vec& center, const Vec& p, const Vec& v) {
  if (!(radius > 0.0)) throw ArgumentError("klein_norm: radius must be positive");
  if (center.size() != p.size() || v.size() != p.size()) {
    throw ArgumentError("klein_norm: dimension mismatch");
  }
  const Vec pt = p - center;
  const double denom = radius * radius - pt.squaredNorm();
  if (!(denom > 0.0)) throw DomainError("klein_norm: point is not inside the ball");
  const double dot = v.dot(pt);
  return std::sqrt(v.squaredNorm() / denom + dot * dot / (denom * denom));
}

double funk_norm(const MetricQuery& q, const Vec& p, const Vec& v) {
  require_interior(q.body, p, "funk_norm");
  if (v.size() != q.body.dim()) throw ArgumentError("funk_norm: vector dimension mismatch");
  const double n = v.norm();
  if (!(n > 0.0)) throw ArgumentError("funk_norm: vector must be nonzero");
  return n / q.body.ray_exit(p, Vec(v / n));
}

DensityValue busemann_density(const MetricQuery& q, const Vec& p) {
  require_interior(q.body, p, "busemann_density");
  const ConvexBody& body = q.body;
  const int dim = body.dim();
  const Mat a = whitening_frame(body, p);
  const QuadratureRule rule = QuadratureRule::for_body_dim(dim, q.config.density_points_circle,
                                                           q.config.density_rule_sphere2);
  // F is reversible, so antipodal nodes share a value.
  std::vector<double> values(rule.size(), -1.0);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    if (values[i] >= 0.0) continue;
    const double f = norm_unchecked(body, p, Vec(a * rule.nodes[i]));
    const double v = std::pow(f, -dim);
    values[i] = v;
    values[static_cast<std::size_t>(rule.antipode[i])] = v;
  }
  const double integral = ordered_dot(rule.weights, values);
  const double tangent_volume = std::abs(a.determinant()) * integral / dim;
  const double sigma = unit_ball_volume(dim) / tangent_volume;
  if (!std::isfinite(sigma) || !(sigma > 0.0)) {
    throw EvaluationError("busemann_density: non-finite density at " + format_vec(p));
  }
  return {sigma};
}

DensityValue funk_density(const MetricQuery& q, const Vec& p) {
  require_interior(q.body, p, "funk_density");
  const ConvexBody& body = q.body;
  const int dim = body.dim();
  const QuadratureRule rule = QuadratureRule::for_body_dim(
      dim, q.config.funk_density_points_circle, q.config.quad_rule_sphere2);
  // The Funk unit ball at p is the body seen from p: radius ray_exit(p, u).
  const double integral =
      integrate_rule([&](const Vec& u) { return std::pow(body.ray_exit(p, u), dim); }, rule);
  const double sigma = unit_ball_volume(dim) / (integral / dim);
  if (!std::isfinite(sigma) || !(sigma > 0.0)) {
    throw EvaluationError("funk_density: non-finite density at " + format_vec(p));
  }
  return {sigma};
}

double klein_density(double radius, double depth, int dim) {
  if (!(radius > 0.0)) throw ArgumentError("klein_density: radius must be positive");
  if (!(depth > 0.0 && depth < 2.0 * radius)) {
    throw DomainError("klein_density: depth must lie in (0, 2 radius)");
  }
  const double x = 1.0 - depth / radius;
  return 1.0 / (std::pow(radius, dim) * std::pow(1.0 - x * x, 0.5 * (dim + 1)));
}

DensitySandwich density_sandwich(const MetricQuery& q, const BodySummary& summary, const Vec& p,
                                 double rel_slack) {
  DensitySandwich out;
  out.sigma = busemann_density(q, p).sigma;
  out.depth = euclid_dist_to_boundary(q.body, p).distance;
  const int dim = q.body.dim();
  out.lower = klein_density(summary.R, out.depth, dim);
  out.upper = klein_density(summary.r, out.depth, dim);
  out.holds = out.lower * (1.0 - rel_slack) <= out.sigma && out.sigma <= out.upper * (1.0 + rel_slack);
  return out;
}

}  // namespace hilbert
