#include "hilbert/body.hpp"

#include <algorithm>
#include <limits>

namespace hilbert {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::array<double, 3> to_array(const Vec& u) {
  std::array<double, 3> a{};
  for (Eigen::Index i = 0; i < u.size(); ++i) a[i] = u[i];
  return a;
}

Vec jet_values(const std::array<Jet, 3>& x, int dim) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = x[i].v;
  return v;
}

Vec jet_first(const std::array<Jet, 3>& x, int dim, int var) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = x[i].d[var];
  return v;
}

Vec jet_second(const std::array<Jet, 3>& x, int dim, int slot) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = x[i].h[slot];
  return v;
}

// Boundary parametrization X = omega(u) u along the chart at u.
std::array<Jet, 3> boundary_jet(const ConvexBody& body, const Vec& u) {
  const auto dir = body.chart_direction(u);
  const Jet w = body.radial_of(dir);
  return {w * dir[0], w * dir[1], w * dir[2]};
}

void check_family(const BodyFamily& family, int dim) {
  if (dim != 2 && dim != 3) throw InvalidBodyError("body dimension must be 2 or 3");
  std::visit(
      Overloaded{
          [](const Ball& b) {
            if (!(b.radius > 0.0)) throw InvalidBodyError("ball radius must be positive");
          },
          [dim](const OffsetBall& b) {
            if (!(b.radius > 0.0)) throw InvalidBodyError("offset_ball radius must be positive");
            double c2 = 0.0;
            for (int i = 0; i < dim; ++i) c2 += b.center[i] * b.center[i];
            if (!(std::sqrt(c2) < b.radius)) {
              throw InvalidBodyError("offset_ball center must be strictly inside the ball so "
                                     "that the origin is interior");
            }
          },
          [dim](const Ellipse& e) {
            if (dim != 2) throw InvalidBodyError("ellipse is a planar family (dim 2)");
            if (!(e.a > 0.0 && e.b > 0.0)) throw InvalidBodyError("ellipse semi-axes must be positive");
          },
          [dim](const Ellipsoid& e) {
            if (dim != 3) throw InvalidBodyError("ellipsoid is a spatial family (dim 3)");
            if (!(e.a > 0.0 && e.b > 0.0 && e.c > 0.0)) {
              throw InvalidBodyError("ellipsoid semi-axes must be positive");
            }
          },
          [dim](const PerturbedBall& p) {
            if (dim != 2) throw InvalidBodyError("perturbed_ball is a planar family (dim 2)");
            if (p.m < 0) throw InvalidBodyError("perturbed_ball m must be nonnegative");
            if (!std::isfinite(p.epsilon)) throw InvalidBodyError("perturbed_ball epsilon must be finite");
          },
      },
      family);
}

}  // namespace

ConvexBody::ConvexBody(BodyFamily family, int dim) : family_(std::move(family)), dim_(dim) {
  check_family(family_, dim_);
  const QuadratureRule grid = dim_ == 2 ? QuadratureRule::circle(1024)
                                        : QuadratureRule::sphere2({64, 128});
  double max_omega = 0.0;
  for (const Vec& u : grid.nodes) {
    const double w = radial(u);
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw InvalidBodyError("radial function is not positive in direction " + format_vec(u));
    }
    max_omega = std::max(max_omega, w);
    const SurfacePoint sp = normal_and_curvature(*this, u);
    if (!(sp.curvatures.front() > 0.0)) {
      throw InvalidBodyError("boundary curvature is not positive in direction " + format_vec(u));
    }
  }
  bounding_radius_ = 1.05 * max_omega;
}

std::string_view ConvexBody::family_name() const noexcept {
  return std::visit(Overloaded{
                        [](const Ball&) { return std::string_view("ball"); },
                        [](const OffsetBall&) { return std::string_view("offset_ball"); },
                        [](const Ellipse&) { return std::string_view("ellipse"); },
                        [](const Ellipsoid&) { return std::string_view("ellipsoid"); },
                        [](const PerturbedBall&) { return std::string_view("perturbed_ball"); },
                    },
                    family_);
}

double ConvexBody::radial(const Vec& u) const {
  const auto a = to_array(u);
  return std::visit([&](const auto& f) { return f.omega(a, dim_); }, family_);
}

std::array<Jet, 3> ConvexBody::chart_direction(const Vec& u) const {
  Vec e1;
  Vec e2;
  tangent_basis(u, e1, e2);
  std::array<Jet, 3> out{Jet(0.0), Jet(0.0), Jet(0.0)};
  if (dim_ == 2) {
    const Jet tau = Jet::variable(0.0, 0);
    const Jet c = cos(tau);
    const Jet s = sin(tau);
    for (int i = 0; i < 2; ++i) out[i] = c * Jet(u[i]) + s * Jet(e1[i]);
    return out;
  }
  const Jet a = Jet::variable(0.0, 0);
  const Jet b = Jet::variable(0.0, 1);
  std::array<Jet, 3> w;
  Jet n2(0.0);
  for (int i = 0; i < 3; ++i) {
    w[i] = Jet(u[i]) + a * Jet(e1[i]) + b * Jet(e2[i]);
    n2 += w[i] * w[i];
  }
  const Jet inv = reciprocal(sqrt(n2));
  for (int i = 0; i < 3; ++i) out[i] = w[i] * inv;
  return out;
}

Jet ConvexBody::radial_of(const std::array<Jet, 3>& u) const {
  return std::visit([&](const auto& f) { return f.omega(u, dim_); }, family_);
}

Jet ConvexBody::radial_jet(const Vec& u) const { return radial_of(chart_direction(u)); }

bool ConvexBody::contains(const Vec& p) const {
  const double n = p.norm();
  if (n == 0.0) return true;
  return n < radial(Vec(p / n));
}

double ConvexBody::radial_gap(const Vec& p) const {
  const double n = p.norm();
  if (n == 0.0) return radial(Vec(Vec::Unit(dim_, 0)));
  return radial(Vec(p / n)) - n;
}

double ConvexBody::level(const Vec& x) const {
  const double n = x.norm();
  if (n == 0.0) return -1.0;
  return n / radial(Vec(x / n)) - 1.0;
}

double ConvexBody::ray_exit(const Vec& p, const Vec& dir) const {
  const double gap = radial_gap(p);
  if (!(gap > 0.0)) throw DomainError("ray_exit: point " + format_vec(p) + " is not interior");
  auto g = [&](double s) { return level(Vec(p + s * dir)); };
  const double s_max = p.norm() + bounding_radius_;
  double lo = 0.0;
  double hi = std::min(0.5 * gap, s_max);
  // Expand geometrically from the radial gap scale; near-boundary points then
  // get tight brackets for the grazing rays.
  while (g(hi) < 0.0) {
    if (hi >= s_max) throw BracketError("ray_exit: no boundary crossing found along the ray");
    lo = hi;
    hi = std::min(4.0 * hi, s_max);
  }
  return find_root_bracketed(g, lo, hi, 0.0);
}

ChordEndpoints chord_endpoints(const ConvexBody& body, const Vec& p, const Vec& v) {
  if (p.size() != body.dim() || v.size() != body.dim()) {
    throw ArgumentError("chord_endpoints: dimension mismatch");
  }
  const double vn = v.norm();
  if (!(vn > 0.0)) throw ArgumentError("chord_endpoints: direction vector must be nonzero");
  if (!body.contains(p)) {
    throw DomainError("chord_endpoints: point " + format_vec(p) + " is not in the open domain");
  }
  const Vec dir = v / vn;
  ChordEndpoints ch;
  ch.t_plus = body.ray_exit(p, dir);
  ch.t_minus = -body.ray_exit(p, Vec(-dir));
  ch.p_plus = p + ch.t_plus * dir;
  ch.p_minus = p + ch.t_minus * dir;
  return ch;
}

bool contains(const ConvexBody& body, const Vec& p) {
  if (p.size() != body.dim()) throw ArgumentError("contains: dimension mismatch");
  return body.contains(p);
}

SurfacePoint normal_and_curvature(const ConvexBody& body, const Vec& u_in) {
  const int dim = body.dim();
  const Vec u = u_in / u_in.norm();
  const auto X = boundary_jet(body, u);
  SurfacePoint sp;
  sp.point = jet_values(X, dim);
  if (dim == 2) {
    const Vec x1 = jet_first(X, 2, 0);
    const Vec x2 = jet_second(X, 2, 0);
    const double speed = x1.norm();
    sp.normal = vec2(x1[1], -x1[0]) / speed;
    if (sp.normal.dot(sp.point) < 0.0) sp.normal = -sp.normal;
    const double cross = x1[0] * x2[1] - x1[1] * x2[0];
    sp.curvatures = {cross / (speed * speed * speed)};
    return sp;
  }
  const Vec xa = jet_first(X, 3, 0);
  const Vec xb = jet_first(X, 3, 1);
  Vec n = cross3(xa, xb);
  n.normalize();
  if (n.dot(sp.point) < 0.0) n = -n;
  sp.normal = n;
  const double E = xa.dot(xa);
  const double F = xa.dot(xb);
  const double G = xb.dot(xb);
  const double L = -jet_second(X, 3, 0).dot(n);
  const double M = -jet_second(X, 3, 1).dot(n);
  const double N = -jet_second(X, 3, 2).dot(n);
  // Shape operator in an orthonormal tangent frame (Cholesky of the first form).
  const double l11 = std::sqrt(E);
  const double l21 = F / l11;
  const double l22 = std::sqrt(G - l21 * l21);
  const double p = L / E;
  const double q = (M - l21 * L / l11) / (l11 * l22);
  const double r = (N - 2.0 * l21 * M / l11 + l21 * l21 * L / E) / (l22 * l22);
  const double mid = 0.5 * (p + r);
  const double half = std::hypot(0.5 * (p - r), q);
  sp.curvatures = {mid - half, mid + half};
  return sp;
}

double boundary_area_element(const ConvexBody& body, const Vec& u) {
  const auto X = boundary_jet(body, u);
  if (body.dim() == 2) return jet_first(X, 2, 0).norm();
  return cross3(jet_first(X, 3, 0), jet_first(X, 3, 1)).norm();
}

SphereExtremum extremize_on_sphere(int dim, const std::function<double(const Vec&)>& f,
                                   bool maximize, int grid_size) {
  const double sign = maximize ? -1.0 : 1.0;
  auto objective = [&](const Vec& u) { return sign * f(u); };
  if (dim == 2) {
    if (grid_size < 8) throw ArgumentError("extremize_on_sphere: grid too small");
    const double h = 2.0 * kPi / grid_size;
    int best = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_size; ++i) {
      const double v = objective(vec2(std::cos(i * h), std::sin(i * h)));
      if (v < best_val) {
        best_val = v;
        best = i;
      }
    }
    auto along = [&](double th) { return objective(vec2(std::cos(th), std::sin(th))); };
    const double th = golden_section_min(along, best * h - h, best * h + h, 1e-12);
    const double refined = along(th);
    if (refined < best_val) return {vec2(std::cos(th), std::sin(th)), sign * refined};
    return {vec2(std::cos(best * h), std::sin(best * h)), sign * best_val};
  }
  const int polar = std::max(2, static_cast<int>(std::lround(std::sqrt(grid_size / 2.0))));
  const QuadratureRule grid = QuadratureRule::sphere2({polar, 2 * polar});
  std::size_t best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = objective(grid.nodes[i]);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  Vec u = grid.nodes[best];
  double window = kPi / polar;
  for (int sweep = 0; sweep < 6; ++sweep) {
    Vec e1;
    Vec e2;
    tangent_basis(u, e1, e2);
    for (const Vec* axis : {&e1, &e2}) {
      auto along = [&](double s) {
        Vec w = u + s * *axis;
        return objective(Vec(w / w.norm()));
      };
      const double s = golden_section_min(along, -window, window, 1e-12);
      const double v = along(s);
      if (v < best_val) {
        best_val = v;
        Vec w = u + s * *axis;
        u = w / w.norm();
      }
    }
    window *= 0.5;
  }
  return {u, sign * best_val};
}

BodySummary summarize(const ConvexBody& body, int grid_size) {
  const int dim = body.dim();
  if (dim == 2 && grid_size < 256) throw ArgumentError("summarize: 2D grid needs >= 256 points");
  if (dim == 3 && grid_size < 1024) throw ArgumentError("summarize: 3D grid needs >= 1024 points");
  auto omega = [&](const Vec& u) { return body.radial(u); };
  auto asym = [&](const Vec& u) { return body.radial(u) / body.radial(Vec(-u)); };
  auto kmin = [&](const Vec& u) { return normal_and_curvature(body, u).curvatures.front(); };
  auto kmax = [&](const Vec& u) { return normal_and_curvature(body, u).curvatures.back(); };
  BodySummary s;
  s.omega0 = extremize_on_sphere(dim, omega, false, grid_size).value;
  s.omega1 = extremize_on_sphere(dim, omega, true, grid_size).value;
  s.c = std::max(1.0, extremize_on_sphere(dim, asym, true, grid_size).value);
  s.k = extremize_on_sphere(dim, kmin, false, grid_size).value;
  s.K = extremize_on_sphere(dim, kmax, true, grid_size).value;
  s.r = 1.0 / s.K;
  s.R = 1.0 / s.k;
  return s;
}

BoundaryDistance euclid_dist_to_boundary(const ConvexBody& body, const Vec& p) {
  if (p.size() != body.dim()) throw ArgumentError("euclid_dist_to_boundary: dimension mismatch");
  if (!body.contains(p)) {
    throw DomainError("euclid_dist_to_boundary: point " + format_vec(p) + " is not interior");
  }
  auto dist = [&](const Vec& u) { return (p - body.boundary_point(u)).norm(); };
  const auto best = extremize_on_sphere(body.dim(), dist, false, body.dim() == 2 ? 2048 : 8192);
  return {best.value, body.boundary_point(best.u)};
}

double boundary_measure(const ConvexBody& body, const ToleranceConfig& config) {
  const auto rule =
      QuadratureRule::for_body_dim(body.dim(), config.quad_points_circle, config.quad_rule_sphere2);
  return integrate_rule([&](const Vec& u) { return boundary_area_element(body, u); }, rule);
}

double body_volume(const ConvexBody& body, const ToleranceConfig& config) {
  const int dim = body.dim();
  const auto rule =
      QuadratureRule::for_body_dim(dim, config.quad_points_circle, config.quad_rule_sphere2);
  return integrate_rule([&](const Vec& u) { return std::pow(body.radial(u), dim) / dim; }, rule);
}

ConvexBody make_ball(double radius, int dim) { return ConvexBody(Ball{radius}, dim); }

ConvexBody make_offset_ball(double radius, const Vec& center) {
  OffsetBall b{radius, to_array(center)};
  return ConvexBody(b, static_cast<int>(center.size()));
}

ConvexBody make_ellipse(double a, double b) { return ConvexBody(Ellipse{a, b}, 2); }

ConvexBody make_ellipsoid(double a, double b, double c) {
  return ConvexBody(Ellipsoid{a, b, c}, 3);
}

ConvexBody make_perturbed_ball(double epsilon, int m) {
  return ConvexBody(PerturbedBall{epsilon, m}, 2);
}

}  // namespace hilbert
