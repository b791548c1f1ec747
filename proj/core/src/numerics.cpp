#include "hilbert/numerics.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

namespace hilbert {

Direction::Direction(const Vec& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw ArgumentError("direction must be a finite nonzero vector, got " + format_vec(v));
  }
  u_ = v / n;
}

Direction Direction::from_angle(double theta) {
  return Direction(vec2(std::cos(theta), std::sin(theta)), Normalized{});
}

Vec cross3(const Vec& a, const Vec& b) {
  return vec3(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]);
}

void tangent_basis(const Vec& u, Vec& e1, Vec& e2) {
  if (u.size() == 2) {
    e1 = vec2(-u[1], u[0]);
    e2 = Vec();
    return;
  }
  // Seed with the coordinate axis least aligned with u.
  int axis = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(u[i]) < std::abs(u[axis])) axis = i;
  }
  Vec seed = Vec::Zero(3);
  seed[axis] = 1.0;
  e1 = seed - seed.dot(u) * u;
  e1.normalize();
  e2 = cross3(u, e1);
}

std::string format_vec(const Vec& v) {
  std::string out = "(";
  char buf[32];
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", v[i]);
    out += buf;
    if (i + 1 < v.size()) out += ", ";
  }
  return out + ")";
}

void ToleranceConfig::validate() const {
  auto positive = [](double x, const char* name) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw ArgumentError(std::string("tolerance config: ") + name + " must be positive");
    }
  };
  positive(root_tol, "root_tol");
  positive(integral_rel_tol, "integral_rel_tol");
  auto even_at_least = [](int n, int min, const char* name) {
    if (n < min || n % 2 != 0) {
      throw ArgumentError(std::string("tolerance config: ") + name + " must be even and >= " +
                          std::to_string(min));
    }
  };
  even_at_least(quad_points_circle, 8, "quad_points_circle");
  even_at_least(density_points_circle, 8, "density_points_circle");
  even_at_least(funk_density_points_circle, 8, "funk_density_points_circle");
  even_at_least(volume_points_circle, 8, "volume_points_circle");
  for (const auto* s : {&quad_rule_sphere2, &density_rule_sphere2, &volume_rule_sphere2}) {
    if (s->polar < 2) throw ArgumentError("tolerance config: sphere rule needs >= 2 polar nodes");
    even_at_least(s->azimuth, 4, "sphere rule azimuth");
  }
}

ToleranceConfig ToleranceConfig::coarse() {
  ToleranceConfig cfg;
  cfg.quad_points_circle = 512;
  cfg.quad_rule_sphere2 = {16, 32};
  cfg.integral_rel_tol = 1e-6;
  cfg.density_points_circle = 32;
  cfg.density_rule_sphere2 = {6, 12};
  cfg.volume_points_circle = 64;
  cfg.volume_rule_sphere2 = {8, 16};
  return cfg;
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  if (n < 1) throw ArgumentError("gauss_legendre: n must be positive");
  std::vector<double> x(n);
  std::vector<double> w(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0;
    double p1 = z;
    for (int k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = n * (z * p1 - p0) / (z * z - 1.0);
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  if (n % 2 == 1) x[n / 2] = 0.0;
  return {x, w};
}

double unit_sphere_measure(int dim) {
  switch (dim) {
    case 1: return 2.0;
    case 2: return 2.0 * kPi;
    case 3: return 4.0 * kPi;
    default: throw ArgumentError("unit_sphere_measure: dim must be 1, 2 or 3");
  }
}

double unit_ball_volume(int dim) {
  switch (dim) {
    case 1: return 2.0;
    case 2: return kPi;
    case 3: return 4.0 * kPi / 3.0;
    default: throw ArgumentError("unit_ball_volume: dim must be 1, 2 or 3");
  }
}

QuadratureRule QuadratureRule::circle(int n_points) {
  if (n_points < 8) throw ArgumentError("circle rule needs at least 8 points");
  QuadratureRule rule;
  rule.dimension = 1;
  rule.nodes.reserve(n_points);
  const double h = 2.0 * kPi / n_points;
  for (int i = 0; i < n_points; ++i) {
    rule.nodes.push_back(vec2(std::cos(i * h), std::sin(i * h)));
  }
  rule.weights.assign(n_points, h);
  rule.antipode.assign(n_points, -1);
  if (n_points % 2 == 0) {
    for (int i = 0; i < n_points; ++i) rule.antipode[i] = (i + n_points / 2) % n_points;
  }
  return rule;
}

QuadratureRule QuadratureRule::sphere2(SphereRuleSize size) {
  if (size.polar < 1 || size.azimuth < 2) throw ArgumentError("sphere rule too small");
  const auto [z, wz] = gauss_legendre(size.polar);
  QuadratureRule rule;
  rule.dimension = 2;
  const int na = size.azimuth;
  const double h = 2.0 * kPi / na;
  rule.nodes.reserve(static_cast<std::size_t>(size.polar) * na);
  for (int i = 0; i < size.polar; ++i) {
    const double s = std::sqrt(std::max(0.0, 1.0 - z[i] * z[i]));
    for (int j = 0; j < na; ++j) {
      Vec u = vec3(s * std::cos(j * h), s * std::sin(j * h), z[i]);
      rule.nodes.push_back(u / u.norm());
      rule.weights.push_back(wz[i] * h);
    }
  }
  rule.antipode.assign(rule.nodes.size(), -1);
  if (na % 2 == 0) {
    for (int i = 0; i < size.polar; ++i) {
      for (int j = 0; j < na; ++j) {
        rule.antipode[i * na + j] = (size.polar - 1 - i) * na + (j + na / 2) % na;
      }
    }
  }
  return rule;
}

QuadratureRule QuadratureRule::for_body_dim(int dim, int circle_points, SphereRuleSize sphere_size) {
  if (dim == 2) return circle(circle_points);
  if (dim == 3) return sphere2(sphere_size);
  throw ArgumentError("quadrature rule: dim must be 2 or 3");
}

namespace {

double checked_node_sum(const std::function<double(const Vec&)>& f, const QuadratureRule& rule) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double fi = f(rule.nodes[i]);
    if (!std::isfinite(fi)) {
      throw EvaluationError("integrand is not finite at node " + std::to_string(i) + " " +
                            format_vec(rule.nodes[i]));
    }
    sum += rule.weights[i] * fi;
  }
  return sum;
}

}  // namespace

double integrate_circle(const std::function<double(const Vec&)>& f, int n_points) {
  return checked_node_sum(f, QuadratureRule::circle(n_points));
}

double integrate_sphere2(const std::function<double(const Vec&)>& f, const QuadratureRule& rule) {
  if (rule.dimension != 2) throw ArgumentError("integrate_sphere2 needs a dimension-2 rule");
  return checked_node_sum(f, rule);
}

double integrate_rule(const std::function<double(const Vec&)>& f, const QuadratureRule& rule) {
  return checked_node_sum(f, rule);
}

double fit_slope(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) throw DegenerateFitError("fit_slope: need at least two points");
  double mx = 0.0;
  double my = 0.0;
  for (const auto& [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(points.size());
  my /= static_cast<double>(points.size());
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (!(sxx > 0.0)) throw DegenerateFitError("fit_slope: all x values are equal");
  return sxy / sxx;
}

namespace {

struct GkResult {
  double value;
  double error;
};

constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

GkResult gauss_kronrod_15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  auto eval = [&](double x) {
    const double y = f(x);
    if (!std::isfinite(y)) {
      throw EvaluationError("integrand is not finite at x = " + std::to_string(x));
    }
    return y;
  };
  const double fc = eval(c);
  double kron = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kKronrodNodes[j];
    const double f1 = eval(c - dx);
    const double f2 = eval(c + dx);
    kron += kKronrodWeights[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * (f1 + f2);
  }
  return {kron * h, std::abs((kron - gauss) * h)};
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, double abs_tol, int max_intervals) {
  if (a == b) return 0.0;
  struct Piece {
    double a, b;
    GkResult r;
  };
  std::vector<Piece> pieces;
  pieces.push_back({a, b, gauss_kronrod_15(f, a, b)});
  for (int n = 1; n < max_intervals; ++n) {
    double total = 0.0;
    double err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      total += pieces[i].r.value;
      err += pieces[i].r.error;
      if (pieces[i].r.error > pieces[worst].r.error) worst = i;
    }
    if (err <= std::max(abs_tol, rel_tol * std::abs(total))) break;
    const Piece p = pieces[worst];
    const double mid = 0.5 * (p.a + p.b);
    if (!(mid > p.a && mid < p.b)) break;
    pieces[worst] = {p.a, mid, gauss_kronrod_15(f, p.a, mid)};
    pieces.push_back({mid, p.b, gauss_kronrod_15(f, mid, p.b)});
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) { return x.a < y.a; });
  double total = 0.0;
  for (const auto& p : pieces) total += p.r.value;
  return total;
}

double golden_section_min(const std::function<double(double)>& f, double a, double b, double tol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (std::abs(b - a) > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? c : d;
}

std::vector<double> parallel_map(std::size_t n, const std::function<double(std::size_t)>& f) {
  std::vector<double> out(n);
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(hw, n / 16 + 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) out[i] = f(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

double ordered_dot(std::span<const double> weights, std::span<const double> values) {
  double sum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) sum += weights[i] * values[i];
  return sum;
}

}  // namespace hilbert
