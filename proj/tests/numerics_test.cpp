#include "support.hpp"

#include <gtest/gtest.h>

#include <limits>

using namespace hilbert;
using hilbert::testing::Sampler;

namespace {

double theta_of(const Vec& u) { return std::atan2(u[1], u[0]); }

}  // namespace

TEST(IntegrateCircle, ConstantGivesCircumference) {
  EXPECT_NEAR(integrate_circle([](const Vec&) { return 1.0; }, 64), 2.0 * kPi, 1e-13);
}

TEST(IntegrateCircle, OddIntegrandVanishes) {
  EXPECT_NEAR(integrate_circle([](const Vec& u) { return u[0]; }, 64), 0.0, 1e-13);
}

TEST(IntegrateCircle, CosineSquared) {
  // int_0^{2 pi} cos^2 = pi
  EXPECT_NEAR(integrate_circle([](const Vec& u) { return u[0] * u[0]; }, 64), kPi, 1e-12);
}

TEST(IntegrateCircle, ExactForTrigonometricPolynomials) {
  Sampler s(7);
  const int n = 32;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> a(n / 2);
    std::vector<double> b(n / 2);
    for (int k = 0; k < n / 2; ++k) {
      a[k] = s.uniform(-1.0, 1.0);
      b[k] = s.uniform(-1.0, 1.0);
    }
    auto f = [&](const Vec& u) {
      const double th = theta_of(u);
      double sum = 0.0;
      for (int k = 0; k < n / 2; ++k) sum += a[k] * std::cos(k * th) + b[k] * std::sin(k * th);
      return sum;
    };
    EXPECT_NEAR(integrate_circle(f, n), 2.0 * kPi * a[0], 1e-12);
  }
}

TEST(IntegrateCircle, RejectsNonFiniteValues) {
  auto f = [](const Vec& u) { return u[0] > 0.99 ? std::numeric_limits<double>::quiet_NaN() : 1.0; };
  EXPECT_THROW(integrate_circle(f, 64), EvaluationError);
}

TEST(IntegrateCircle, RejectsTooFewPoints) {
  EXPECT_THROW(integrate_circle([](const Vec&) { return 1.0; }, 4), ArgumentError);
}

TEST(IntegrateSphere2, Moments) {
  const auto rule = QuadratureRule::sphere2({64, 128});
  EXPECT_NEAR(integrate_sphere2([](const Vec&) { return 1.0; }, rule), 4.0 * kPi, 1e-12);
  EXPECT_NEAR(integrate_sphere2([](const Vec& u) { return u[2]; }, rule), 0.0, 1e-12);
  EXPECT_NEAR(integrate_sphere2([](const Vec& u) { return u[2] * u[2]; }, rule), 4.0 * kPi / 3.0,
              1e-8);
  // int x^2 y^2 over S^2 = 4 pi / 15
  EXPECT_NEAR(integrate_sphere2([](const Vec& u) { return u[0] * u[0] * u[1] * u[1]; }, rule),
              4.0 * kPi / 15.0, 1e-12);
}

TEST(IntegrateSphere2, RejectsCircleRule) {
  EXPECT_THROW(integrate_sphere2([](const Vec&) { return 1.0; }, QuadratureRule::circle(16)),
               ArgumentError);
}

TEST(QuadratureRule, WeightsAndNodes) {
  for (const auto& rule : {QuadratureRule::circle(8), QuadratureRule::circle(2048),
                           QuadratureRule::sphere2({8, 16}), QuadratureRule::sphere2({64, 128})}) {
    double sum = 0.0;
    for (double w : rule.weights) {
      EXPECT_GT(w, 0.0);
      sum += w;
    }
    const double total = rule.dimension == 1 ? 2.0 * kPi : 4.0 * kPi;
    EXPECT_NEAR(sum, total, 1e-12);
    for (std::size_t i = 0; i < rule.size(); ++i) {
      EXPECT_NEAR(rule.nodes[i].norm(), 1.0, 1e-12);
      const Vec& opposite = rule.nodes[static_cast<std::size_t>(rule.antipode[i])];
      EXPECT_LT((rule.nodes[i] + opposite).norm(), 1e-12);
      EXPECT_EQ(rule.weights[i], rule.weights[static_cast<std::size_t>(rule.antipode[i])]);
    }
  }
}

TEST(GaussLegendre, ExactForPolynomials) {
  const auto [x, w] = gauss_legendre(10);
  for (int p = 0; p < 20; ++p) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += w[i] * std::pow(x[i], p);
    const double expected = p % 2 == 1 ? 0.0 : 2.0 / (p + 1);
    EXPECT_NEAR(sum, expected, 1e-14) << "degree " << p;
  }
  EXPECT_TRUE(std::is_sorted(x.begin(), x.end()));
}

TEST(UnitMeasures, KnownValues) {
  EXPECT_NEAR(unit_sphere_measure(2), 2.0 * kPi, 1e-15);
  EXPECT_NEAR(unit_sphere_measure(3), 4.0 * kPi, 1e-15);
  EXPECT_NEAR(unit_ball_volume(2), kPi, 1e-15);
  EXPECT_NEAR(unit_ball_volume(3), 4.0 * kPi / 3.0, 1e-15);
}

TEST(FindRoot, SquareRootOfTwo) {
  const double r = find_root_bracketed([](double x) { return x * x - 2.0; }, 1.0, 2.0, 1e-12);
  EXPECT_NEAR(r, 1.41421356237309504880, 1e-12);
}

TEST(FindRoot, LinearRootAtZero) {
  EXPECT_NEAR(find_root_bracketed([](double x) { return x; }, -1.0, 1.0, 1e-12), 0.0, 1e-12);
}

TEST(FindRoot, EndpointRoot) {
  const double b = 3.25;
  EXPECT_EQ(find_root_bracketed([&](double x) { return x - b; }, 1.0, b, 1e-12), b);
}

TEST(FindRoot, NoSignChange) {
  EXPECT_THROW(find_root_bracketed([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-12),
               BracketError);
}

TEST(FindRoot, NegativeToleranceRejected) {
  EXPECT_THROW(find_root_bracketed([](double x) { return x; }, -1.0, 1.0, -1.0), ArgumentError);
}

TEST(FindRoot, BracketWidthProperty) {
  Sampler s(11);
  for (int trial = 0; trial < 200; ++trial) {
    const double root = s.uniform(-0.9, 0.9);
    const double shift = s.uniform(0.0, 2.0);
    auto g = [&](double x) { return std::sinh(x - root) + shift * (x - root) * (x - root) * (x - root); };
    const double tol = 1e-10;
    const double x = find_root_bracketed(g, -1.0, 1.0, tol);
    // The root stays within tol of the returned point.
    EXPECT_LE(g(x - tol) * g(x + tol), 0.0);
    EXPECT_NEAR(x, root, tol);
  }
}

TEST(FitSlope, Examples) {
  const std::vector<std::pair<double, double>> line{{0, 0}, {1, 2}, {2, 4}};
  const std::vector<std::pair<double, double>> flat{{0, 5}, {1, 5}};
  const std::vector<std::pair<double, double>> bent{{0, 0}, {1, 1}, {2, 1}};
  EXPECT_NEAR(fit_slope(line), 2.0, 1e-15);
  EXPECT_NEAR(fit_slope(flat), 0.0, 1e-15);
  EXPECT_NEAR(fit_slope(bent), 0.5, 1e-15);
}

TEST(FitSlope, DegenerateAbscissae) {
  const std::vector<std::pair<double, double>> same{{1, 0}, {1, 3}, {1, 4}};
  EXPECT_THROW(fit_slope(same), DegenerateFitError);
}

TEST(FitSlope, InvariantUnderVerticalShift) {
  Sampler s(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < 6; ++i) pts.emplace_back(s.uniform(0, 10), s.uniform(-5, 5));
    auto shifted = pts;
    const double c = s.uniform(-100, 100);
    for (auto& p : shifted) p.second += c;
    EXPECT_NEAR(fit_slope(pts), fit_slope(shifted), 1e-12);
  }
}

TEST(IntegrateAdaptive, SmoothAndPeaked) {
  EXPECT_NEAR(integrate_adaptive([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-12),
              std::exp(1.0) - 1.0, 1e-13);
  // int_0^1 1 / (1e-4 + x^2) = atan(100) / 1e-2
  const double peaked =
      integrate_adaptive([](double x) { return 1.0 / (1e-4 + x * x); }, 0.0, 1.0, 1e-10);
  EXPECT_NEAR(peaked, std::atan(100.0) * 100.0, 1e-7);
  EXPECT_EQ(integrate_adaptive([](double) { return 1.0; }, 2.0, 2.0, 1e-8), 0.0);
}

TEST(GoldenSection, FindsMinimum) {
  const double x = golden_section_min([](double t) { return (t - 0.3) * (t - 0.3) + 1.0; }, -1.0, 2.0);
  EXPECT_NEAR(x, 0.3, 1e-7);
}

TEST(ParallelMap, DeterministicOrder) {
  const auto v = parallel_map(1000, [](std::size_t i) { return static_cast<double>(i * i); });
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], static_cast<double>(i * i));
}

TEST(ToleranceConfig, Validation) {
  ToleranceConfig c;
  EXPECT_NO_THROW(c.validate());
  EXPECT_NO_THROW(ToleranceConfig::coarse().validate());
  c.root_tol = 0.0;
  EXPECT_THROW(c.validate(), ArgumentError);
  c = ToleranceConfig{};
  c.integral_rel_tol = -1.0;
  EXPECT_THROW(c.validate(), ArgumentError);
  c = ToleranceConfig{};
  c.quad_points_circle = 4;
  EXPECT_THROW(c.validate(), ArgumentError);
}

TEST(Direction, NormalizesAndRejectsZero) {
  const Direction d(vec2(3.0, 4.0));
  EXPECT_NEAR(d.vec().norm(), 1.0, 1e-15);
  EXPECT_NEAR(d[0], 0.6, 1e-15);
  EXPECT_THROW(Direction(vec2(0.0, 0.0)), ArgumentError);
  EXPECT_NEAR((-d)[1], -0.8, 1e-15);
}

TEST(TangentBasis, Orthonormal) {
  Sampler s(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec u = s.direction(3);
    Vec e1;
    Vec e2;
    tangent_basis(u, e1, e2);
    EXPECT_NEAR(e1.norm(), 1.0, 1e-14);
    EXPECT_NEAR(e2.norm(), 1.0, 1e-14);
    EXPECT_NEAR(e1.dot(u), 0.0, 1e-14);
    EXPECT_NEAR(e2.dot(u), 0.0, 1e-14);
    EXPECT_NEAR(e1.dot(e2), 0.0, 1e-14);
  }
}
