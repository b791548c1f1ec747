#include "support.hpp"

#include <gtest/gtest.h>

using namespace hilbert;
using namespace hilbert::testing;

namespace {

MetricQuery query(ConvexBody body) { return MetricQuery{std::move(body)}; }

Vec at_angle(double th) { return vec2(std::cos(th), std::sin(th)); }

// Leading coefficient omega^2 / omega(-u) + omega as a function of the angle.
double leading(const ConvexBody& body, double th) {
  const double a = body.radial(at_angle(th));
  const double b = body.radial(at_angle(th + kPi));
  return a * a / b + a;
}

}  // namespace

TEST(SphereRadial, Examples) {
  const auto disk = unit_disk();
  for (double t : {0.1, 1.0, 3.0, 8.0}) {
    EXPECT_NEAR(sphere_radial(disk, vec2(0.6, 0.8), t), std::tanh(t), 1e-15);
  }
  EXPECT_EQ(sphere_radial(ellipse21(), vec2(1, 0), 0.0), 0.0);
  // omega(u) = 2, omega(-u) = 1 along +x for the ball of radius 1.5 centred at (0.5, 0).
  const auto body = make_offset_ball(1.5, vec2(0.5, 0.0));
  EXPECT_NEAR(sphere_radial(body, vec2(1, 0), std::log(2.0)), 1.0, 1e-14);
  EXPECT_THROW(sphere_radial(disk, vec2(1, 0), -0.1), ArgumentError);
}

TEST(SphereRadial, GapIsConsistent) {
  Sampler s(41);
  for (const auto& body : planar_bodies()) {
    for (int i = 0; i < 20; ++i) {
      const Vec u = s.direction(2);
      const double t = s.uniform(0.0, 4.0);
      EXPECT_NEAR(sphere_gap(body, u, t), body.radial(u) - sphere_radial(body, u, t), 1e-14);
    }
  }
}

TEST(SphereRadial, OnTheMetricSphere) {
  Sampler s(42);
  for (const auto& body : planar_bodies()) {
    const auto q = query(body);
    for (int i = 0; i < 20; ++i) {
      const Vec u = s.direction(2);
      const double t = s.uniform(0.1, 6.0);
      EXPECT_NEAR(hilbert_distance(q, zero_vec(2), sphere_radial(body, u, t) * u), t, 1e-9);
    }
  }
}

TEST(GapCoefficients, UnitDisk) {
  const auto c = lemma1_coeffs(unit_disk(), vec2(1, 0));
  EXPECT_NEAR(c.delta, 2.0, 1e-15);
  EXPECT_NEAR(*c.delta1, 0.0, 1e-15);
  EXPECT_NEAR(*c.delta2, 0.0, 1e-15);
  EXPECT_NEAR(*c.delta2_as_printed, 0.0, 1e-15);
}

TEST(GapCoefficients, OffsetDiskOnAxis) {
  EXPECT_NEAR(lemma1_coeffs(offset_disk(), vec2(1, 0)).delta, 1.3 * (1.3 / 0.7 + 1.0), 1e-12);
  EXPECT_NEAR(lemma1_coeffs(offset_disk(), vec2(1, 0)).delta, 3.714286, 1e-6);
}

TEST(GapCoefficients, DeltaIsTheGapLimit) {
  Sampler s(43);
  for (const auto& body : planar_bodies()) {
    for (int i = 0; i < 10; ++i) {
      const Vec u = s.direction(2);
      const double delta = lemma1_coeffs(body, u).delta;
      const double scaled = std::exp(16.0) * sphere_gap(body, u, 8.0);
      EXPECT_NEAR(scaled, delta, 1e-5 * delta);
    }
  }
}

TEST(GapCoefficients, AngularDerivativesMatchFiniteDifferences) {
  Sampler s(44);
  const double h = 1e-3;
  for (const auto& body : planar_bodies()) {
    for (int i = 0; i < 10; ++i) {
      const double th = s.uniform(0.0, 2.0 * kPi);
      const auto c = lemma1_coeffs(body, at_angle(th));
      const double g[5] = {leading(body, th - 2 * h), leading(body, th - h), leading(body, th),
                           leading(body, th + h), leading(body, th + 2 * h)};
      const double d1 = (g[0] - 8 * g[1] + 8 * g[3] - g[4]) / (12 * h);
      const double d2 = (-g[0] + 16 * g[1] - 30 * g[2] + 16 * g[3] - g[4]) / (12 * h * h);
      EXPECT_NEAR(c.delta, g[2], 1e-14 * g[2]);
      EXPECT_NEAR(*c.delta1, d1, 1e-8);
      EXPECT_NEAR(*c.delta2, d2, 1e-6);
    }
  }
}

TEST(GapCoefficients, PrintedSecondDerivativeDiffersByOneTerm) {
  // delta2 w(-u)^3 = printed w(u)^3 + 2 w w(-u)^2 w''.
  Sampler s(45);
  for (const auto& body : {offset_disk(), perturbed(), ellipse21()}) {
    for (int i = 0; i < 10; ++i) {
      const double th = s.uniform(0.0, 2.0 * kPi);
      const auto c = lemma1_coeffs(body, at_angle(th));
      const Jet w = body.radial_jet(at_angle(th));
      const double a = w.v;
      const double b = body.radial(at_angle(th + kPi));
      const double lhs = *c.delta2 * b * b * b;
      const double rhs = *c.delta2_as_printed * a * a * a + 2.0 * a * b * b * w.h[0];
      EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, std::abs(lhs)));
    }
  }
}

TEST(GapCoefficients, SpatialBodiesHaveNoDerivativeCoefficients) {
  const auto c = lemma1_coeffs(ellipsoid(), vec3(0, 0, 1));
  EXPECT_NEAR(c.delta, 0.8 * 2.0, 1e-14);
  EXPECT_FALSE(c.delta1.has_value());
  EXPECT_FALSE(c.delta2.has_value());
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi(ellipse21(), vec2(1, 0), 0.0).norm(), 0.0);
  EXPECT_EQ(phi_jacobian(ellipse21(), vec2(1, 0), 0.0), 0.0);
  const Vec x = phi(unit_disk(), vec2(0.6, 0.8), 1.0);
  EXPECT_NEAR(x.norm(), 0.761594, 1e-6);
  const double th = std::tanh(1.0);
  EXPECT_NEAR(phi_jacobian(unit_disk(), vec2(0.6, 0.8), 1.0), th * (1 - th * th), 1e-15);
  EXPECT_NEAR(phi_jacobian(unit_disk(), vec2(0.6, 0.8), 1.0), 0.319850, 1e-6);
}

TEST(Phi, PolarLimitReachesTheSphere) {
  Sampler s(46);
  for (const auto& body : planar_bodies()) {
    for (int i = 0; i < 20; ++i) {
      const Vec u = s.direction(2);
      const double t = s.uniform(0.5, 8.0);
      const double smax = sphere_polar_limit(body, u, t);
      const double r = phi(body, u, smax).norm();
      EXPECT_NEAR(r, sphere_radial(body, u, t), 1e-13);
    }
  }
}

TEST(BallVolume, HyperbolicDisk) {
  const auto q = query(unit_disk());
  // 2 pi (cosh t - 1): 3.412276 at t = 1, 56.97380 at t = 3.
  EXPECT_NEAR(ball_volume_polar(q, 1.0), 3.412276, 1e-6);
  EXPECT_NEAR(ball_volume_polar(q, 1.0), 2 * kPi * (std::cosh(1.0) - 1), 1e-9);
  EXPECT_NEAR(ball_volume_direct(q, 1.0), 3.412276, 1e-6);
  EXPECT_NEAR(ball_volume_direct(q, 3.0), 2 * kPi * (std::cosh(3.0) - 1), 1e-6 * 56.9738);
  EXPECT_EQ(ball_volume_polar(q, 0.0), 0.0);
  EXPECT_THROW(ball_volume_polar(q, 8.5), ArgumentError);
  EXPECT_THROW(ball_volume_polar(q, -1.0), ArgumentError);
}

TEST(BallVolume, PolarAgreesWithDirect) {
  for (const auto& body : {ellipse21(), offset_disk()}) {
    const auto q = query(body);
    const double polar = ball_volume_polar(q, 2.0);
    EXPECT_NEAR(ball_volume_direct(q, 2.0), polar, 1e-3 * polar) << body.family_name();
  }
}

TEST(BallVolume, HyperbolicSpace) {
  const auto q = query(unit_ball3());
  const auto hv = hyperbolic_oracle(1.0, 2);
  EXPECT_NEAR(ball_volume_polar(q, 1.0), hv.ball_volume, 1e-6 * hv.ball_volume);
  EXPECT_THROW(ball_volume_direct(q, 1.0), ArgumentError);
}

TEST(SphereArea, HyperbolicDisk) {
  const auto q = query(unit_disk());
  EXPECT_NEAR(sphere_area(q, 1.0), 7.384007, 1e-6);
  EXPECT_NEAR(sphere_area(q, 3.0), 2 * kPi * std::sinh(3.0), 1e-9 * 62.9443);
  EXPECT_EQ(sphere_area(q, 0.0), 0.0);
}

TEST(SphereArea, HyperbolicSpace) {
  const auto q = query(unit_ball3());
  EXPECT_NEAR(sphere_area(q, 1.0), 17.35539, 1e-5);
  EXPECT_NEAR(sphere_area(q, 2.0), hyperbolic_oracle(2.0, 2).sphere_area, 1e-8 * 165.0);
}

TEST(SphereArea, ChordEstimator) {
  const double exact = 2 * kPi * std::sinh(1.0);
  const double chords = sphere_area_chords(query(unit_disk()), 1.0, 4096);
  EXPECT_NEAR(chords, exact, 1e-3 * exact);
  EXPECT_LE(chords, exact);
  const auto q = query(ellipse21());
  const double area = sphere_area(q, 2.0);
  EXPECT_NEAR(sphere_area_chords(q, 2.0, 8192), area, 5e-3 * area);
  EXPECT_THROW(sphere_area_chords(q, 2.0, 16), ArgumentError);
}

TEST(SphereArea, ChordSumsGrowUnderRefinement) {
  for (const auto& body : planar_bodies()) {
    const auto q = query(body);
    double previous = 0.0;
    for (int n = 64; n <= 4096; n *= 2) {
      const double value = sphere_area_chords(q, 3.0, n);
      EXPECT_GE(value, previous * (1.0 - 1e-12)) << body.family_name() << " " << n;
      previous = value;
    }
  }
}

TEST(SphereVertices, PolygonIsConvex) {
  for (const auto& body : planar_bodies()) {
    for (double t : {0.5, 2.0, 6.0}) {
      const auto v = sphere_vertices(body, t, 720);
      const std::size_t n = v.size();
      ASSERT_EQ(n, 720u);
      for (std::size_t i = 0; i < n; ++i) {
        const Vec e1 = v[(i + 1) % n] - v[i];
        const Vec e2 = v[(i + 2) % n] - v[(i + 1) % n];
        EXPECT_GT(e1[0] * e2[1] - e1[1] * e2[0], 0.0) << body.family_name() << " t=" << t;
      }
    }
  }
}

TEST(BoundaryGapBounds, Examples) {
  const auto disk = unit_disk();
  const auto gb = boundary_gap_bounds(disk, summarize(disk), vec2(1, 0), 3.0);
  EXPECT_NEAR(gb.actual, 1.0 - std::tanh(3.0), 1e-15);
  EXPECT_NEAR(gb.upper, 2.0 * std::exp(-6.0), 1e-15);
  EXPECT_TRUE(gb.holds);
  const auto off = offset_disk();
  EXPECT_TRUE(boundary_gap_bounds(off, summarize(off), vec2(1, 0), 4.0).holds);
  EXPECT_TRUE(boundary_gap_bounds(off, summarize(off), vec2(-1, 0), 4.0).holds);
  const auto ell = ellipse21();
  EXPECT_TRUE(boundary_gap_bounds(ell, summarize(ell), vec2(1, 0), 5.0).holds);
  EXPECT_THROW(boundary_gap_bounds(ell, summarize(ell), vec2(1, 0), 0.5), ArgumentError);
}

TEST(BoundaryGapBounds, HoldOnRandomDirections) {
  Sampler s(47);
  for (const auto& body : planar_bodies()) {
    const auto summary = summarize(body);
    for (int i = 0; i < 20; ++i) {
      const auto gb = boundary_gap_bounds(body, summary, s.direction(2), s.uniform(2.0, 7.0));
      EXPECT_TRUE(gb.holds) << body.family_name() << " " << gb.lower << " " << gb.actual << " "
                            << gb.upper;
    }
  }
}
