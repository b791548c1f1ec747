#pragma once

#include <array>
#include <cmath>

namespace hilbert {

/// Second-order forward-mode jet in up to two variables. `d` holds the
/// gradient and `h` the Hessian as (h00, h01, h11).
struct Jet {
  double v = 0.0;
  std::array<double, 2> d{};
  std::array<double, 3> h{};

  Jet() = default;
  Jet(double value) : v(value) {}  // NOLINT: constants promote implicitly

  static Jet variable(double value, int index) {
    Jet j(value);
    j.d[index] = 1.0;
    return j;
  }

  double hess(int i, int k) const { return h[i + k]; }
};

namespace jet_detail {

// Compose a scalar function with value f0, first derivative f1 and second f2.
inline Jet chain(const Jet& a, double f0, double f1, double f2) {
  Jet r(f0);
  for (int i = 0; i < 2; ++i) r.d[i] = f1 * a.d[i];
  r.h[0] = f1 * a.h[0] + f2 * a.d[0] * a.d[0];
  r.h[1] = f1 * a.h[1] + f2 * a.d[0] * a.d[1];
  r.h[2] = f1 * a.h[2] + f2 * a.d[1] * a.d[1];
  return r;
}

}  // namespace jet_detail

inline Jet operator+(const Jet& a, const Jet& b) {
  Jet r(a.v + b.v);
  for (int i = 0; i < 2; ++i) r.d[i] = a.d[i] + b.d[i];
  for (int i = 0; i < 3; ++i) r.h[i] = a.h[i] + b.h[i];
  return r;
}

inline Jet operator-(const Jet& a) {
  Jet r(-a.v);
  for (int i = 0; i < 2; ++i) r.d[i] = -a.d[i];
  for (int i = 0; i < 3; ++i) r.h[i] = -a.h[i];
  return r;
}

inline Jet operator-(const Jet& a, const Jet& b) { return a + (-b); }

inline Jet operator*(const Jet& a, const Jet& b) {
  Jet r(a.v * b.v);
  for (int i = 0; i < 2; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
  r.h[0] = a.h[0] * b.v + 2.0 * a.d[0] * b.d[0] + a.v * b.h[0];
  r.h[1] = a.h[1] * b.v + a.d[0] * b.d[1] + a.d[1] * b.d[0] + a.v * b.h[1];
  r.h[2] = a.h[2] * b.v + 2.0 * a.d[1] * b.d[1] + a.v * b.h[2];
  return r;
}

inline Jet reciprocal(const Jet& a) {
  const double inv = 1.0 / a.v;
  return jet_detail::chain(a, inv, -inv * inv, 2.0 * inv * inv * inv);
}

inline Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

inline Jet& operator+=(Jet& a, const Jet& b) { return a = a + b; }
inline Jet& operator-=(Jet& a, const Jet& b) { return a = a - b; }
inline Jet& operator*=(Jet& a, const Jet& b) { return a = a * b; }

inline Jet sqrt(const Jet& a) {
  const double s = std::sqrt(a.v);
  return jet_detail::chain(a, s, 0.5 / s, -0.25 / (s * a.v));
}

inline Jet sin(const Jet& a) {
  const double s = std::sin(a.v);
  const double c = std::cos(a.v);
  return jet_detail::chain(a, s, c, -s);
}

inline Jet cos(const Jet& a) {
  const double s = std::sin(a.v);
  const double c = std::cos(a.v);
  return jet_detail::chain(a, c, -s, -c);
}

inline Jet exp(const Jet& a) {
  const double e = std::exp(a.v);
  return jet_detail::chain(a, e, e, e);
}

inline Jet atan(const Jet& a) {
  const double q = 1.0 / (1.0 + a.v * a.v);
  return jet_detail::chain(a, std::atan(a.v), q, -2.0 * a.v * q * q);
}

// The value comes from std::atan2; derivatives from whichever of atan(y/x)
// or -atan(x/y) is well conditioned (they differ by a constant locally).
inline Jet atan2(const Jet& y, const Jet& x) {
  Jet r = std::abs(x.v) >= std::abs(y.v) ? atan(y / x) : -atan(x / y);
  r.v = std::atan2(y.v, x.v);
  return r;
}

inline double value_of(double x) { return x; }
inline double value_of(const Jet& x) { return x.v; }

}  // namespace hilbert
