#pragma once

#include <cmath>

namespace firefront {

/// Second-order forward-mode number in two variables: value, gradient and
/// (symmetric) Hessian. Enough arithmetic to push a Finsler norm through.
struct Jet2 {
  double v = 0.0;
  double d1 = 0.0, d2 = 0.0;
  double h11 = 0.0, h12 = 0.0, h22 = 0.0;

  static Jet2 constant(double c) { return {c}; }
  static Jet2 variable(double value, int index) {
    Jet2 j{value};
    (index == 0 ? j.d1 : j.d2) = 1.0;
    return j;
  }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
  return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2, a.h11 + b.h11, a.h12 + b.h12, a.h22 + b.h22};
}
inline Jet2 operator-(const Jet2& a, const Jet2& b) {
  return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2, a.h11 - b.h11, a.h12 - b.h12, a.h22 - b.h22};
}
inline Jet2 operator*(double s, const Jet2& a) {
  return {s * a.v, s * a.d1, s * a.d2, s * a.h11, s * a.h12, s * a.h22};
}
inline Jet2 operator*(const Jet2& a, double s) { return s * a; }
inline Jet2 operator+(const Jet2& a, double s) {
  Jet2 r = a;
  r.v += s;
  return r;
}
inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.v * b.v,
          a.d1 * b.v + a.v * b.d1,
          a.d2 * b.v + a.v * b.d2,
          a.h11 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.h11,
          a.h12 * b.v + a.d1 * b.d2 + a.d2 * b.d1 + a.v * b.h12,
          a.h22 * b.v + 2.0 * a.d2 * b.d2 + a.v * b.h22};
}

/// f(a) for scalar f with f' = f1, f'' = f2 at a.v (chain rule).
inline Jet2 apply(const Jet2& a, double f0, double f1, double f2) {
  return {f0,
          f1 * a.d1,
          f1 * a.d2,
          f1 * a.h11 + f2 * a.d1 * a.d1,
          f1 * a.h12 + f2 * a.d1 * a.d2,
          f1 * a.h22 + f2 * a.d2 * a.d2};
}

inline Jet2 reciprocal(const Jet2& a) {
  const double r = 1.0 / a.v;
  return apply(a, r, -r * r, 2.0 * r * r * r);
}
inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }

inline Jet2 sqrt(const Jet2& a) {
  const double s = std::sqrt(a.v);
  return apply(a, s, 0.5 / s, -0.25 / (s * a.v));
}

inline double value_of(double x) { return x; }
inline double value_of(const Jet2& x) { return x.v; }

}  // namespace firefront
