#pragma once

// Truncated Taylor arithmetic used as the differentiation currency.
//
// Taylor3 carries a scalar function of one variable together with its first
// three derivatives at a point. BiJet carries a scalar function of two
// variables (u, v) with all partials up to order two. Both are plain values;
// elementary functions are implemented once on Taylor3 and lifted to BiJet
// through the chain rule.

#include <array>
#include <cmath>
#include <cstddef>

#include "iso3/error.hpp"

namespace iso3 {

class Taylor3 {
 public:
  constexpr Taylor3() = default;
  constexpr Taylor3(double c) : d_{c, 0.0, 0.0, 0.0} {}  // NOLINT: constants promote
  constexpr Taylor3(double d0, double d1, double d2, double d3) : d_{d0, d1, d2, d3} {}

  // Seeds t as the independent variable.
  static constexpr Taylor3 variable(double t) { return {t, 1.0, 0.0, 0.0}; }

  // k-th derivative, k in [0, 3].
  constexpr double operator[](std::size_t k) const { return d_[k]; }
  constexpr double value() const { return d_[0]; }

  bool finite() const {
    return std::isfinite(d_[0]) && std::isfinite(d_[1]) && std::isfinite(d_[2]) &&
           std::isfinite(d_[3]);
  }
  bool is_constant() const { return d_[1] == 0.0 && d_[2] == 0.0 && d_[3] == 0.0; }

  Taylor3& operator+=(const Taylor3& o) {
    for (std::size_t k = 0; k < 4; ++k) d_[k] += o.d_[k];
    return *this;
  }
  Taylor3& operator-=(const Taylor3& o) {
    for (std::size_t k = 0; k < 4; ++k) d_[k] -= o.d_[k];
    return *this;
  }
  Taylor3& operator*=(double s) {
    for (auto& x : d_) x *= s;
    return *this;
  }

 private:
  std::array<double, 4> d_{};
};

inline Taylor3 operator-(const Taylor3& a) { return {-a[0], -a[1], -a[2], -a[3]}; }
inline Taylor3 operator+(Taylor3 a, const Taylor3& b) { return a += b; }
inline Taylor3 operator-(Taylor3 a, const Taylor3& b) { return a -= b; }
inline Taylor3 operator*(Taylor3 a, double s) { return a *= s; }
inline Taylor3 operator*(double s, Taylor3 a) { return a *= s; }

// Leibniz rule.
inline Taylor3 operator*(const Taylor3& a, const Taylor3& b) {
  return {a[0] * b[0], a[1] * b[0] + a[0] * b[1],
          a[2] * b[0] + 2.0 * a[1] * b[1] + a[0] * b[2],
          a[3] * b[0] + 3.0 * a[2] * b[1] + 3.0 * a[1] * b[2] + a[0] * b[3]};
}

// Faa di Bruno to third order: derivatives of phi(inner) given
// phi, phi', phi'', phi''' evaluated at inner.value().
inline Taylor3 chain(const Taylor3& inner, double p0, double p1, double p2, double p3) {
  const double a1 = inner[1], a2 = inner[2], a3 = inner[3];
  return {p0, p1 * a1, p2 * a1 * a1 + p1 * a2,
          p3 * a1 * a1 * a1 + 3.0 * p2 * a1 * a2 + p1 * a3};
}

inline Taylor3 reciprocal(const Taylor3& a) {
  const double x = a[0];
  if (x == 0.0) throw DomainError("division by zero");
  const double r = 1.0 / x;
  return chain(a, r, -r * r, 2.0 * r * r * r, -6.0 * r * r * r * r);
}

inline Taylor3 operator/(const Taylor3& a, const Taylor3& b) { return a * reciprocal(b); }
inline Taylor3 operator/(Taylor3 a, double s) { return a *= 1.0 / s; }
inline Taylor3 operator/(double s, const Taylor3& b) { return s * reciprocal(b); }
inline Taylor3 operator+(const Taylor3& a, double s) { return a + Taylor3(s); }
inline Taylor3 operator+(double s, const Taylor3& a) { return Taylor3(s) + a; }
inline Taylor3 operator-(const Taylor3& a, double s) { return a - Taylor3(s); }
inline Taylor3 operator-(double s, const Taylor3& a) { return Taylor3(s) - a; }

inline Taylor3 sin(const Taylor3& a) {
  const double s = std::sin(a[0]), c = std::cos(a[0]);
  return chain(a, s, c, -s, -c);
}

inline Taylor3 cos(const Taylor3& a) {
  const double s = std::sin(a[0]), c = std::cos(a[0]);
  return chain(a, c, -s, -c, s);
}

inline Taylor3 tan(const Taylor3& a) {
  const double c = std::cos(a[0]);
  if (c == 0.0) throw DomainError("tan: argument at a pole");
  const double t = std::tan(a[0]);
  const double sec2 = 1.0 + t * t;
  return chain(a, t, sec2, 2.0 * t * sec2, 2.0 * sec2 * (1.0 + 3.0 * t * t));
}

inline Taylor3 exp(const Taylor3& a) {
  const double e = std::exp(a[0]);
  return chain(a, e, e, e, e);
}

inline Taylor3 log(const Taylor3& a) {
  const double x = a[0];
  if (!(x > 0.0)) throw DomainError("log: non-positive argument");
  const double r = 1.0 / x;
  return chain(a, std::log(x), r, -r * r, 2.0 * r * r * r);
}

inline Taylor3 abs(const Taylor3& a) {
  if (a[0] == 0.0) throw DomainError("abs: not differentiable at 0");
  return a[0] > 0.0 ? a : -a;
}

inline Taylor3 sqrt(const Taylor3& a) {
  const double x = a[0];
  if (!(x > 0.0)) throw DomainError("sqrt: non-positive argument");
  const double s = std::sqrt(x);
  const double r = 1.0 / x;
  return chain(a, s, 0.5 / s, -0.25 * r / s, 0.375 * r * r / s);
}

inline Taylor3 atan(const Taylor3& a) {
  const double x = a[0];
  const double q = 1.0 / (1.0 + x * x);
  return chain(a, std::atan(x), q, -2.0 * x * q * q, (6.0 * x * x - 2.0) * q * q * q);
}

// Integer powers by repeated multiplication; defined at 0 for n >= 0.
inline Taylor3 pow(const Taylor3& a, int n) {
  if (n < 0) return reciprocal(pow(a, -n));
  Taylor3 result(1.0);
  Taylor3 base = a;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

// Real powers; requires a positive base unless p is an integer.
inline Taylor3 pow(const Taylor3& a, double p) {
  if (p == std::floor(p) && std::abs(p) < 64.0) return pow(a, static_cast<int>(p));
  const double x = a[0];
  if (!(x > 0.0)) throw DomainError("pow: non-positive base with fractional exponent");
  const double v = std::pow(x, p);
  const double r = 1.0 / x;
  return chain(a, v, p * v * r, p * (p - 1.0) * v * r * r,
               p * (p - 1.0) * (p - 2.0) * v * r * r * r);
}

inline Taylor3 pow(const Taylor3& a, const Taylor3& b) {
  if (b.is_constant()) return pow(a, b[0]);
  return exp(b * log(a));
}

// Second-order jet of a scalar field of (u, v).
struct BiJet {
  double val = 0.0;
  double du = 0.0;
  double dv = 0.0;
  double duu = 0.0;
  double duv = 0.0;
  double dvv = 0.0;

  constexpr BiJet() = default;
  constexpr BiJet(double c) : val(c) {}  // NOLINT: constants promote
  constexpr BiJet(double v0, double u1, double v1, double uu, double uv, double vv)
      : val(v0), du(u1), dv(v1), duu(uu), duv(uv), dvv(vv) {}

  static constexpr BiJet u_variable(double u) { return {u, 1.0, 0.0, 0.0, 0.0, 0.0}; }
  static constexpr BiJet v_variable(double v) { return {v, 0.0, 1.0, 0.0, 0.0, 0.0}; }

  bool finite() const {
    return std::isfinite(val) && std::isfinite(du) && std::isfinite(dv) &&
           std::isfinite(duu) && std::isfinite(duv) && std::isfinite(dvv);
  }
};

inline BiJet operator-(const BiJet& a) { return {-a.val, -a.du, -a.dv, -a.duu, -a.duv, -a.dvv}; }
inline BiJet operator+(const BiJet& a, const BiJet& b) {
  return {a.val + b.val, a.du + b.du, a.dv + b.dv, a.duu + b.duu, a.duv + b.duv, a.dvv + b.dvv};
}
inline BiJet operator-(const BiJet& a, const BiJet& b) {
  return {a.val - b.val, a.du - b.du, a.dv - b.dv, a.duu - b.duu, a.duv - b.duv, a.dvv - b.dvv};
}
inline BiJet operator*(double s, const BiJet& a) {
  return {s * a.val, s * a.du, s * a.dv, s * a.duu, s * a.duv, s * a.dvv};
}
inline BiJet operator*(const BiJet& a, double s) { return s * a; }
inline BiJet operator*(const BiJet& a, const BiJet& b) {
  return {a.val * b.val,
          a.du * b.val + a.val * b.du,
          a.dv * b.val + a.val * b.dv,
          a.duu * b.val + 2.0 * a.du * b.du + a.val * b.duu,
          a.duv * b.val + a.du * b.dv + a.dv * b.du + a.val * b.duv,
          a.dvv * b.val + 2.0 * a.dv * b.dv + a.val * b.dvv};
}
inline BiJet operator+(const BiJet& a, double s) { return a + BiJet(s); }
inline BiJet operator+(double s, const BiJet& a) { return BiJet(s) + a; }
inline BiJet operator-(const BiJet& a, double s) { return a - BiJet(s); }
inline BiJet operator-(double s, const BiJet& a) { return BiJet(s) - a; }

// phi(s) where phi's derivatives at s.val are given by the Taylor3 `phi`.
inline BiJet chain(const BiJet& s, const Taylor3& phi) {
  const double p1 = phi[1], p2 = phi[2];
  return {phi[0],
          p1 * s.du,
          p1 * s.dv,
          p2 * s.du * s.du + p1 * s.duu,
          p2 * s.du * s.dv + p1 * s.duv,
          p2 * s.dv * s.dv + p1 * s.dvv};
}

template <class F>
BiJet lift(F&& f, const BiJet& s) {
  return chain(s, f(Taylor3::variable(s.val)));
}

inline BiJet operator/(const BiJet& a, const BiJet& b) {
  return a * lift([](const Taylor3& t) { return reciprocal(t); }, b);
}
inline BiJet operator/(const BiJet& a, double s) { return a * (1.0 / s); }

inline BiJet sin(const BiJet& a) { return lift([](const Taylor3& t) { return sin(t); }, a); }
inline BiJet cos(const BiJet& a) { return lift([](const Taylor3& t) { return cos(t); }, a); }
inline BiJet exp(const BiJet& a) { return lift([](const Taylor3& t) { return exp(t); }, a); }
inline BiJet log(const BiJet& a) { return lift([](const Taylor3& t) { return log(t); }, a); }
inline BiJet sqrt(const BiJet& a) { return lift([](const Taylor3& t) { return sqrt(t); }, a); }

}  // namespace iso3
