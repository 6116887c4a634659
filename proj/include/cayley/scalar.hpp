#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <ostream>
#include <string>

namespace cayley {

// a + b*sqrt(2), exact.
class Q2 {
 public:
  Q2() = default;
  Q2(long v) : a_(v) {}
  Q2(mpq_class a, mpq_class b = 0) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  int sign() const;
  double to_double() const;

  Q2 operator-() const { return Q2(-a_, -b_); }
  Q2& operator+=(const Q2& o);
  Q2& operator-=(const Q2& o);
  Q2& operator*=(const Q2& o);
  Q2& operator/=(const Q2& o);

  Q2 inverse() const;
  // x with x*x == *this, if one exists in the field
  std::optional<Q2> sqrt() const;

  friend bool operator==(const Q2& x, const Q2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator<(const Q2& x, const Q2& y) { return (x - y).sign() < 0; }
  friend Q2 operator+(Q2 x, const Q2& y) { return x += y; }
  friend Q2 operator-(Q2 x, const Q2& y) { return x -= y; }
  friend Q2 operator*(Q2 x, const Q2& y) { return x *= y; }
  friend Q2 operator/(Q2 x, const Q2& y) { return x /= y; }

 private:
  mpq_class a_, b_;
};

// element of Q(sqrt2)(i): re + i*im
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}
  Scalar(Q2 re, Q2 im = Q2()) : re_(std::move(re)), im_(std::move(im)) {}
  Scalar(mpq_class a, mpq_class b, mpq_class c, mpq_class d)
      : re_(std::move(a), std::move(b)), im_(std::move(c), std::move(d)) {}

  static Scalar i() { return Scalar(Q2(), Q2(1)); }
  static Scalar sqrt2() { return Scalar(Q2(0, 1)); }
  static Scalar frac(long p, long q) { return Scalar(Q2(mpq_class(p, q))); }

  const Q2& re() const { return re_; }
  const Q2& im() const { return im_; }
  const mpq_class& a() const { return re_.a(); }
  const mpq_class& b() const { return re_.b(); }
  const mpq_class& c() const { return im_.a(); }
  const mpq_class& d() const { return im_.b(); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  Scalar conj() const { return Scalar(re_, -im_); }
  Q2 norm2() const { return re_ * re_ + im_ * im_; }
  Scalar inverse() const;
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend bool operator==(const Scalar& x, const Scalar& y) { return x.re_ == y.re_ && x.im_ == y.im_; }
  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

 private:
  Q2 re_, im_;
};

std::string to_string(const Q2& x);
std::string to_string(const Scalar& x);
std::ostream& operator<<(std::ostream& os, const Q2& x);
std::ostream& operator<<(std::ostream& os, const Scalar& x);

// exact rational n-th root if it exists
std::optional<mpq_class> rational_root(const mpq_class& q, unsigned n);

}  // namespace cayley
