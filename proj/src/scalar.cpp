#include "cayley/scalar.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cayley {

int Q2::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with 2 b^2
  mpq_class lhs = a_ * a_, rhs = 2 * b_ * b_;
  int c = cmp(lhs, rhs);
  if (c == 0) return 0;  // unreachable, sqrt2 is irrational
  return c > 0 ? sa : sb;
}

double Q2::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }

Q2& Q2::operator+=(const Q2& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Q2& Q2::operator-=(const Q2& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Q2& Q2::operator*=(const Q2& o) {
  if (is_zero() || o.is_zero()) {
    a_ = 0;
    b_ = 0;
    return *this;
  }
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  mpq_class na = a_ * o.a_ + 2 * b_ * o.b_;
  mpq_class nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

Q2& Q2::operator/=(const Q2& o) { return *this *= o.inverse(); }

Q2 Q2::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (sgn(b_) == 0) return Q2(1 / a_);
  mpq_class n = a_ * a_ - 2 * b_ * b_;
  return Q2(a_ / n, -b_ / n);
}

std::optional<mpq_class> rational_root(const mpq_class& q, unsigned n) {
  if (sgn(q) == 0) return mpq_class(0);
  if (sgn(q) < 0 && n % 2 == 0) return std::nullopt;
  mpz_class num = abs(q.get_num()), den = q.get_den();
  mpz_class rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n)) return std::nullopt;
  mpq_class r(rn, rd);
  r.canonicalize();
  if (sgn(q) < 0) r = -r;
  return r;
}

std::optional<Q2> Q2::sqrt() const {
  if (is_zero()) return Q2();
  if (sign() < 0) return std::nullopt;
  if (sgn(b_) == 0) {
    if (auto r = rational_root(a_, 2)) return Q2(*r);
    if (auto r = rational_root(a_ / 2, 2)) return Q2(0, *r);
    return std::nullopt;
  }
  // (x + y sqrt2)^2 = a + b sqrt2  =>  x^2 + 2y^2 = a, 2xy = b
  mpq_class disc = a_ * a_ - 2 * b_ * b_;
  auto s = rational_root(disc, 2);
  if (!s) return std::nullopt;
  for (int sg : {1, -1}) {
    mpq_class x2 = (a_ + sg * *s) / 2;
    if (sgn(x2) <= 0) continue;
    auto x = rational_root(x2, 2);
    if (!x) continue;
    mpq_class y = b_ / (2 * *x);
    Q2 cand(*x, y);
    if (cand * cand == *this) return cand;
  }
  return std::nullopt;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Q2 nr = re_ * o.re_ - im_ * o.im_;
  Q2 ni = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(nr);
  im_ = std::move(ni);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (im_.is_zero()) return Scalar(re_.inverse());
  Q2 n = norm2().inverse();
  return Scalar(re_ * n, -im_ * n);
}

namespace {

std::string q_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

std::string to_string(const Q2& x) {
  if (x.is_rational()) return q_str(x.a());
  std::string s;
  if (sgn(x.a()) != 0) s = q_str(x.a()) + (sgn(x.b()) > 0 ? "+" : "");
  return s + q_str(x.b()) + "*r2";
}

std::string to_string(const Scalar& x) {
  if (x.is_real()) return to_string(x.re());
  std::string im = "(" + to_string(x.im()) + ")i";
  if (x.re().is_zero()) return im;
  return to_string(x.re()) + "+" + im;
}

std::ostream& operator<<(std::ostream& os, const Q2& x) { return os << to_string(x); }
std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << to_string(x); }

}  // namespace cayley
