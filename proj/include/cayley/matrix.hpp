#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cayley/scalar.hpp"

namespace cayley {

// Dense matrix over an exact field (Q2 or Scalar). Row-major.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t r, std::size_t c) : r_(r), c_(c), d_(r * c) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  T& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }

  Mat transpose() const {
    Mat t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.c_ != y.r_) throw std::invalid_argument("matrix shape mismatch");
    Mat z(x.r_, y.c_);
    for (std::size_t i = 0; i < x.r_; ++i)
      for (std::size_t k = 0; k < x.c_; ++k) {
        const T& a = x(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < y.c_; ++j)
          if (!y(k, j).is_zero()) z(i, j) += a * y(k, j);
      }
    return z;
  }
  friend Mat operator+(Mat x, const Mat& y) {
    for (std::size_t i = 0; i < x.d_.size(); ++i) x.d_[i] += y.d_[i];
    return x;
  }
  friend Mat operator-(Mat x, const Mat& y) {
    for (std::size_t i = 0; i < x.d_.size(); ++i) x.d_[i] -= y.d_[i];
    return x;
  }
  friend Mat operator*(const T& s, Mat x) {
    for (auto& v : x.d_) v = s * v;
    return x;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

  bool is_zero() const {
    for (const auto& v : d_)
      if (!v.is_zero()) return false;
    return true;
  }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> d_;
};

// Row echelon in place; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Mat<T>& m) {
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    T inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      T f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  return piv;
}

template <class T>
std::size_t rank(Mat<T> m) {
  return rref(m).size();
}

// Basis of the right kernel, one vector per column of the result.
template <class T>
Mat<T> kernel(Mat<T> m) {
  auto piv = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_piv[j]) free.push_back(j);
  Mat<T> k(m.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = T(1);
    for (std::size_t r = 0; r < piv.size(); ++r) k(piv[r], f) = -m(r, free[f]);
  }
  return k;
}

template <class T>
T det(Mat<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
  std::size_t n = m.rows();
  T d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return T();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    T inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      T f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

template <class T>
std::optional<Mat<T>> inverse(const Mat<T>& m) {
  std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  Mat<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Mat<T> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

// Solve A x = b for one x; nullopt if inconsistent.
template <class T>
std::optional<std::vector<T>> solve(const Mat<T>& a, const std::vector<T>& b) {
  Mat<T> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  std::vector<T> x(a.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, a.cols());
  return x;
}

// Columns side by side.
template <class T>
Mat<T> hcat(const Mat<T>& x, const Mat<T>& y) {
  if (x.rows() != y.rows()) throw std::invalid_argument("hcat row mismatch");
  Mat<T> z(x.rows(), x.cols() + y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) z(i, j) = x(i, j);
    for (std::size_t j = 0; j < y.cols(); ++j) z(i, x.cols() + j) = y(i, j);
  }
  return z;
}

using SMat = Mat<Scalar>;
using QMat = Mat<Q2>;

// Real and imaginary parts stacked, rows doubled.
QMat realify_rows(const SMat& m);

// Congruence diagonalisation of a real symmetric matrix: (positive, negative, zero).
struct Inertia {
  int pos = 0, neg = 0, zero = 0;
};
Inertia inertia(QMat m);

}  // namespace cayley
