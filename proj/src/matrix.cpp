#include "cayley/matrix.hpp"

namespace cayley {

QMat realify_rows(const SMat& m) {
  QMat out(2 * m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(2 * i, j) = m(i, j).re();
      out(2 * i + 1, j) = m(i, j).im();
    }
  return out;
}

Inertia inertia(QMat m) {
  std::size_t n = m.rows();
  Inertia r;
  std::size_t k = 0;
  while (k < n) {
    // find a nonzero diagonal pivot in the trailing block
    std::size_t p = k;
    while (p < n && m(p, p).is_zero()) ++p;
    if (p == n) {
      // all diagonal entries zero: use an off-diagonal entry to make one
      std::size_t i = n, j = n;
      for (std::size_t a = k; a < n && i == n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          if (!m(a, b).is_zero()) {
            i = a;
            j = b;
            break;
          }
      if (i == n) {
        r.zero += static_cast<int>(n - k);
        break;
      }
      // row/col i += row/col j gives m(i,i) = 2 m(i,j) != 0
      for (std::size_t c = 0; c < n; ++c) m(i, c) += m(j, c);
      for (std::size_t c = 0; c < n; ++c) m(c, i) += m(c, j);
      p = i;
    }
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(p, c), m(k, c));
      for (std::size_t c = 0; c < n; ++c) std::swap(m(c, p), m(c, k));
    }
    Q2 piv = m(k, k);
    (piv.sign() > 0 ? r.pos : r.neg) += 1;
    Q2 inv = piv.inverse();
    // Schur complement on the trailing block
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      Q2 f = m(i, k) * inv;
      for (std::size_t c = k + 1; c < n; ++c) m(i, c) -= f * m(k, c);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      m(i, k) = Q2();
      m(k, i) = Q2();
    }
    ++k;
  }
  return r;
}

}  // namespace cayley
