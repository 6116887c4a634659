#include "cayley/clifford.hpp"

#include <stdexcept>

namespace cayley {

Algebra algebra_of(Signature s) { return s == Signature::Euclid ? Algebra::O : Algebra::Split; }

std::string to_string(Signature s) { return s == Signature::Euclid ? "8,0" : "4,4"; }

SMat SignedPerm::dense() const {
  SMat m(16, 16);
  for (int i = 0; i < 16; ++i) m(i, col[i]) = Scalar(sign[i]);
  return m;
}

namespace {

// G_0 = [[0, I], [I, 0]], G_a = [[0, -E_a], [E_a, 0]]
GammaSet build(Signature s) {
  GammaSet gs;
  gs.sig = s;
  const auto& p = pairing_signs(algebra_of(s));
  for (int a = 0; a < 8; ++a) gs.eta[a] = p[a];
  const auto& e = unit_matrices(algebra_of(s));
  for (int a = 0; a < 8; ++a) {
    std::array<std::array<int, 16>, 16> m{};
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        int v = e[a][i][j];
        m[i][8 + j] = a == 0 ? v : -v;
        m[8 + i][j] = v;
      }
    SignedPerm sp;
    for (int i = 0; i < 16; ++i) {
      int found = 0;
      for (int j = 0; j < 16; ++j)
        if (m[i][j] != 0) {
          sp.col[i] = j;
          sp.sign[i] = m[i][j];
          ++found;
        }
      if (found != 1) throw std::logic_error("gamma matrix is not a signed permutation");
    }
    gs.g[a] = sp;
  }
  return gs;
}

Spinor apply_perm(const SignedPerm& p, const Spinor& psi) {
  Spinor out;
  out.sig = psi.sig;
  for (int i = 0; i < 16; ++i) {
    const Scalar& v = psi.c[p.col[i]];
    if (!v.is_zero()) out.c[i] = p.sign[i] > 0 ? v : -v;
  }
  return out;
}

SpinGenerators build_generators(Signature s) {
  const GammaSet& gs = gamma(s);
  SpinGenerators out;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) {
      SMat ga = gs.g[a].dense(), gb = gs.g[b].dense();
      out.ab.emplace_back(a, b);
      out.spin.push_back(Scalar::frac(1, 4) * (ga * gb - gb * ga));
      SMat v(8, 8);
      for (int c = 0; c < 8; ++c) {
        if (b == c) v(a, c) += Scalar(gs.eta[b]);
        if (a == c) v(b, c) -= Scalar(gs.eta[a]);
      }
      out.vector.push_back(v);
    }
  return out;
}

}  // namespace

const GammaSet& gamma(Signature s) {
  static const GammaSet e = build(Signature::Euclid);
  static const GammaSet sp = build(Signature::Split);
  return s == Signature::Euclid ? e : sp;
}

Spinor Spinor::plus(Signature s, const Vec& upper) {
  if (upper.size() != 8) throw std::invalid_argument("plus spinor needs 8 components");
  Spinor x;
  x.sig = s;
  for (int i = 0; i < 8; ++i) x.c[i] = upper[i];
  return x;
}

Parity Spinor::parity() const {
  bool up = false, lo = false;
  for (int i = 0; i < 8; ++i) up = up || !c[i].is_zero();
  for (int i = 8; i < 16; ++i) lo = lo || !c[i].is_zero();
  if (up && lo) return Parity::Mixed;
  if (up) return Parity::Plus;
  if (lo) return Parity::Minus;
  return Parity::Zero;
}

bool Spinor::is_zero() const { return parity() == Parity::Zero; }

Spinor operator+(const Spinor& x, const Spinor& y) {
  if (x.sig != y.sig) throw std::invalid_argument("spinor signature mismatch");
  Spinor z = x;
  for (int i = 0; i < 16; ++i) z.c[i] += y.c[i];
  return z;
}

Spinor operator-(const Spinor& x, const Spinor& y) { return x + Scalar(-1) * y; }

Spinor operator*(const Scalar& s, const Spinor& x) {
  Spinor z = x;
  for (auto& v : z.c) v = s * v;
  return z;
}

Spinor gamma_apply(int a, const Spinor& psi) { return apply_perm(gamma(psi.sig).g.at(a), psi); }

Spinor gamma_action(const Vec& v, const Spinor& psi) {
  if (v.size() != 8) throw std::invalid_argument("vector must have 8 components");
  Spinor out;
  out.sig = psi.sig;
  for (int a = 0; a < 8; ++a)
    if (!v[a].is_zero()) out = out + v[a] * gamma_apply(a, psi);
  return out;
}

Scalar pairing(const Spinor& psi, const Spinor& phi) {
  if (psi.sig != phi.sig) throw std::invalid_argument("spinor signature mismatch");
  const auto& eta = gamma(psi.sig).eta;
  Scalar s;
  for (int i = 0; i < 16; ++i) {
    if (psi.c[i].is_zero() || phi.c[i].is_zero()) continue;
    Scalar t = psi.c[i] * phi.c[i];
    s += eta[i % 8] > 0 ? t : -t;
  }
  return s;
}

Form bilinear(int k, const Spinor& psi, const Spinor& phi) {
  if (k < 0 || k > 8) throw std::invalid_argument("bilinear degree out of range");
  if (psi.sig != phi.sig) throw std::invalid_argument("spinor signature mismatch");
  if (psi.parity() != Parity::Plus || phi.parity() != Parity::Plus)
    throw std::invalid_argument("bilinears are taken between plus spinors");
  Form out(8, k);
  for (unsigned m = 0; m < 256; ++m) {
    if (popcount(static_cast<Mask>(m)) != k) continue;
    auto idx = mask_indices(static_cast<Mask>(m));
    Spinor v = phi;
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) v = gamma_apply(*it, v);
    out.add_term(static_cast<Mask>(m), pairing(psi, v));
  }
  return out;
}

Spinor conjugate(const Spinor& psi) {
  Spinor z = psi;
  for (auto& v : z.c) v = v.conj();
  return z;
}

const SpinGenerators& spin_generators(Signature s) {
  static const SpinGenerators e = build_generators(Signature::Euclid);
  static const SpinGenerators sp = build_generators(Signature::Split);
  return s == Signature::Euclid ? e : sp;
}

Spinor apply(const SMat& m, const Spinor& psi) {
  Spinor out;
  out.sig = psi.sig;
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j)
      if (!m(i, j).is_zero() && !psi.c[j].is_zero()) out.c[i] += m(i, j) * psi.c[j];
  return out;
}

Stabilizer stabilizer(const Spinor& psi) {
  if (psi.is_zero()) throw std::invalid_argument("zero spinor");
  const auto& gens = spin_generators(psi.sig);
  std::size_t n = gens.spin.size();
  SMat cols(16, n);
  for (std::size_t k = 0; k < n; ++k) {
    Spinor v = apply(gens.spin[k], psi);
    for (int i = 0; i < 16; ++i) cols(i, k) = v.c[i];
  }
  Stabilizer st;
  st.basis = kernel(realify_rows(cols));
  st.dim = static_cast<int>(st.basis.cols());
  return st;
}

}  // namespace cayley
