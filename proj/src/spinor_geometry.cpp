#include "cayley/spinor_geometry.hpp"

#include <stdexcept>

namespace cayley {

namespace {

void require_plus(const Spinor& psi) {
  if (psi.is_zero()) throw std::invalid_argument("zero spinor");
  if (psi.parity() != Parity::Plus) throw std::invalid_argument("plus spinor expected");
}

}  // namespace

SMat vector_metric(Signature s) { return pairing_matrix(algebra_of(s)); }

SMat conj(const SMat& m) {
  SMat c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = m(i, j).conj();
  return c;
}

int span_dim(const SMat& cols) { return static_cast<int>(rank(cols)); }

int intersection_dim(const SMat& a, const SMat& b) {
  return span_dim(a) + span_dim(b) - span_dim(hcat(a, b));
}

bool same_span(const SMat& a, const SMat& b) {
  int ra = span_dim(a);
  return ra == span_dim(b) && ra == span_dim(hcat(a, b));
}

bool is_pure(const Spinor& psi) {
  require_plus(psi);
  return bilinear(0, psi, psi).is_zero();
}

NullSubspace annihilator(const Spinor& psi) {
  require_plus(psi);
  SMat m(16, 8);
  for (int a = 0; a < 8; ++a) {
    Spinor v = gamma_apply(a, psi);
    for (int i = 0; i < 16; ++i) m(i, a) = v.c[i];
  }
  NullSubspace ns;
  ns.basis = kernel(m);
  ns.dim = static_cast<int>(ns.basis.cols());
  ns.real_index = ns.dim == 0 ? 0 : intersection_dim(ns.basis, conj(ns.basis));
  return ns;
}

int real_index(const Spinor& psi) {
  if (!is_pure(psi)) throw std::invalid_argument("real index needs a pure spinor");
  return annihilator(psi).real_index;
}

Intersection intersection_type(const Spinor& phi, const Spinor& psi) {
  if (!is_pure(phi) || !is_pure(psi)) throw std::invalid_argument("pure spinors expected");
  if (phi.sig != psi.sig) throw std::invalid_argument("spinor signature mismatch");
  Intersection r;
  if (!bilinear(0, phi, psi).is_zero()) return r;
  Form b2 = bilinear(2, phi, psi);
  if (!b2.is_zero()) {
    if (!wedge(b2, b2).is_zero()) throw std::logic_error("B2 of pure spinors is not decomposable");
    r.common = 2;
    r.witness = b2;
    return r;
  }
  r.common = 4;
  return r;
}

bool is_decomposable4(const Form& Omega) {
  for (int a = 0; a < Omega.dim(); ++a)
    if (!wedge(Omega, interior_basis(a, Omega)).is_zero()) return false;
  return true;
}

ComplexStructureData structure_from_pure(const Spinor& psi) {
  if (!is_pure(psi)) throw std::invalid_argument("pure spinor expected");
  Spinor hat = conjugate(psi);
  if (!(pairing(hat, psi) == Scalar::frac(1, 2))) throw std::invalid_argument("normalisation <conj psi, psi> = 1/2 expected");
  NullSubspace ep = annihilator(psi);
  if (ep.real_index != 0) throw std::invalid_argument("real index 0 expected");
  NullSubspace em = annihilator(hat);
  SMat P = hcat(ep.basis, em.basis);
  auto Pi = inverse(P);
  if (!Pi) throw std::logic_error("eigenspaces do not span");
  SMat D(8, 8);
  for (int k = 0; k < 4; ++k) {
    D(k, k) = Scalar::i();
    D(k + 4, k + 4) = -Scalar::i();
  }
  ComplexStructureData out;
  out.J = P * D * *Pi;
  out.omega = Scalar(Q2(), Q2(-2)) * bilinear(2, hat, psi);
  out.Omega = Scalar(2) * bilinear(4, psi, psi);
  out.eplus = ep;
  return out;
}

ParaComplexStructureData structure_from_real_pair(const Spinor& plus, const Spinor& minus) {
  if (!is_pure(plus) || !is_pure(minus)) throw std::invalid_argument("pure spinors expected");
  for (const auto* s : {&plus, &minus})
    for (const auto& c : s->c)
      if (!c.is_real()) throw std::invalid_argument("real spinors expected");
  if (!(pairing(plus, minus) == Scalar::frac(1, 2))) throw std::invalid_argument("normalisation <psi+, psi-> = 1/2 expected");
  NullSubspace mp = annihilator(plus), mm = annihilator(minus);
  SMat P = hcat(mp.basis, mm.basis);
  auto Pi = inverse(P);
  if (!Pi) throw std::logic_error("eigenspaces do not span");
  SMat D(8, 8);
  for (int k = 0; k < 4; ++k) {
    D(k, k) = Scalar(1);
    D(k + 4, k + 4) = Scalar(-1);
  }
  ParaComplexStructureData out;
  out.K = P * D * *Pi;
  out.omega_r = Scalar(2) * bilinear(2, plus, minus);
  out.Omega_plus = Scalar(2) * bilinear(4, plus, plus);
  out.Omega_minus = Scalar(2) * bilinear(4, minus, minus);
  return out;
}

}  // namespace cayley
