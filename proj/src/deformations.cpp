#include "cayley/deformations.hpp"

#include <stdexcept>

namespace cayley {

using namespace fx;

namespace {

const Scalar I = Scalar::i();

Form pm(int a, int b, int s) { return s > 0 ? e(a) + e(b) : e(a) - e(b); }

Vec upper(const Spinor& s) { return Vec(s.c.begin(), s.c.begin() + 8); }

// coefficients on the K eigen-directions e_k +- e_{k+4}, k = 1..3
std::array<Scalar, 3> part(const std::array<Scalar, 6>& x, int s) {
  std::array<Scalar, 3> out;
  for (int k = 0; k < 3; ++k) out[k] = half() * (s > 0 ? x[k] + x[k + 3] : x[k] - x[k + 3]);
  return out;
}

Spinor six_vec(const std::array<Scalar, 6>& x) {
  Vec v(8);
  for (int k = 0; k < 3; ++k) {
    v[k + 1] = x[k];
    v[k + 5] = x[k + 3];
  }
  return Spinor::plus(Signature::Split, v);
}

}  // namespace

Form riemannian_fibre_tangent(const Vec& Y, const Form& Phi) {
  if (Y.size() != 7) throw std::invalid_argument("Y must have 7 components");
  Vec y(8);
  for (int k = 0; k < 7; ++k) y[k + 1] = Y[k];
  return wedge(e(0), interior(y, Phi)) - wedge(Form::one_form(y), interior_basis(0, Phi));
}

Form xi10_omega_plus(const std::array<Scalar, 3>& x) {
  return x[0] * wedge(pm(2, 6, 1), pm(3, 7, 1)) + x[1] * wedge(pm(3, 7, 1), pm(1, 5, 1)) +
         x[2] * wedge(pm(1, 5, 1), pm(2, 6, 1));
}

Form xi01_omega_minus(const std::array<Scalar, 3>& x) {
  return x[0] * wedge(pm(2, 6, -1), pm(3, 7, -1)) + x[1] * wedge(pm(3, 7, -1), pm(1, 5, -1)) +
         x[2] * wedge(pm(1, 5, -1), pm(2, 6, -1));
}

Form xi01_omega(const std::array<Scalar, 3>& x) {
  Form f(8, 1);
  for (int k = 0; k < 3; ++k) f += x[k] * pm(k + 1, k + 5, 1);
  return f;
}

Form xi10_omega(const std::array<Scalar, 3>& x) {
  Form f(8, 1);
  for (int k = 0; k < 3; ++k) f += x[k] * pm(k + 1, k + 5, -1);
  return f;
}

Spinor perturbation_spinor(const LorentzPerturbation& p) {
  Spinor one = unit(Signature::Split), e4 = Spinor::plus_unit(Signature::Split, 4);
  Spinor dplus = p.a * (one + e4) + six_vec(p.xi);
  Spinor dminus = (-p.a) * (one - e4) + six_vec(p.eta);
  Scalar u = inv_sqrt2() * (Scalar(1) + I);
  return u * dplus + u.conj() * dminus;
}

Form lorentzian_tangent_bilinear(const LorentzPerturbation& p) {
  return bilinear(4, psi_L(), perturbation_spinor(p));
}

Form lorentzian_tangent_closed(const LorentzPerturbation& p) {
  auto x10 = part(p.xi, 1), x01 = part(p.xi, -1), y10 = part(p.eta, 1), y01 = part(p.eta, -1);
  Form w = omega_r(), fp = pm(4, 0, 1), fm = pm(4, 0, -1);
  Form first = (I * p.a) * (Omega_plus() + Omega_minus());
  Form im = (xi10_omega_plus(x10) + wedge(fp, xi01_omega(x01))) -
            (xi01_omega_minus(y01) + wedge(fm, xi10_omega(y10)));
  Form re = (xi10_omega_plus(y10) + wedge(fp, xi01_omega(y01))) +
            (xi01_omega_minus(x01) + wedge(fm, xi10_omega(x10)));
  return first + I * wedge(w, im) + wedge(w, re);
}

LorentzPerturbation unit_perturbation(int k) {
  if (k < 0 || k > 12) throw std::out_of_range("perturbation index");
  LorentzPerturbation p;
  if (k == 0) p.a = Scalar(1);
  else if (k <= 6) p.xi[k - 1] = Scalar(1);
  else p.eta[k - 7] = Scalar(1);
  return p;
}

EigenDecomp split_eigen(const Spinor& Xi) {
  if (Xi.sig != Signature::Split || Xi.parity() == Parity::Minus || Xi.parity() == Parity::Mixed)
    throw std::invalid_argument("plus spinor in signature (4,4) expected");
  Vec v = upper(Xi);
  for (int s : {1, -1}) {
    bool ok = true;
    for (int k = 0; k < 4; ++k) ok = ok && v[k + 4] == Scalar(s) * v[k];
    if (!ok) continue;
    EigenDecomp d;
    d.eigen = s;
    d.s = v[0];
    for (int k = 0; k < 3; ++k) d.x[k] = v[k + 1];
    return d;
  }
  throw std::invalid_argument("spinor is not in an eigenspace of K");
}

Form eigenspace_bilinear(bool plus, const Spinor& Xi) {
  split_eigen(Xi);
  return bilinear(4, plus ? psi_plus() : psi_minus(), Xi);
}

Form eigenspace_closed(bool plus, const Spinor& Xi) {
  EigenDecomp d = split_eigen(Xi);
  Form w = omega_r(), oo = wedge(w, w);
  if (plus && d.eigen > 0) return d.s * Omega_plus() + wedge(w, xi10_omega_plus(d.x));
  if (plus) return (half() * d.s) * oo + wedge({w, pm(4, 0, 1), xi01_omega(d.x)});
  if (d.eigen > 0) return (half() * d.s) * oo + wedge({w, pm(4, 0, -1), xi10_omega(d.x)});
  return d.s * Omega_minus() + wedge(w, xi01_omega_minus(d.x));
}

namespace {

const std::vector<Mask>& slots4() {
  static const std::vector<Mask> s = [] {
    std::vector<Mask> v;
    for (Mask m = 0; m < 256; ++m)
      if (popcount(m) == 4) v.push_back(m);
    return v;
  }();
  return s;
}

// 13 generators: A20 (6), A02 (6), R (1)
const std::vector<Form>& generators() {
  static const std::vector<Form> g = [] {
    std::vector<Form> v;
    Form w = omega_r();
    for (int half_ : {0, 1})
      for (int k = 0; k < 3; ++k) {
        std::array<Scalar, 3> x{};
        x[k] = Scalar(1);
        v.push_back(half_ == 0 ? wedge(w, xi10_omega_plus(x)) : wedge({w, pm(4, 0, 1), xi01_omega(x)}));
      }
    for (int half_ : {0, 1})
      for (int k = 0; k < 3; ++k) {
        std::array<Scalar, 3> x{};
        x[k] = Scalar(1);
        v.push_back(half_ == 0 ? wedge(w, xi01_omega_minus(x)) : wedge({w, pm(4, 0, -1), xi10_omega(x)}));
      }
    v.push_back(Omega_plus() + Omega_minus());
    return v;
  }();
  return g;
}

std::array<Scalar, 13> coords(const Form& real_form) {
  const auto& gens = generators();
  const auto& sl = slots4();
  SMat A(sl.size(), gens.size());
  Vec b(sl.size());
  for (std::size_t s = 0; s < sl.size(); ++s) {
    for (std::size_t j = 0; j < gens.size(); ++j) A(s, j) = gens[j].coeff(sl[s]);
    b[s] = real_form.coeff(sl[s]);
  }
  auto x = solve(A, b);
  if (!x) throw std::invalid_argument("form lies outside the fibre tangent space");
  std::array<Scalar, 13> out;
  for (int j = 0; j < 13; ++j) out[j] = (*x)[j];
  return out;
}

Form combine(const std::array<Scalar, 13>& c, int from, int to) {
  Form f(8, 4);
  for (int j = from; j < to; ++j)
    if (!c[j].is_zero()) f += c[j] * generators()[j];
  return f;
}

int rank_of(const std::vector<std::array<Scalar, 13>>& rows, int from, int to) {
  SMat m(rows.size(), to - from);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int j = from; j < to; ++j) m(r, j - from) = rows[r][j];
  return static_cast<int>(rank(m));
}

}  // namespace

BigradedDecomposition decompose_wrt_K(const Form& dPhi) {
  BigradedDecomposition d;
  Form re = dPhi.real_part(), im = dPhi.imag_part();
  d.re_coords = coords(re);
  d.im_coords = coords(im);
  d.re20 = combine(d.re_coords, 0, 6);
  d.re02 = combine(d.re_coords, 6, 12);
  d.re_r = combine(d.re_coords, 12, 13);
  d.im20 = combine(d.im_coords, 0, 6);
  d.im02 = combine(d.im_coords, 6, 12);
  d.im_r = combine(d.im_coords, 12, 13);
  d.resums = d.re20 + d.re02 + d.re_r + I * (d.im20 + d.im02 + d.im_r) == dPhi;
  return d;
}

std::set<std::pair<int, int>> k_leg_types(const Form& f) {
  SMat A(8, 8);
  for (int k = 0; k < 4; ++k) {
    A(k, k) = half();
    A(k, k + 4) = half();
    A(k + 4, k) = half();
    A(k + 4, k + 4) = -half();
  }
  std::set<std::pair<int, int>> out;
  Form g = pullback(A, f);
  for (const auto& [m, c] : g.terms()) {
    (void)c;
    out.insert({popcount(Mask(m & 0x0F)), popcount(Mask(m & 0xF0))});
  }
  return out;
}

SweepDims sweep_dimensions() {
  std::vector<std::array<Scalar, 13>> re, im;
  SMat all(slots4().size(), 13);
  for (int k = 0; k < 13; ++k) {
    Form f = lorentzian_tangent_bilinear(unit_perturbation(k));
    auto d = decompose_wrt_K(f);
    re.push_back(d.re_coords);
    im.push_back(d.im_coords);
    for (std::size_t s = 0; s < slots4().size(); ++s) all(s, k) = f.coeff(slots4()[s]);
  }
  SweepDims s;
  s.total = static_cast<int>(rank(realify_rows(all)));
  s.re = rank_of(re, 0, 13);
  s.im = rank_of(im, 0, 13);
  s.re20 = rank_of(re, 0, 6);
  s.re02 = rank_of(re, 6, 12);
  s.im20 = rank_of(im, 0, 6);
  s.im02 = rank_of(im, 6, 12);
  s.im_r = rank_of(im, 12, 13);
  // same (xi, eta) input on both sides: invertible on the 12 non-radial directions
  std::vector<std::array<Scalar, 13>> re12(re.begin() + 1, re.end()), im12(im.begin() + 1, im.end());
  s.bijection = rank_of(re12, 0, 12) == 12 && rank_of(im12, 0, 12) == 12;
  return s;
}

SMat compat_first_order(const Form& Phi, const Form& dPhi) {
  return compat_tensor(dPhi, Phi, Phi) + compat_tensor(Phi, dPhi, Phi) + compat_tensor(Phi, Phi, dPhi);
}

}  // namespace cayley
