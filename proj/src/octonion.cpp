#include "cayley/octonion.hpp"

#include <stdexcept>

namespace cayley {

namespace {

IMat8 zero8() {
  IMat8 m{};
  return m;
}

// so(8) generator: +1 at (i,j), -1 at (j,i)
IMat8 E(int i, int j) {
  IMat8 m = zero8();
  m[i][j] = 1;
  m[j][i] = -1;
  return m;
}

// symmetric partner: +1 at (i,j) and (j,i)
IMat8 S(int i, int j) {
  IMat8 m = zero8();
  m[i][j] = 1;
  m[j][i] = 1;
  return m;
}

IMat8 lin(std::initializer_list<std::pair<int, IMat8>> terms) {
  IMat8 m = zero8();
  for (const auto& [c, t] : terms)
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) m[i][j] += c * t[i][j];
  return m;
}

std::array<IMat8, 8> build(Algebra alg) {
  std::array<IMat8, 8> e{};
  for (int i = 0; i < 8; ++i) e[0][i][i] = 1;
  e[5] = lin({{-1, E(0, 5)}, {1, E(1, 4)}, {1, E(2, 3)}, {-1, E(6, 7)}});
  e[6] = lin({{-1, E(0, 6)}, {-1, E(1, 3)}, {1, E(2, 4)}, {1, E(5, 7)}});
  e[7] = lin({{-1, E(0, 7)}, {1, E(1, 2)}, {1, E(3, 4)}, {-1, E(5, 6)}});
  if (alg == Algebra::O) {
    e[1] = lin({{-1, E(0, 1)}, {1, E(2, 7)}, {-1, E(3, 6)}, {1, E(4, 5)}});
    e[2] = lin({{-1, E(0, 2)}, {-1, E(1, 7)}, {1, E(3, 5)}, {1, E(4, 6)}});
    e[3] = lin({{-1, E(0, 3)}, {1, E(1, 6)}, {-1, E(2, 5)}, {1, E(4, 7)}});
    e[4] = lin({{-1, E(0, 4)}, {-1, E(1, 5)}, {-1, E(2, 6)}, {-1, E(3, 7)}});
  } else {
    e[1] = lin({{1, S(0, 1)}, {1, S(2, 7)}, {-1, S(3, 6)}, {1, S(4, 5)}});
    e[2] = lin({{1, S(0, 2)}, {-1, S(1, 7)}, {1, S(3, 5)}, {1, S(4, 6)}});
    e[3] = lin({{1, S(0, 3)}, {1, S(1, 6)}, {-1, S(2, 5)}, {1, S(4, 7)}});
    e[4] = lin({{1, S(0, 4)}, {-1, S(1, 5)}, {-1, S(2, 6)}, {-1, S(3, 7)}});
  }
  return e;
}

Form f3(int a, int b, int c, int s) { return Form::basis(8, {a, b, c}, Scalar(s)); }
Form f4(int a, int b, int c, int d, int s) { return Form::basis(8, {a, b, c, d}, Scalar(s)); }

}  // namespace

const std::array<IMat8, 8>& unit_matrices(Algebra alg) {
  static const auto o = build(Algebra::O);
  static const auto s = build(Algebra::Split);
  return alg == Algebra::O ? o : s;
}

const std::array<int, 8>& pairing_signs(Algebra alg) {
  static const std::array<int, 8> o{1, 1, 1, 1, 1, 1, 1, 1};
  static const std::array<int, 8> s{1, -1, -1, -1, -1, 1, 1, 1};
  return alg == Algebra::O ? o : s;
}

SMat pairing_matrix(Algebra alg) {
  const auto& p = pairing_signs(alg);
  return diag(std::vector<long>(p.begin(), p.end()));
}

Octonion Octonion::unit(Algebra alg, int a) {
  Octonion x{alg, {}};
  x.q.at(a) = Scalar(1);
  return x;
}

Octonion Octonion::from_vec(Algebra alg, const Vec& v) {
  if (v.size() != 8) throw std::invalid_argument("octonion needs 8 components");
  Octonion x{alg, {}};
  for (int i = 0; i < 8; ++i) x.q[i] = v[i];
  return x;
}

Octonion oct_mul(const Octonion& x, const Octonion& y) {
  if (x.alg != y.alg) throw std::invalid_argument("octonion algebra mismatch");
  const auto& e = unit_matrices(x.alg);
  Octonion z{x.alg, {}};
  for (int a = 0; a < 8; ++a) {
    if (x.q[a].is_zero()) continue;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        int m = e[a][i][j];
        if (m == 0 || y.q[j].is_zero()) continue;
        Scalar t = x.q[a] * y.q[j];
        z.q[i] += m > 0 ? t : -t;
      }
  }
  return z;
}

Octonion oct_conj(const Octonion& x) {
  Octonion z = x;
  for (int a = 1; a < 8; ++a) z.q[a] = -z.q[a];
  return z;
}

Octonion oct_add(const Octonion& x, const Octonion& y) {
  if (x.alg != y.alg) throw std::invalid_argument("octonion algebra mismatch");
  Octonion z = x;
  for (int a = 0; a < 8; ++a) z.q[a] += y.q[a];
  return z;
}

Octonion oct_scale(const Scalar& s, const Octonion& x) {
  Octonion z = x;
  for (auto& c : z.q) c = s * c;
  return z;
}

Scalar oct_pairing(const Octonion& x, const Octonion& y) {
  if (x.alg != y.alg) throw std::invalid_argument("octonion algebra mismatch");
  const auto& p = pairing_signs(x.alg);
  Scalar s;
  for (int a = 0; a < 8; ++a) {
    Scalar t = x.q[a] * y.q[a];
    s += p[a] > 0 ? t : -t;
  }
  return s;
}

Form structure_3form(Algebra alg) {
  // split case flips every term except e^567
  int s = alg == Algebra::O ? 1 : -1;
  return f3(5, 6, 7, 1) + f3(5, 4, 1, s) + f3(5, 2, 3, -s) + f3(6, 4, 2, s) + f3(6, 3, 1, -s) +
         f3(7, 4, 3, s) + f3(7, 1, 2, -s);
}

Form structure_4form(Algebra alg) {
  int s = alg == Algebra::O ? 1 : -1;
  return f4(1, 2, 3, 4, 1) + f4(6, 7, 4, 1, s) + f4(6, 7, 2, 3, -s) + f4(7, 5, 4, 2, s) +
         f4(7, 5, 3, 1, -s) + f4(5, 6, 4, 3, s) + f4(5, 6, 1, 2, -s);
}

const std::vector<int> kImaginaryLabels{1, 2, 3, 4, 5, 6, 7};

Form to7(const Form& a8) {
  for (const auto& [m, c] : a8.terms())
    if (m & 1u) throw std::invalid_argument("form has a leg along the unit direction");
  return restrict_to(a8, kImaginaryLabels);
}

Form to8(const Form& a7) { return embed(a7, 8, kImaginaryLabels); }

Octonion cross(const Octonion& u, const Octonion& v) {
  if (!u.is_imaginary() || !v.is_imaginary()) throw std::invalid_argument("cross product needs imaginary octonions");
  if (u.alg != v.alg) throw std::invalid_argument("octonion algebra mismatch");
  Form phi = structure_3form(u.alg);
  Form uv = interior(v.vec(), interior(u.vec(), phi));
  const auto& p = pairing_signs(u.alg);
  Octonion z{u.alg, {}};
  for (int a = 1; a < 8; ++a) {
    Scalar c = uv.coeff(static_cast<Mask>(1u << a));
    z.q[a] = p[a] > 0 ? c : -c;
  }
  return z;
}

Vec triple_cross(const Vec& u, const Vec& v, const Vec& w, const Form& Phi, const SMat& g) {
  if (Phi.grade() != 4) throw std::invalid_argument("triple cross needs a 4-form");
  // Phi(x,u,v,w) = -Phi(u,v,w,x)
  Form alpha = -interior(w, interior(v, interior(u, Phi)));
  return raise(alpha, g);
}

MetricFrom3Form metric_from_3form(const Form& phi) {
  if (phi.grade() != 3 || phi.dim() != 7) throw std::invalid_argument("expected a 3-form on R^7");
  int n = 7;
  std::vector<Form> c;
  for (int i = 0; i < n; ++i) c.push_back(interior_basis(i, phi));
  MetricFrom3Form r;
  r.density = SMat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Scalar v = top_coeff(wedge({c[i], c[j], phi})) * Scalar::frac(1, 6);
      r.density(i, j) = v;
      r.density(j, i) = v;
    }
  r.density_det = det(r.density);
  if (r.density_det.is_zero()) throw std::invalid_argument("degenerate 3-form");
  r.orientation = Form::basis(7, {0, 1, 2, 3, 4, 5, 6});
  QMat real(n, n);
  bool is_real = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      is_real = is_real && r.density(i, j).is_real();
      real(i, j) = r.density(i, j).re();
    }
  if (!is_real) throw std::invalid_argument("complex 3-form");
  r.signature = inertia(real);
  const Q2& d = r.density_det.re();
  if (d.is_rational()) {
    mpq_class ad = abs(d.a());
    if (auto root = rational_root(ad, 9)) r.metric = Scalar(Q2(1 / *root)) * r.density;
  }
  return r;
}

MulTable algebra_from_cayley(const Form& Phi, const Vec& e, const SMat& g) {
  if (!(dot(e, g, e) == Scalar(1))) throw std::invalid_argument("unit vector expected");
  int n = Phi.dim();
  MulTable t(n, std::vector<Vec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec u = basis_vec(n, i), v = basis_vec(n, j);
      Vec p = triple_cross(u, e, v, Phi, g);
      Scalar ue = dot(u, g, e), ve = dot(v, g, e), uv = dot(u, g, v);
      for (int k = 0; k < n; ++k) p[k] += ue * v[k] + ve * u[k] - uv * e[k];
      t[i][j] = p;
    }
  return t;
}

UnitSplit split_by_unit_vector(const Form& Phi, const Vec& e, const SMat& g) {
  if (!(dot(e, g, e) == Scalar(1))) throw std::invalid_argument("unit vector expected");
  UnitSplit s;
  Form estar = lower(e, g);
  s.phi_e = interior(e, Phi);
  Form rest = Phi - wedge(estar, s.phi_e);
  Form orient = Form::basis(Phi.dim(), {0, 1, 2, 3, 4, 5, 6, 7});
  // seven dimensional star on the complement of e
  Form star7 = hodge(wedge(estar, s.phi_e), g, orient);
  if (rest == star7) {
    s.eps = 1;
  } else if (rest == -star7) {
    s.eps = -1;
  } else {
    throw std::invalid_argument("form is not of Cayley type for this metric");
  }
  s.psi_e = star7;
  return s;
}

}  // namespace cayley
