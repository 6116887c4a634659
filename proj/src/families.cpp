#include "cayley/families.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cayley {

using namespace fx;

std::string to_string(Family f) {
  switch (f) {
    case Family::RiemannianReal: return "riemannianReal";
    case Family::RiemannianComplexTau: return "riemannianComplexTau";
    case Family::SplitReal: return "splitReal";
    case Family::SplitComplexTau: return "splitComplexTau";
    case Family::SplitComplexTheta: return "splitComplexTheta";
    case Family::Lorentzian: return "lorentzian";
  }
  return "?";
}

Signature signature_of(Family f) {
  return f == Family::RiemannianReal || f == Family::RiemannianComplexTau ? Signature::Euclid
                                                                          : Signature::Split;
}

Scalar cosh2(const Scalar& t) {
  Scalar t2 = t * t;
  return half() * (t2 + t2.inverse());
}

Scalar sinh2(const Scalar& t) {
  Scalar t2 = t * t;
  return half() * (t2 - t2.inverse());
}

namespace {

const Scalar I = Scalar::i();

void check_t(const Scalar& t) {
  if (!t.is_real() || t.re().sign() <= 0) throw std::invalid_argument("t must be a positive real point");
}

void check_u(const Scalar& u) {
  if (!(u * u.conj() == Scalar(1))) throw std::invalid_argument("u must lie on the unit circle");
}

Form tau_closed(const Form& Omega, const Form& omega, const Scalar& t) {
  return cosh2(t) * Omega.real_part() - half() * wedge(omega, omega) + (I * sinh2(t)) * Omega.imag_part();
}

Spinor tau_seed(const Spinor& p, const Scalar& t) { return t * p + t.inverse() * conjugate(p); }

}  // namespace

Form family_closed_form(Family f, const Scalar& param) {
  Form oo = wedge(omega_r(), omega_r());
  switch (f) {
    case Family::RiemannianReal:
      return Omega_std().real_part() - half() * wedge(omega_std(), omega_std());
    case Family::RiemannianComplexTau:
      check_t(param);
      return tau_closed(Omega_std(), omega_std(), param);
    case Family::SplitReal:
      return half() * (Omega_plus() + Omega_minus()) + half() * oo;
    case Family::SplitComplexTau:
      check_t(param);
      return tau_closed(Omega_split(), omega_split(), param);
    case Family::SplitComplexTheta: {
      check_u(param);
      Scalar u2 = param * param;
      Scalar c(u2.re()), s(u2.im());
      return (half() * c) * (Omega_plus() + Omega_minus()) + (half() * I * s) * (Omega_plus() - Omega_minus()) +
             half() * oo;
    }
    case Family::Lorentzian:
      return (half() * I) * (Omega_plus() - Omega_minus()) + half() * oo;
  }
  throw std::invalid_argument("unknown family");
}

CayleyForm build_family(Family f, const Scalar& param) {
  CayleyForm cf;
  cf.family = f;
  cf.param = param;
  Signature sig = signature_of(f);
  switch (f) {
    case Family::RiemannianReal:
    case Family::SplitReal:
      cf.param = Scalar(1);
      cf.seed = unit(sig);
      break;
    case Family::RiemannianComplexTau:
      check_t(param);
      cf.seed = tau_seed(psi_p(), param);
      break;
    case Family::SplitComplexTau:
      check_t(param);
      cf.seed = tau_seed(psi_p_split(), param);
      break;
    case Family::SplitComplexTheta:
      check_u(param);
      cf.seed = param * psi_plus() + param.conj() * psi_minus();
      break;
    case Family::Lorentzian:
      cf.param = Scalar(Q2(0, mpq_class(1, 2)), Q2(0, mpq_class(1, 2)));
      cf.seed = psi_L();
      break;
  }
  cf.Phi = bilinear(4, cf.seed, cf.seed);
  cf.metric = vector_metric(sig);
  if (!(cf.Phi == family_closed_form(f, cf.param)))
    throw std::logic_error("closed form mismatch for " + to_string(f));
  return cf;
}

// --- fibre over the standard metric -------------------------------------

namespace {

// value + eps * derivative, eps^2 = 0
struct DScalar {
  Scalar v, d;
};
struct DForm {
  Form v, d;
};

DScalar operator+(const DScalar& a, const DScalar& b) { return {a.v + b.v, a.d + b.d}; }
DScalar operator-(const DScalar& a, const DScalar& b) { return {a.v - b.v, a.d - b.d}; }
DScalar operator*(const DScalar& a, const DScalar& b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
DForm operator+(const DForm& a, const DForm& b) { return {a.v + b.v, a.d + b.d}; }
DForm operator-(const DForm& a, const DForm& b) { return {a.v - b.v, a.d - b.d}; }
DForm operator*(const DScalar& s, const DForm& a) { return {s.v * a.v, s.v * a.d + s.d * a.v}; }
DForm wedge(const DForm& a, const DForm& b) {
  return {cayley::wedge(a.v, b.v), cayley::wedge(a.v, b.d) + cayley::wedge(a.d, b.v)};
}

Scalar lift(long v, Scalar*) { return Scalar(v); }
DScalar lift(long v, DScalar*) { return {Scalar(v), Scalar()}; }
Form one_form_of(const std::vector<Scalar>& a) { return Form::one_form(a); }
DForm one_form_of(const std::vector<DScalar>& a) {
  Vec v, d;
  for (const auto& x : a) {
    v.push_back(x.v);
    d.push_back(x.d);
  }
  return {Form::one_form(v), Form::one_form(d)};
}
Form contract(const std::vector<Scalar>& a, const Form& f) { return interior(a, f); }
DForm contract(const std::vector<DScalar>& a, const DForm& f) {
  Vec v, d;
  for (const auto& x : a) {
    v.push_back(x.v);
    d.push_back(x.d);
  }
  return {interior(v, f.v), interior(v, f.d) + interior(d, f.v)};
}

// C_psi, *C_psi and Phi_psi for psi = (s, alpha) with the Euclidean metric.
template <class S, class F>
F fibre_formula(const std::vector<S>& alpha, const S& s, const F& C, const F& sC, const F& e0) {
  S n2 = lift(0, static_cast<S*>(nullptr));
  for (const auto& x : alpha) n2 = n2 + x * x;
  S one = lift(1, static_cast<S*>(nullptr)), two = lift(2, static_cast<S*>(nullptr));
  F a = one_form_of(alpha);
  F Cp = (one - two * n2) * C + two * wedge(a, contract(alpha, C)) - (two * s) * contract(alpha, sC);
  F sCp = sC - two * wedge(a, contract(alpha, sC)) + (two * s) * wedge(a, C);
  return wedge(e0, Cp) - sCp;
}

std::vector<Scalar> alpha8(const Vec& alpha) {
  if (alpha.size() != 7) throw std::invalid_argument("alpha must have 7 components");
  std::vector<Scalar> a(8);
  for (int k = 0; k < 7; ++k) a[k + 1] = alpha[k];
  return a;
}

}  // namespace

Form closed_form_fibre(const Vec& alpha, const Scalar& s) {
  auto a = alpha8(alpha);
  Scalar n2;
  for (const auto& x : a) n2 += x * x;
  Scalar rest = Scalar(1) - n2;
  if (!rest.is_real() || rest.re().sign() <= 0) throw std::invalid_argument("need |alpha|^2 < 1");
  if (!(s * s == rest)) throw std::invalid_argument("s^2 must equal 1 - |alpha|^2");
  return fibre_formula<Scalar, Form>(a, s, structure_3form(Algebra::O), structure_4form(Algebra::O), e(0));
}

Spinor fibre_spinor(const Vec& alpha, const Scalar& s) {
  auto a = alpha8(alpha);
  a[0] = s;
  return Spinor::plus(Signature::Euclid, a);
}

Form fibre_first_order(const Vec& Y) {
  auto a = alpha8(Y);
  std::vector<DScalar> da;
  for (const auto& x : a) da.push_back({Scalar(), x});
  DForm C{structure_3form(Algebra::O), Form(8, 3)}, sC{structure_4form(Algebra::O), Form(8, 4)},
      e0{e(0), Form(8, 1)};
  // s = sqrt(1 - eps^2 |Y|^2) = 1 to first order
  return fibre_formula<DScalar, DForm>(da, {Scalar(1), Scalar()}, C, sC, e0).d;
}

// --- metric identity ------------------------------------------------------

const std::vector<std::pair<int, int>>& index_pairs() {
  static const std::vector<std::pair<int, int>> p = [] {
    std::vector<std::pair<int, int>> v;
    for (int i = 0; i < 8; ++i)
      for (int k = i + 1; k < 8; ++k) v.push_back({i, k});
    return v;
  }();
  return p;
}

namespace {

int pair_index(int i, int k) {
  int lo = std::min(i, k), hi = std::max(i, k);
  return lo * (15 - lo) / 2 + (hi - lo - 1);
}

int perm_sign(std::array<int, 4> x) {
  int s = 1;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      if (x[a] == x[b]) return 0;
      if (x[a] > x[b]) s = -s;
    }
  return s;
}

// full 4-index value from the pair matrix
template <class M>
auto entry(const M& W, int i, int k, int j, int l) {
  using T = std::decay_t<decltype(W(0, 0))>;
  if (i == k || j == l) return T();
  int s = (i < k ? 1 : -1) * (j < l ? 1 : -1);
  T v = W(pair_index(i, k), pair_index(j, l));
  return s > 0 ? v : T() - v;
}

}  // namespace

SMat compat_tensor(const Form& A, const Form& B, const Form& C) {
  const auto& P = index_pairs();
  std::vector<Form> ca, cb;
  for (auto [i, k] : P) {
    ca.push_back(interior_basis(k, interior_basis(i, A)));
    cb.push_back(interior_basis(k, interior_basis(i, B)));
  }
  std::vector<Form> left;
  for (const auto& x : ca) left.push_back(wedge(x, C));
  SMat W(28, 28);
  Scalar sixth = Scalar::frac(1, 6);
  for (int p = 0; p < 28; ++p)
    for (int q = 0; q < 28; ++q) {
      Form top = wedge(left[p], cb[q]);
      if (!top.is_zero()) W(p, q) = sixth * top_coeff(top);
    }
  // remove the totally antisymmetric part
  std::map<Mask, Scalar> alt;
  std::array<int, 4> perm{0, 1, 2, 3};
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      for (int c = b + 1; c < 8; ++c)
        for (int d = c + 1; d < 8; ++d) {
          std::array<int, 4> x{a, b, c, d};
          Scalar sum;
          std::iota(perm.begin(), perm.end(), 0);
          do {
            std::array<int, 4> y{x[perm[0]], x[perm[1]], x[perm[2]], x[perm[3]]};
            Scalar v = entry(W, y[0], y[1], y[2], y[3]);
            if (!v.is_zero()) sum += Scalar(perm_sign(perm)) * v;
          } while (std::next_permutation(perm.begin(), perm.end()));
          if (!sum.is_zero()) alt[indices_mask({a, b, c, d})] = Scalar::frac(1, 24) * sum;
        }
  if (alt.empty()) return W;
  for (int p = 0; p < 28; ++p)
    for (int q = 0; q < 28; ++q) {
      auto [i, k] = P[p];
      auto [j, l] = P[q];
      std::array<int, 4> x{i, k, j, l};
      int s = perm_sign(x);
      if (s == 0) continue;
      auto it = alt.find(indices_mask({i, k, j, l}));
      if (it != alt.end()) W(p, q) -= Scalar(s) * it->second;
    }
  return W;
}

SMat lambda2(const SMat& g, const Scalar& scale) {
  const auto& P = index_pairs();
  SMat L(28, 28);
  for (int p = 0; p < 28; ++p)
    for (int q = 0; q < 28; ++q) {
      auto [i, k] = P[p];
      auto [j, l] = P[q];
      Scalar v = g(i, j) * g(k, l) - g(i, l) * g(k, j);
      if (!v.is_zero()) L(p, q) = scale * v;
    }
  return L;
}

Form volume_form(const SMat& g, int sign) {
  Scalar d = det(g);
  if (d.is_zero() || !d.is_real()) throw std::invalid_argument("degenerate or complex metric");
  Q2 ad = d.re().sign() < 0 ? -d.re() : d.re();
  auto r = ad.sqrt();
  if (!r) throw std::invalid_argument("sqrt|det g| outside the scalar field");
  std::vector<int> idx(g.rows());
  std::iota(idx.begin(), idx.end(), 0);
  return Form::basis(static_cast<int>(g.rows()), idx, Scalar(sign < 0 ? -*r : *r));
}

CompatResult verify_metric_compat(const Form& Phi, const SMat& g, const Form& vol) {
  if (Phi.grade() != 4 || Phi.dim() != 8) throw std::invalid_argument("8d 4-form expected");
  if (det(g).is_zero()) throw std::invalid_argument("degenerate metric");
  SMat T = compat_tensor(Phi);
  SMat L = lambda2(g, top_coeff(vol));
  CompatResult r;
  const auto& P = index_pairs();
  for (int p = 0; p < 28; ++p)
    for (int q = 0; q < 28; ++q)
      if (!(T(p, q) == L(p, q))) {
        std::ostringstream os;
        os << "(" << P[p].first << P[p].second << ";" << P[q].first << P[q].second << "): form gives " << T(p, q)
           << ", metric gives " << L(p, q);
        r.witness = os.str();
        return r;
      }
  r.ok = true;
  return r;
}

// --- numeric recovery -----------------------------------------------------

Recovered recover_metric(const Form& Phi, int max_iters) {
  using M8 = Eigen::Matrix<double, 8, 8>;
  SMat T = compat_tensor(Phi);
  Eigen::MatrixXd W(28, 28);
  for (int p = 0; p < 28; ++p)
    for (int q = 0; q < 28; ++q) {
      auto z = T(p, q).to_complex();
      if (std::abs(z.imag()) > 1e-9) throw std::runtime_error("metric identity tensor is not real");
      W(p, q) = z.real();
    }
  double dW = std::abs(W.determinant());
  if (dW == 0) throw std::runtime_error("degenerate form: det W = 0");
  double s0 = std::pow(dW, 1.0 / 42);
  Eigen::MatrixXd M = W / s0;
  double target = std::pow(std::abs(M.determinant()), 1.0 / 7);

  auto lam = [](const M8& g) {
    Eigen::MatrixXd L(28, 28);
    const auto& P = index_pairs();
    for (int p = 0; p < 28; ++p)
      for (int q = 0; q < 28; ++q) {
        auto [i, k] = P[p];
        auto [j, l] = P[q];
        L(p, q) = g(i, j) * g(k, l) - g(i, l) * g(k, j);
      }
    return L;
  };

  M8 eta = M8::Identity();
  for (int a = 1; a <= 4; ++a) eta(a, a) = -1;
  Recovered best;
  best.residual = INFINITY;
  for (int sign : {1, -1}) {
    Eigen::MatrixXd Ms = sign * M;
    for (const M8& init : {M8(M8::Identity()), eta}) {
      M8 g = init;
      int n = 0;
      for (; n < max_iters; ++n) {
        M8 gi = g.inverse();
        M8 gn = M8::Zero();
        for (int i = 0; i < 8; ++i)
          for (int j = 0; j < 8; ++j) {
            double s = 0;
            for (int k = 0; k < 8; ++k)
              for (int l = 0; l < 8; ++l) s += entry(Ms, i, k, j, l) * gi(k, l);
            gn(i, j) = s / 7;
          }
        double dg = std::abs(gn.determinant());
        if (!(dg > 0) || !std::isfinite(dg)) break;
        gn *= std::pow(target / dg, 1.0 / 8);
        double step = (gn - g).cwiseAbs().maxCoeff();
        g = gn;
        if (step < 1e-13 * std::max(1.0, g.cwiseAbs().maxCoeff())) break;
      }
      double res = (Ms - lam(g)).cwiseAbs().maxCoeff();
      if (res < best.residual) {
        best.residual = res;
        best.orientation = sign;
        best.iterations = n;
        best.g.n = 8;
        best.g.a.assign(64, 0);
        for (int i = 0; i < 8; ++i)
          for (int j = 0; j < 8; ++j) best.g.a[i * 8 + j] = 0.5 * (g(i, j) + g(j, i));
      }
    }
  }
  if (!(best.residual < 1e-9)) throw std::runtime_error("metric recovery did not converge");
  // g and -g give the same identity; prefer a positive first nonzero diagonal entry
  for (int i = 0; i < 8; ++i) {
    double d = best.g(i, i);
    if (std::abs(d) < 1e-12) continue;
    if (d < 0)
      for (auto& x : best.g.a) x = -x;
    break;
  }
  Eigen::Map<Eigen::Matrix<double, 8, 8, Eigen::RowMajor>> gm(best.g.a.data());
  Eigen::SelfAdjointEigenSolver<M8> es{M8(gm)};
  for (int i = 0; i < 8; ++i) {
    double ev = es.eigenvalues()(i);
    if (ev > 1e-9) ++best.pos;
    else if (ev < -1e-9) ++best.neg;
  }
  return best;
}

// --- calibrations ---------------------------------------------------------

std::vector<Vec> orthonormalize(const std::vector<Vec>& H, const SMat& g) {
  std::vector<int> order(H.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    std::vector<Vec> u;
    std::vector<Scalar> n;
    bool ok = true;
    for (int idx : order) {
      Vec v = H[idx];
      for (std::size_t j = 0; j < u.size(); ++j) {
        Scalar c = dot(v, g, u[j]) / n[j];
        for (std::size_t a = 0; a < v.size(); ++a) v[a] -= c * u[j][a];
      }
      Scalar nn = dot(v, g, v);
      if (nn.is_zero() || !nn.is_real()) {
        ok = false;
        break;
      }
      u.push_back(v);
      n.push_back(nn);
    }
    if (!ok) continue;
    std::vector<Vec> out;
    for (std::size_t j = 0; j < u.size(); ++j) {
      Q2 m = n[j].re().sign() < 0 ? -n[j].re() : n[j].re();
      auto r = m.sqrt();
      if (!r) {
        ok = false;
        break;
      }
      Scalar inv = Scalar(*r).inverse();
      Vec w = u[j];
      for (auto& x : w) x = inv * x;
      out.push_back(w);
    }
    if (ok) return out;
  } while (std::next_permutation(order.begin(), order.end()));
  throw std::invalid_argument("plane cannot be orthonormalized over the scalar field");
}

Calibration is_calibrated(const CayleyForm& cf, const std::vector<Vec>& H, const SMat& g) {
  if (H.size() != 4) throw std::invalid_argument("a 4-plane needs 4 spanning vectors");
  QMat G(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Scalar v = dot(H[a], g, H[b]);
      if (!v.is_real()) throw std::invalid_argument("complex restricted metric");
      G(a, b) = v.re();
    }
  Calibration c;
  c.plane = inertia(G);
  if (c.plane.zero != 0) throw std::invalid_argument("degenerate restriction of g");
  auto basis = orthonormalize(H, g);
  c.value = evaluate(cf.Phi, basis);
  bool lorentz_plane = c.plane.pos == 1 || c.plane.neg == 1;
  switch (cf.family) {
    case Family::RiemannianReal:
    case Family::SplitReal: c.constant = Scalar(1); break;
    case Family::RiemannianComplexTau:
    case Family::SplitComplexTau: c.constant = cosh2(cf.param); break;
    case Family::Lorentzian: c.constant = lorentz_plane ? I : Scalar(1); break;
    case Family::SplitComplexTheta: {
      // only the real members have a constant
      Scalar u2 = cf.param * cf.param;
      if (u2.is_real()) c.constant = Scalar(1);
      break;
    }
  }
  c.calibrated = !c.constant.is_zero() && (c.value == c.constant || c.value == -c.constant);
  return c;
}

namespace {

Form sumsq(const Triple& S, const Triple& T, const std::array<int, 3>& w = {1, 1, 1}) {
  Form f(8, 4);
  for (int i = 0; i < 3; ++i) f += Scalar(w[i]) * wedge(S[i], T[i]);
  return f;
}

Form tau_calibrated(const Scalar& c, const Scalar& s) {
  const std::array<int, 5> eI{0, 1, 2, 3, 4}, ep{0, 5, 6, 7, 0};
  Form re(8, 4), im(8, 4);
  auto d = [](int a, int b) { return a == b ? 1 : 0; };
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) {
          int ee = -perm_sign({i, j, k, l});  // eps_{4123} = +1
          if (ee) {
            Scalar w = Scalar::frac(ee, 24) * c;
            re += Form::basis(8, {eI[i], eI[j], eI[k], eI[l]}, w);
            re += Form::basis(8, {ep[i], ep[j], ep[k], ep[l]}, w);
            Scalar v = Scalar::frac(ee, 6) * s;
            im += Form::basis(8, {ep[i], eI[j], eI[k], eI[l]}, v);
            im += Form::basis(8, {eI[i], ep[j], ep[k], ep[l]}, -v);
          }
          Scalar m = Scalar::frac(1, 4) * (Scalar(d(i, k) * d(l, j) - d(i, l) * d(k, j)) - Scalar(ee) * c);
          if (!m.is_zero()) re += Form::basis(8, {eI[i], eI[j], ep[k], ep[l]}, m);
        }
  return re + I * im;
}

}  // namespace

CalibIdentity calibration_identity(CalibTag tag, const Scalar& t) {
  Scalar sixth = Scalar::frac(-1, 6);
  CalibIdentity r;
  switch (tag) {
    case CalibTag::Riemannian:
      r.built = sixth * sumsq(Sigma(), Sigma()) + sixth * sumsq(Sigma_prime(), Sigma_prime()) +
                sumsq(Sigma(), Sigma_prime());
      r.family = build_family(Family::RiemannianReal).Phi;
      break;
    case CalibTag::SplitFirst:
      r.built = sixth * sumsq(Sigma(), Sigma()) + sixth * sumsq(Sigma_prime(), Sigma_prime()) -
                sumsq(Sigma(), Sigma_prime());
      r.family = build_family(Family::SplitReal).Phi;
      break;
    case CalibTag::SplitSecond:
      r.built = sixth * sumsq(Sigma_s(), Sigma_s(), kSplitWeights) +
                sixth * sumsq(Sigma_s_prime(), Sigma_s_prime(), kSplitWeights) +
                sumsq(Sigma_s(), Sigma_s_prime(), kSplitWeights);
      r.family = build_family(Family::SplitReal).Phi;
      break;
    case CalibTag::Lorentzian:
      r.built = sixth * sumsq(Sigma_L(), Sigma_L()) + sixth * sumsq(Sigma_L_prime(), Sigma_L_prime()) -
                sumsq(Sigma_L(), Sigma_L_prime());
      r.family = build_family(Family::Lorentzian).Phi;
      break;
    case CalibTag::Tau:
      r.built = tau_calibrated(cosh2(t), sinh2(t));
      r.family = build_family(Family::RiemannianComplexTau, t).Phi;
      break;
  }
  r.equal = r.built == r.family;
  return r;
}

int orbit_dimension(const Form& Phi) {
  int n = Phi.dim();
  std::vector<Mask> slots;
  for (Mask m = 0; m < (1u << n); ++m)
    if (popcount(m) == Phi.grade()) slots.push_back(m);
  SMat A(slots.size(), n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SMat E(n, n);
      E(i, j) = Scalar(1);
      Form img = lie_act(E, Phi);
      for (std::size_t s = 0; s < slots.size(); ++s) A(s, i * n + j) = img.coeff(slots[s]);
    }
  return static_cast<int>(rank(realify_rows(A)));
}

bool MixedCheck::all() const {
  return sum_ok && pairing == half() && real_index == 2 && Omega_c_ok && Omega_c_prime_ok && omega_c_ok &&
         identity_ok;
}

MixedCheck mixed_representation_check() {
  MixedCheck m;
  Spinor p = pair_p(), q = pair_p_prime();
  m.sum_ok = p + q == psi_L();
  m.pairing = pairing(q, p);
  m.real_index = real_index(p);
  Form Oc = Scalar(2) * bilinear(4, p, p);
  Form Ocp = Scalar(2) * bilinear(4, q, q);
  Form oc = Scalar(2) * bilinear(2, q, p);
  m.Omega_c_ok = Oc == Omega_c();
  m.Omega_c_prime_ok = Ocp == Omega_c_prime();
  m.omega_c_ok = oc == omega_c();
  Form PhiL = bilinear(4, psi_L(), psi_L());
  m.identity_ok = PhiL == half() * (Omega_c() + Omega_c_prime()) + half() * wedge(omega_c(), omega_c());
  return m;
}

namespace {

// real-parameter directions for a spinor with the given number of complex slots
std::vector<Spinor> real_directions(Signature sig, bool complex_coeffs) {
  std::vector<Spinor> d;
  for (int a = 0; a < 8; ++a) d.push_back(Spinor::plus_unit(sig, a));
  if (complex_coeffs)
    for (int a = 0; a < 8; ++a) d.push_back(I * Spinor::plus_unit(sig, a));
  return d;
}

FibreDim fibre_dim(const Spinor& psi, bool complex_coeffs, bool full_constraints) {
  auto dirs = real_directions(psi.sig, complex_coeffs);
  Spinor hat = conjugate(psi);
  std::vector<std::vector<Q2>> rows(full_constraints ? 3 : 1, std::vector<Q2>(dirs.size()));
  for (std::size_t c = 0; c < dirs.size(); ++c) {
    Scalar v = pairing(psi, dirs[c]);
    rows[0][c] = v.re();
    if (full_constraints) {
      rows[1][c] = v.im();
      rows[2][c] = pairing(hat, dirs[c]).re();
    }
  }
  QMat C(rows.size(), dirs.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < dirs.size(); ++c) C(r, c) = rows[r][c];
  QMat K = kernel(C);
  FibreDim f;
  f.kernel = static_cast<int>(K.cols());
  SMat img(70, K.cols());
  std::vector<Mask> slots;
  for (Mask m = 0; m < 256; ++m)
    if (popcount(m) == 4) slots.push_back(m);
  for (std::size_t k = 0; k < K.cols(); ++k) {
    Spinor dpsi;
    dpsi.sig = psi.sig;
    for (std::size_t c = 0; c < dirs.size(); ++c)
      if (!K(c, k).is_zero()) dpsi = dpsi + Scalar(K(c, k)) * dirs[c];
    Form b = bilinear(4, psi, dpsi);
    for (std::size_t s = 0; s < slots.size(); ++s) img(s, k) = b.coeff(slots[s]);
  }
  f.image = static_cast<int>(rank(realify_rows(img)));
  return f;
}

}  // namespace

FibreDim fibre_dimension_riemannian() { return fibre_dim(unit(Signature::Euclid), false, false); }

FibreDim fibre_dimension_lorentzian() { return fibre_dim(psi_L(), true, true); }

}  // namespace cayley
