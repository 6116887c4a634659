#include "cayley/urbantke.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace cayley {

namespace {

using C = std::complex<double>;

const int kEps3[6][4] = {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}, {0, 2, 1, -1}, {2, 1, 0, -1}, {1, 0, 2, -1}};

Scalar vol4(const Form& f) {
  if (f.grade() != 4 || f.dim() != 4) return Scalar();
  return f.coeff(Mask(0xF));
}

Eigen::Matrix4d eig(const RealMatrix& m) {
  Eigen::Matrix4d e;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) e(i, j) = m(i, j);
  return e;
}

}  // namespace

FormTriple make_triple(const fx::Triple& t, const std::vector<int>& labels, TripleMode mode) {
  FormTriple T;
  T.mode = mode;
  for (int i = 0; i < 3; ++i) T.B[i] = restrict_to(t[i], labels);
  return T;
}

SMat wedge_gram(const FormTriple& T) {
  SMat G(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) G(i, j) = vol4(wedge(T.B[i], T.B[j]));
  return G;
}

Reality reality_check(const FormTriple& T) {
  Reality r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Form w = wedge(T.B[i], T.B[j].conj());
      if (!w.is_zero()) {
        r.ok = false;
        r.i = i;
        r.j = j;
        r.witness = w;
        return r;
      }
    }
  return r;
}

RealMatrix to_real(const SMat& m) {
  RealMatrix r;
  r.n = static_cast<int>(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.a.push_back(m(i, j).re().to_double());
  return r;
}

std::array<std::array<C, 4>, 4> hodge4(const Form& B, const RealMatrix& g) {
  Eigen::Matrix4d G = eig(g), Gi = G.inverse();
  double vol = std::sqrt(std::abs(G.determinant()));
  C low[4][4] = {}, up[4][4] = {};
  for (const auto& [m, c] : B.terms()) {
    auto idx = mask_indices(m);
    low[idx[0]][idx[1]] = c.to_complex();
    low[idx[1]][idx[0]] = -c.to_complex();
  }
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) up[a][b] += Gi(a, c) * Gi(b, d) * low[c][d];
  std::array<std::array<C, 4>, 4> out{};
  for (int c = 0; c < 4; ++c)
    for (int d = 0; d < 4; ++d) {
      if (c == d) continue;
      C s = 0;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          std::array<int, 4> x{a, b, c, d};
          int sg = 1;
          bool rep = false;
          for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) {
              if (x[p] == x[q]) rep = true;
              if (x[p] > x[q]) sg = -sg;
            }
          if (!rep) s += double(sg) * up[a][b];
        }
      out[c][d] = 0.5 * vol * s;
    }
  return out;
}

UrbantkeResult urbantke_metric(const FormTriple& T) {
  for (const auto& b : T.B)
    if (b.dim() != 4 || (b.grade() != 2 && !b.is_zero())) throw std::invalid_argument("triple of 2-forms on R^4 expected");
  if (det(wedge_gram(T)).is_zero()) throw std::invalid_argument("degenerate triple: wedge Gram matrix is singular");
  if (T.mode == TripleMode::Lorentzian) {
    auto r = reality_check(T);
    if (!r.ok)
      throw std::invalid_argument("reality condition violated for pair (" + std::to_string(r.i + 1) + "," +
                                  std::to_string(r.j + 1) + ")");
  }
  UrbantkeResult u;
  u.density = SMat(4, 4);
  Scalar sixth = Scalar::frac(1, 6);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      Scalar s;
      for (const auto& p : kEps3) {
        Form t = wedge({interior_basis(m, T.B[p[0]]), interior_basis(n, T.B[p[1]]), T.B[p[2]]});
        s += Scalar(p[3]) * vol4(t);
      }
      s = sixth * s;
      if (T.mode == TripleMode::Lorentzian) s = Scalar::i() * s;
      u.density(m, n) = s;
    }
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      if (std::abs(u.density(m, n).im().to_double()) > 1e-12) throw std::runtime_error("Urbantke density is not real");
  RealMatrix gt = to_real(u.density);
  double d = eig(gt).determinant();
  if (d == 0) throw std::runtime_error("degenerate Urbantke density");
  double f = std::pow(std::abs(d), 1.0 / 6);
  u.g = gt;
  for (auto& x : u.g.a) x /= f;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(eig(u.g));
  for (int i = 0; i < 4; ++i) {
    double ev = es.eigenvalues()(i);
    if (ev > 1e-9) ++u.pos;
    else if (ev < -1e-9) ++u.neg;
  }
  // common self-duality factor
  const std::vector<std::pair<C, std::string>> cands =
      T.mode == TripleMode::Lorentzian ? std::vector<std::pair<C, std::string>>{{C(0, 1), "+i"}, {C(0, -1), "-i"}}
                                       : std::vector<std::pair<C, std::string>>{{C(1, 0), "+1"}, {C(-1, 0), "-1"}};
  u.selfdual_residual = INFINITY;
  for (const auto& [s, name] : cands) {
    double worst = 0;
    for (const auto& b : T.B) {
      auto h = hodge4(b, u.g);
      double scale = 0;
      for (const auto& [m, c] : b.terms()) scale = std::max(scale, std::abs(c.to_complex()));
      for (int c = 0; c < 4; ++c)
        for (int dd = c + 1; dd < 4; ++dd) {
          C v = b.coeff(indices_mask({c, dd})).to_complex();
          worst = std::max(worst, std::abs(h[c][dd] - s * v) / scale);
        }
    }
    if (worst < u.selfdual_residual) {
      u.selfdual_residual = worst;
      u.duality = name;
    }
  }
  return u;
}

double conformal_residual(const RealMatrix& g, const RealMatrix& ref) {
  Eigen::Matrix4d G = eig(g), R = eig(ref);
  double tr = (G * R.inverse()).trace();
  if (std::abs(tr) < 1e-300) return INFINITY;
  return (4.0 * G / tr - R).cwiseAbs().maxCoeff();
}

Reduction reduce_from_cayley(const CayleyForm& cf, const std::vector<int>& H, const fx::Triple& sigma_forms) {
  if (H.size() != 4) throw std::invalid_argument("H must list 4 directions");
  Reduction r;
  for (int a = 0; a < 8; ++a)
    if (std::find(H.begin(), H.end(), a) == H.end()) r.complement.push_back(a);
  std::vector<Vec> hv;
  for (int a : H) hv.push_back(basis_vec(8, a));
  r.calibration = is_calibrated(cf, hv, cf.metric);
  if (!r.calibration.calibrated) throw std::invalid_argument("H is not calibrated by the form");

  // sigma must be (anti-)self-dual on H for the induced metric
  SMat gH(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) gH(a, b) = cf.metric(H[a], H[b]);
  Form volH = Form::basis(4, {0, 1, 2, 3});
  for (const auto& s : sigma_forms) {
    Form loc = restrict_to(s, H);
    Form h = hodge(loc, gH, volH);
    bool sd = false;
    for (const Scalar& c : {Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()}) sd = sd || h == c * loc;
    if (!sd) throw std::invalid_argument("sigma is not self-dual on H");
  }

  TripleMode mode = TripleMode::Real;
  for (int i = 0; i < 3; ++i) {
    // raise both legs with the (diagonal) metric, then contract (u^v) _| Phi = v _| u _| Phi
    Form b(8, 2);
    for (const auto& [m, c] : sigma_forms[i].terms()) {
      auto idx = mask_indices(m);
      Scalar w = c / (cf.metric(idx[0], idx[0]) * cf.metric(idx[1], idx[1]));
      b += w * interior_basis(idx[1], interior_basis(idx[0], cf.Phi));
    }
    r.triple.B[i] = restrict_to(b, r.complement);
    if (!r.triple.B[i].is_real()) mode = TripleMode::Lorentzian;
  }
  r.triple.mode = mode;
  r.urbantke = urbantke_metric(r.triple);
  SMat ind(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) ind(a, b) = cf.metric(r.complement[a], r.complement[b]);
  r.induced = to_real(ind);
  r.conformal = conformal_residual(r.urbantke.g, r.induced);
  return r;
}

}  // namespace cayley
