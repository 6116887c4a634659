#include "cayley/form.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace cayley {

std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  for (int i = 0; i < 16; ++i)
    if (m & (1u << i)) out.push_back(i);
  return out;
}

Mask indices_mask(const std::vector<int>& idx) {
  Mask m = 0;
  for (int i : idx) m |= static_cast<Mask>(1u << i);
  return m;
}

int popcount(Mask m) { return std::popcount(static_cast<unsigned>(m)); }

namespace {

// sign of the shuffle putting (I, J) in increasing order; 0 if they overlap
int merge_sign(Mask I, Mask J) {
  if (I & J) return 0;
  int inv = 0;
  for (Mask j = J; j; j &= j - 1) {
    int b = std::countr_zero(static_cast<unsigned>(j));
    inv += popcount(static_cast<Mask>(I >> (b + 1)));
  }
  return (inv & 1) ? -1 : 1;
}

// sign of the permutation sorting idx, 0 on repeats
int sort_sign(std::vector<int> idx) {
  int s = 1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) s = -s;
    }
  return s;
}

void check_same(const Form& a, const Form& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("form dimension mismatch");
}

}  // namespace

Form::Form(int dim, int grade) : dim_(dim), grade_(grade) {
  if (dim < 0 || dim > 8) throw std::invalid_argument("form dimension out of range");
  if (grade < 0) throw std::invalid_argument("negative grade");
}

Form Form::basis(int dim, std::initializer_list<int> idx, const Scalar& c) {
  return basis(dim, std::vector<int>(idx), c);
}

Form Form::basis(int dim, const std::vector<int>& idx, const Scalar& c) {
  Form f(dim, static_cast<int>(idx.size()));
  for (int i : idx)
    if (i < 0 || i >= dim) throw std::invalid_argument("basis index out of range");
  int s = sort_sign(idx);
  if (s != 0) f.add_term(indices_mask(idx), s > 0 ? c : -c);
  return f;
}

Form Form::scalar(int dim, const Scalar& c) {
  Form f(dim, 0);
  f.add_term(0, c);
  return f;
}

Form Form::one_form(const Vec& v) {
  Form f(static_cast<int>(v.size()), 1);
  for (std::size_t i = 0; i < v.size(); ++i) f.add_term(static_cast<Mask>(1u << i), v[i]);
  return f;
}

Scalar Form::coeff(Mask m) const {
  auto it = c_.find(m);
  return it == c_.end() ? Scalar() : it->second;
}

Scalar Form::coeff(const std::vector<int>& idx) const {
  int s = sort_sign(idx);
  if (s == 0) return Scalar();
  Scalar v = coeff(indices_mask(idx));
  return s > 0 ? v : -v;
}

void Form::add_term(Mask m, const Scalar& v) {
  if (v.is_zero()) return;
  if (popcount(m) != grade_) throw std::invalid_argument("term grade mismatch");
  auto [it, fresh] = c_.emplace(m, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) c_.erase(it);
  }
}

Form Form::conj() const {
  Form f(dim_, grade_);
  for (const auto& [m, v] : c_) f.c_.emplace(m, v.conj());
  return f;
}

Form Form::real_part() const {
  Form f(dim_, grade_);
  for (const auto& [m, v] : c_) f.add_term(m, Scalar(v.re()));
  return f;
}

Form Form::imag_part() const {
  Form f(dim_, grade_);
  for (const auto& [m, v] : c_) f.add_term(m, Scalar(v.im()));
  return f;
}

bool Form::is_real() const {
  return std::all_of(c_.begin(), c_.end(), [](const auto& t) { return t.second.is_real(); });
}

Form Form::operator-() const {
  Form f(dim_, grade_);
  for (const auto& [m, v] : c_) f.c_.emplace(m, -v);
  return f;
}

Form& Form::operator+=(const Form& o) {
  check_same(*this, o);
  if (c_.empty()) grade_ = o.grade_;
  for (const auto& [m, v] : o.c_) add_term(m, v);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  check_same(*this, o);
  if (c_.empty()) grade_ = o.grade_;
  for (const auto& [m, v] : o.c_) add_term(m, -v);
  return *this;
}

Form operator*(const Scalar& s, const Form& a) {
  Form f(a.dim_, a.grade_);
  if (s.is_zero()) return f;
  for (const auto& [m, v] : a.c_) f.c_.emplace(m, s * v);
  return f;
}

Form wedge(const Form& a, const Form& b) {
  check_same(a, b);
  Form f(a.dim(), a.grade() + b.grade());
  if (f.grade() > a.dim()) return Form(a.dim(), a.grade() + b.grade());
  for (const auto& [ma, va] : a.terms())
    for (const auto& [mb, vb] : b.terms()) {
      int s = merge_sign(ma, mb);
      if (s == 0) continue;
      Scalar p = va * vb;
      f.add_term(static_cast<Mask>(ma | mb), s > 0 ? p : -p);
    }
  return f;
}

Form wedge(std::initializer_list<Form> fs) {
  if (fs.size() == 0) throw std::invalid_argument("empty wedge");
  auto it = fs.begin();
  Form r = *it;
  for (++it; it != fs.end(); ++it) r = wedge(r, *it);
  return r;
}

Form interior(const Vec& v, const Form& a) {
  if (a.grade() == 0) throw std::invalid_argument("interior product of a 0-form");
  if (static_cast<int>(v.size()) != a.dim()) throw std::invalid_argument("vector dimension mismatch");
  Form f(a.dim(), a.grade() - 1);
  for (const auto& [m, c] : a.terms())
    for (Mask r = m; r; r &= r - 1) {
      int i = std::countr_zero(static_cast<unsigned>(r));
      if (v[i].is_zero()) continue;
      int pos = popcount(static_cast<Mask>(m & ((1u << i) - 1)));
      Scalar t = v[i] * c;
      f.add_term(static_cast<Mask>(m & ~(1u << i)), (pos & 1) ? -t : t);
    }
  return f;
}

Form interior_basis(int i, const Form& a) { return interior(basis_vec(a.dim(), i), a); }

Scalar evaluate(const Form& a, const std::vector<Vec>& vs) {
  if (static_cast<int>(vs.size()) != a.grade()) throw std::invalid_argument("wrong number of vectors");
  Form r = a;
  for (const auto& v : vs) r = interior(v, r);
  return r.coeff(Mask(0));
}

Scalar top_coeff(const Form& a) {
  if (a.grade() != a.dim()) throw std::invalid_argument("not a top form");
  return a.coeff(static_cast<Mask>((1u << a.dim()) - 1));
}

namespace {

Scalar minor_det(const SMat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  SMat s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
  if (rows.empty()) return Scalar(1);
  return det(s);
}

bool is_diagonal(const SMat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  return true;
}

std::vector<Mask> masks_of_grade(int dim, int k) {
  std::vector<Mask> out;
  for (unsigned m = 0; m < (1u << dim); ++m)
    if (popcount(static_cast<Mask>(m)) == k) out.push_back(static_cast<Mask>(m));
  return out;
}

}  // namespace

Form hodge(const Form& a, const SMat& g, const Form& orientation) {
  int n = a.dim();
  if (static_cast<int>(g.rows()) != n || static_cast<int>(g.cols()) != n)
    throw std::invalid_argument("metric shape mismatch");
  Scalar o = top_coeff(orientation);
  if (o.is_zero() || !o.is_real()) throw std::invalid_argument("orientation must be a real nonzero top form");
  Scalar dg = det(g);
  if (dg.is_zero()) throw std::invalid_argument("degenerate metric");
  if (!dg.is_real()) throw std::invalid_argument("complex metric");
  Q2 ad = dg.re().sign() < 0 ? -dg.re() : dg.re();
  auto root = ad.sqrt();
  if (!root) throw std::domain_error("volume factor outside the scalar field");
  Scalar vol(*root);
  if (o.re().sign() < 0) vol = -vol;
  SMat gi = *inverse(g);
  bool dia = is_diagonal(g);
  Mask full = static_cast<Mask>((1u << n) - 1);
  Form out(n, n - a.grade());
  auto cands = masks_of_grade(n, a.grade());
  for (const auto& [K, c] : a.terms()) {
    auto kidx = mask_indices(K);
    for (Mask I : cands) {
      if (dia && I != K) continue;
      Scalar mnr = minor_det(gi, mask_indices(I), kidx);
      if (mnr.is_zero()) continue;
      Mask rest = static_cast<Mask>(full & ~I);
      int s = merge_sign(I, rest);
      Scalar t = vol * c * mnr;
      out.add_term(rest, s > 0 ? t : -t);
    }
  }
  return out;
}

Form lower(const Vec& v, const SMat& g) {
  Vec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!g(i, j).is_zero() && !v[j].is_zero()) w[i] += g(i, j) * v[j];
  return Form::one_form(w);
}

Vec raise(const Form& alpha, const SMat& g) {
  if (alpha.grade() != 1) throw std::invalid_argument("raise expects a 1-form");
  auto gi = inverse(g);
  if (!gi) throw std::invalid_argument("degenerate metric");
  int n = alpha.dim();
  Vec v(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar c = alpha.coeff(static_cast<Mask>(1u << j));
      if (!c.is_zero() && !(*gi)(i, j).is_zero()) v[i] += (*gi)(i, j) * c;
    }
  return v;
}

Form lie_act(const SMat& A, const Form& a) {
  int n = a.dim();
  if (static_cast<int>(A.rows()) != n) throw std::invalid_argument("endomorphism dimension mismatch");
  Form out(n, a.grade());
  for (const auto& [m, c] : a.terms()) {
    auto idx = mask_indices(m);
    for (std::size_t j = 0; j < idx.size(); ++j)
      for (int k = 0; k < n; ++k) {
        const Scalar& x = A(idx[j], k);
        if (x.is_zero()) continue;
        auto rep = idx;
        rep[j] = k;
        int s = sort_sign(rep);
        if (s == 0) continue;
        Scalar t = x * c;
        out.add_term(indices_mask(rep), s > 0 ? -t : t);
      }
  }
  return out;
}

Form pullback(const SMat& A, const Form& a) {
  int n = a.dim();
  std::vector<Form> img;
  for (int i = 0; i < n; ++i) {
    Vec row(n);
    for (int j = 0; j < n; ++j) row[j] = A(i, j);
    img.push_back(Form::one_form(row));
  }
  Form out(n, a.grade());
  for (const auto& [m, c] : a.terms()) {
    Form t = Form::scalar(n, c);
    for (int i : mask_indices(m)) t = wedge(t, img[i]);
    out += t;
  }
  return out;
}

Form restrict_to(const Form& a, const std::vector<int>& labels) {
  int k = static_cast<int>(labels.size());
  Form out(k, a.grade());
  for (const auto& [m, c] : a.terms()) {
    std::vector<int> loc;
    bool ok = true;
    for (int i : mask_indices(m)) {
      auto it = std::find(labels.begin(), labels.end(), i);
      if (it == labels.end()) {
        ok = false;
        break;
      }
      loc.push_back(static_cast<int>(it - labels.begin()));
    }
    if (!ok) continue;
    int s = sort_sign(loc);
    out.add_term(indices_mask(loc), s > 0 ? c : -c);
  }
  return out;
}

Form embed(const Form& a, int dim, const std::vector<int>& labels) {
  Form out(dim, a.grade());
  for (const auto& [m, c] : a.terms()) {
    std::vector<int> amb;
    for (int i : mask_indices(m)) amb.push_back(labels.at(i));
    int s = sort_sign(amb);
    out.add_term(indices_mask(amb), s > 0 ? c : -c);
  }
  return out;
}

Vec basis_vec(int dim, int i) {
  Vec v(dim);
  v.at(i) = Scalar(1);
  return v;
}

SMat diag(const std::vector<long>& d) {
  SMat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = Scalar(d[i]);
  return m;
}

Scalar dot(const Vec& x, const SMat& g, const Vec& y) {
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero() && !g(i, j).is_zero()) s += x[i] * g(i, j) * y[j];
  }
  return s;
}

std::string describe(const Form& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")e";
    for (int i : mask_indices(m)) os << i;
  }
  return os.str();
}

}  // namespace cayley
