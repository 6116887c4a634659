#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "cayley/matrix.hpp"
#include "cayley/scalar.hpp"

namespace cayley {

using Mask = std::uint16_t;
using Vec = std::vector<Scalar>;

std::vector<int> mask_indices(Mask m);
Mask indices_mask(const std::vector<int>& idx);
int popcount(Mask m);

// Alternating k-form with exact coefficients, keyed by the bitmask of its
// strictly increasing multi-index. Zero coefficients are never stored.
class Form {
 public:
  Form() = default;
  Form(int dim, int grade);

  // e^{i0} ^ e^{i1} ^ ... with any index order; repeated index gives zero
  static Form basis(int dim, std::initializer_list<int> idx, const Scalar& c = Scalar(1));
  static Form basis(int dim, const std::vector<int>& idx, const Scalar& c = Scalar(1));
  static Form scalar(int dim, const Scalar& c);
  static Form one_form(const Vec& v);

  int dim() const { return dim_; }
  int grade() const { return grade_; }
  const std::map<Mask, Scalar>& terms() const { return c_; }
  std::size_t size() const { return c_.size(); }
  bool is_zero() const { return c_.empty(); }

  Scalar coeff(Mask m) const;
  Scalar coeff(const std::vector<int>& idx) const;  // sign-adjusted
  void add_term(Mask m, const Scalar& v);

  Form conj() const;
  Form real_part() const;
  Form imag_part() const;
  bool is_real() const;

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Scalar& s, const Form& a);
  friend bool operator==(const Form& a, const Form& b) {
    return a.dim_ == b.dim_ && (a.c_.empty() || b.c_.empty() || a.grade_ == b.grade_) && a.c_ == b.c_;
  }

 private:
  int dim_ = 0, grade_ = 0;
  std::map<Mask, Scalar> c_;
};

Form wedge(const Form& a, const Form& b);
Form wedge(std::initializer_list<Form> fs);

// v inserted in the first slot
Form interior(const Vec& v, const Form& a);
Form interior_basis(int i, const Form& a);

// a(v_1, ..., v_k) with the determinant convention e^{12}(e_1, e_2) = 1
Scalar evaluate(const Form& a, const std::vector<Vec>& vs);

Scalar top_coeff(const Form& a);

// Hodge star for metric g; orientation is a nonzero top form whose sign is used.
// Requires sqrt|det g| to lie in the field.
Form hodge(const Form& a, const SMat& g, const Form& orientation);

Form lower(const Vec& v, const SMat& g);
Vec raise(const Form& alpha, const SMat& g);

// (A.a)(x_1..x_k) = -sum_j a(.., A x_j, ..)
Form lie_act(const SMat& A, const Form& a);
// e^i -> sum_j A(i,j) e^j
Form pullback(const SMat& A, const Form& a);

// Re-index onto a smaller space: labels[k] is the ambient index of local k.
// Terms with a leg outside labels are dropped.
Form restrict_to(const Form& a, const std::vector<int>& labels);
Form embed(const Form& a, int dim, const std::vector<int>& labels);

Vec basis_vec(int dim, int i);
SMat diag(const std::vector<long>& d);
Scalar dot(const Vec& x, const SMat& g, const Vec& y);

std::string describe(const Form& a);

}  // namespace cayley
