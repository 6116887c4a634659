#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cayley/form.hpp"
#include "cayley/matrix.hpp"

namespace cayley {

enum class Algebra { O, Split };

using IMat8 = std::array<std::array<int, 8>, 8>;

// Left multiplication by the basis units: E[0] = identity, E[a] for a = 1..7.
const std::array<IMat8, 8>& unit_matrices(Algebra alg);
// Diagonal of the algebra pairing: (+,+,..) or (+,-,-,-,-,+,+,+).
const std::array<int, 8>& pairing_signs(Algebra alg);
SMat pairing_matrix(Algebra alg);

struct Octonion {
  Algebra alg = Algebra::O;
  std::array<Scalar, 8> q{};

  static Octonion unit(Algebra alg, int a);
  Vec vec() const { return Vec(q.begin(), q.end()); }
  static Octonion from_vec(Algebra alg, const Vec& v);
  bool is_imaginary() const { return q[0].is_zero(); }
  friend bool operator==(const Octonion& x, const Octonion& y) { return x.alg == y.alg && x.q == y.q; }
};

Octonion oct_mul(const Octonion& x, const Octonion& y);
Octonion oct_conj(const Octonion& x);
Octonion oct_add(const Octonion& x, const Octonion& y);
Octonion oct_scale(const Scalar& s, const Octonion& x);
Scalar oct_pairing(const Octonion& x, const Octonion& y);
inline Scalar oct_norm2(const Octonion& x) { return oct_pairing(x, x); }

// The associative 3-form on the imaginary directions 1..7, as an 8d form.
Form structure_3form(Algebra alg);
// Its coassociative partner (printed dual), as an 8d form.
Form structure_4form(Algebra alg);

// 7d forms use local indices 0..6 for the imaginary directions 1..7.
extern const std::vector<int> kImaginaryLabels;
Form to7(const Form& a8);
Form to8(const Form& a7);

// (u x v, w) = phi(u, v, w)
Octonion cross(const Octonion& u, const Octonion& v);

Vec triple_cross(const Vec& u, const Vec& v, const Vec& w, const Form& Phi, const SMat& g);

struct MetricFrom3Form {
  SMat density;                // g~
  Scalar density_det;          // det g~
  std::optional<SMat> metric;  // g~ / |det g~|^(1/9) when representable
  Form orientation;            // standard volume on R^7
  Inertia signature;
};
MetricFrom3Form metric_from_3form(const Form& phi7);

using MulTable = std::vector<std::vector<Vec>>;
MulTable algebra_from_cayley(const Form& Phi, const Vec& e, const SMat& g);

struct UnitSplit {
  Form phi_e;
  Form psi_e;
  int eps = 0;
};
UnitSplit split_by_unit_vector(const Form& Phi, const Vec& e, const SMat& g);

}  // namespace cayley
