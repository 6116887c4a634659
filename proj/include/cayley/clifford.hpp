#pragma once

#include <array>
#include <string>
#include <vector>

#include "cayley/form.hpp"
#include "cayley/octonion.hpp"

namespace cayley {

enum class Signature { Euclid, Split };  // (8,0) and (4,4)

Algebra algebra_of(Signature s);
std::string to_string(Signature s);

// Each generator is a signed permutation: row i has its only nonzero entry
// sign[i] in column col[i].
struct SignedPerm {
  std::array<int, 16> col{};
  std::array<int, 16> sign{};
  SMat dense() const;
};

struct GammaSet {
  Signature sig = Signature::Euclid;
  std::array<int, 8> eta{};
  std::array<SignedPerm, 8> g{};
};

const GammaSet& gamma(Signature s);

enum class Parity { Plus, Minus, Mixed, Zero };

struct Spinor {
  Signature sig = Signature::Euclid;
  std::array<Scalar, 16> c{};

  // upper block only
  static Spinor plus(Signature s, const Vec& upper);
  static Spinor plus_unit(Signature s, int a) { return plus(s, basis_vec(8, a)); }
  Parity parity() const;
  bool is_zero() const;
  friend bool operator==(const Spinor& x, const Spinor& y) { return x.sig == y.sig && x.c == y.c; }
};

Spinor operator+(const Spinor& x, const Spinor& y);
Spinor operator-(const Spinor& x, const Spinor& y);
Spinor operator*(const Scalar& s, const Spinor& x);

Spinor gamma_apply(int a, const Spinor& psi);
Spinor gamma_action(const Vec& v, const Spinor& psi);

// Invariant bilinear pairing, no conjugation.
Scalar pairing(const Spinor& psi, const Spinor& phi);

// Component on a_1 < ... < a_k is <psi, G_{a1} ... G_{ak} phi>.
Form bilinear(int k, const Spinor& psi, const Spinor& phi);

Spinor conjugate(const Spinor& psi);

struct SpinGenerators {
  std::vector<std::pair<int, int>> ab;
  std::vector<SMat> spin;    // (1/4)[G_a, G_b], 16x16
  std::vector<SMat> vector;  // e_c -> eta_bc e_a - eta_ac e_b, 8x8
};
const SpinGenerators& spin_generators(Signature s);

struct Stabilizer {
  int dim = 0;
  QMat basis;  // 28 x dim, real coefficients on the generators
};
Stabilizer stabilizer(const Spinor& psi);
inline int stabilizer_dim(const Spinor& psi) { return stabilizer(psi).dim; }

Spinor apply(const SMat& m, const Spinor& psi);

}  // namespace cayley
