#include "doctest.h"
#include "support.hpp"
#include "cayley/fixtures.hpp"

using namespace cayley;
using namespace testing;

namespace {

// E_ij antisymmetric (+1 at (i,j)), S_ij symmetric
IMat8 E(int i, int j, int s = 1) {
  IMat8 m{};
  m[i][j] = s;
  m[j][i] = -s;
  return m;
}
IMat8 S(int i, int j, int s = 1) {
  IMat8 m{};
  m[i][j] = m[j][i] = s;
  return m;
}
IMat8 sum(std::initializer_list<IMat8> ms) {
  IMat8 r{};
  for (const auto& m : ms)
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) r[i][j] += m[i][j];
  return r;
}

Spinor rnd_spinor(std::mt19937_64& rng, Signature s) {
  Spinor x;
  x.sig = s;
  for (auto& c : x.c) c = rnd(rng, true);
  return x;
}

}  // namespace

TEST_CASE("printed E matrices") {
  CHECK(unit_matrices(Algebra::O)[1] == sum({E(0, 1, -1), E(2, 7), E(3, 6, -1), E(4, 5)}));
  CHECK(unit_matrices(Algebra::Split)[1] == sum({S(0, 1), S(2, 7), S(3, 6, -1), S(4, 5)}));
  CHECK(unit_matrices(Algebra::Split)[7] == sum({E(0, 7, -1), E(1, 2), E(3, 4), E(5, 6, -1)}));
}

TEST_CASE("gamma matrices anticommute") {
  for (auto s : {Signature::Euclid, Signature::Split}) {
    const GammaSet& gs = gamma(s);
    SMat g1 = gs.g[1].dense(), g2 = gs.g[2].dense();
    CHECK((g1 * g2 + g2 * g1) == SMat(16, 16));
    for (int a = 0; a < 8; ++a) CHECK(gs.g[a].dense() * gs.g[a].dense() == Scalar(gs.eta[a]) * SMat::identity(16));
  }
  CHECK(gamma(Signature::Split).eta == std::array<int, 8>{1, -1, -1, -1, -1, 1, 1, 1});
}

TEST_CASE("gamma zero swaps the blocks") {
  Spinor one = fx::unit(Signature::Euclid);
  Spinor g = gamma_apply(0, one);
  CHECK(g.parity() == Parity::Minus);
  CHECK(g.c[8] == Scalar(1));
  CHECK(gamma_apply(0, g) == one);
}

TEST_CASE("Clifford law on random vectors") {
  std::mt19937_64 rng(20);
  for (auto s : {Signature::Euclid, Signature::Split}) {
    SMat eta = diag(std::vector<long>(gamma(s).eta.begin(), gamma(s).eta.end()));
    for (int n = 0; n < 100; ++n) {
      Vec v = rnd_vec(rng, 8);
      Spinor psi = rnd_spinor(rng, s);
      CHECK(gamma_action(v, gamma_action(v, psi)) == dot(v, eta, v) * psi);
    }
  }
}

TEST_CASE("bilinears of the identity spinor") {
  Spinor one = fx::unit(Signature::Euclid);
  Form Phi = bilinear(4, one, one);
  CHECK(Phi == wedge(fx::e(0), structure_3form(Algebra::O)) - structure_4form(Algebra::O));
  CHECK(Phi.coeff({1, 2, 3, 4}) == Scalar(-1));
  CHECK(bilinear(2, one, one).is_zero());
  Spinor sone = fx::unit(Signature::Split);
  CHECK(bilinear(4, sone, sone) ==
        wedge(fx::e(0), structure_3form(Algebra::Split)) - structure_4form(Algebra::Split));
  CHECK(bilinear(2, sone, sone).is_zero());
  CHECK(bilinear(0, one, one) == Form::scalar(8, Scalar(1)));
}

TEST_CASE("only B0 and B4 survive on a single chiral spinor") {
  std::mt19937_64 rng(21);
  for (int n = 0; n < 20; ++n) {
    Spinor psi = rnd_plus(rng, Signature::Euclid, true);
    for (int k : {1, 2, 3}) CHECK(bilinear(k, psi, psi).is_zero());
  }
}

TEST_CASE("bilinears are symmetric in the right degrees") {
  std::mt19937_64 rng(22);
  for (auto s : {Signature::Euclid, Signature::Split}) {
    Spinor a = rnd_plus(rng, s, true), b = rnd_plus(rng, s, true);
    CHECK(bilinear(4, a, b) == bilinear(4, b, a));
    CHECK(bilinear(2, a, b) == -bilinear(2, b, a));
    CHECK(pairing(a, b) == pairing(b, a));
  }
}

TEST_CASE("conjugation") {
  CHECK(conjugate(fx::unit(Signature::Euclid)) == fx::unit(Signature::Euclid));
  CHECK(pairing(conjugate(fx::psi_L()), fx::psi_L()).is_zero());
  std::mt19937_64 rng(23);
  Spinor x = rnd_plus(rng, Signature::Euclid, true);
  CHECK(conjugate(conjugate(x)) == x);
}

TEST_CASE("spin generators act compatibly on spinors and vectors") {
  for (auto s : {Signature::Euclid, Signature::Split}) {
    const auto& gens = spin_generators(s);
    REQUIRE(gens.spin.size() == 28);
    for (std::size_t k = 0; k < 28; ++k)
      for (int c = 0; c < 8; ++c) {
        // [S, G(e_c)] = G(A e_c)
        SMat G = gamma(s).g[c].dense();
        SMat lhs = gens.spin[k] * G - G * gens.spin[k];
        SMat rhs(16, 16);
        for (int a = 0; a < 8; ++a)
          if (!gens.vector[k](a, c).is_zero()) rhs = rhs + gens.vector[k](a, c) * gamma(s).g[a].dense();
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("vector generators fixing e0 span so(7)") {
  const auto& gens = spin_generators(Signature::Euclid);
  int n = 0;
  for (const auto& A : gens.vector) {
    bool fixes = true;
    for (int a = 0; a < 8; ++a) fixes = fixes && A(a, 0).is_zero();
    n += fixes;
  }
  CHECK(n == 21);
}

TEST_CASE("stabiliser dimensions") {
  CHECK(stabilizer_dim(fx::unit(Signature::Euclid)) == 21);
  CHECK(stabilizer_dim(fx::unit(Signature::Split)) == 21);
  CHECK(stabilizer_dim(fx::psi_L()) == 15);
  CHECK(stabilizer_dim(fx::psi_p()) == 15);
}
