#include "doctest.h"
#include "support.hpp"
#include "cayley/deformations.hpp"

using namespace cayley;
using namespace testing;
using fx::half;

namespace {
const Scalar I = Scalar::i();
}

TEST_CASE("Riemannian fibre tangent") {
  Form Phi = build_family(Family::RiemannianReal).Phi;
  CHECK(riemannian_fibre_tangent(Vec(7), Phi).is_zero());
  for (int k = 0; k < 7; ++k) {
    Vec Y(7), Y2(7);
    Y[k] = Scalar(1);
    Y2[k] = Scalar(2);
    CHECK(fibre_first_order(Y) == riemannian_fibre_tangent(Y2, Phi));
  }
}

TEST_CASE("Riemannian perturbations are orthogonal to the seed") {
  std::mt19937_64 rng(50);
  Spinor one = fx::unit(Signature::Euclid);
  for (int n = 0; n < 10; ++n) {
    Vec Y = rnd_vec(rng, 7);
    Vec v(8);
    for (int k = 0; k < 7; ++k) v[k + 1] = Y[k];
    CHECK(pairing(one, Spinor::plus(Signature::Euclid, v)).is_zero());
  }
}

TEST_CASE("eigenspace bilinears") {
  Spinor one = fx::unit(Signature::Split), e4 = Spinor::plus_unit(Signature::Split, 4);
  CHECK(eigenspace_bilinear(true, one + e4) == fx::Omega_plus());
  CHECK(eigenspace_bilinear(false, one - e4) == fx::Omega_minus());
  CHECK(eigenspace_bilinear(true, one - e4) == half() * wedge(fx::omega_r(), fx::omega_r()));
  std::mt19937_64 rng(51);
  for (int n = 0; n < 10; ++n)
    for (int s : {1, -1}) {
      Vec v(8);
      for (int k = 0; k < 4; ++k) {
        v[k] = rnd(rng);
        v[k + 4] = Scalar(s) * v[k];
      }
      Spinor X = Spinor::plus(Signature::Split, v);
      auto d = split_eigen(X);
      CHECK(d.eigen == s);
      for (bool p : {true, false}) CHECK(eigenspace_bilinear(p, X) == eigenspace_closed(p, X));
    }
}

TEST_CASE("mixed eigenvector is rejected") {
  Vec v(8);
  v[0] = Scalar(1);
  CHECK_THROWS(split_eigen(Spinor::plus(Signature::Split, v)));
}

TEST_CASE("Lorentzian perturbations") {
  LorentzPerturbation p;
  p.a = Scalar(1);
  CHECK(lorentzian_tangent_bilinear(p) == I * (fx::Omega_plus() + fx::Omega_minus()));
  for (int k = 0; k < 13; ++k) CHECK(lorentzian_tangent_bilinear(unit_perturbation(k)) == lorentzian_tangent_closed(unit_perturbation(k)));
  Spinor d = perturbation_spinor(p);
  CHECK(pairing(fx::psi_L(), d).is_zero());
  // only the real part of the second constraint is linearised
  CHECK(pairing(conjugate(fx::psi_L()), d).re().is_zero());
}

TEST_CASE("Lorentzian tangent map on random rational points") {
  std::mt19937_64 rng(52);
  for (int n = 0; n < 15; ++n) {
    LorentzPerturbation p;
    p.a = rnd(rng);
    for (auto& v : p.xi) v = rnd(rng);
    for (auto& v : p.eta) v = rnd(rng);
    Form b = lorentzian_tangent_bilinear(p);
    CHECK(b == lorentzian_tangent_closed(p));
    auto d = decompose_wrt_K(b);
    CHECK(d.resums);
    CHECK(d.re20 + d.re02 + d.re_r + I * (d.im20 + d.im02 + d.im_r) == b);
  }
}

TEST_CASE("decomposition rejects forms outside the span") {
  CHECK_THROWS(decompose_wrt_K(fx::F("0123")));
}

TEST_CASE("sweep dimensions") {
  auto s = sweep_dimensions();
  CHECK(s.total == 13);
  CHECK(s.re == 12);
  CHECK(s.im == 13);
  CHECK(s.re20 == 6);
  CHECK(s.re02 == 6);
  CHECK(s.im20 == 6);
  CHECK(s.im02 == 6);
  CHECK(s.im_r == 1);
  CHECK(s.bijection);
}

TEST_CASE("leg types") {
  CHECK(k_leg_types(fx::Omega_plus() + fx::Omega_minus()) == std::set<std::pair<int, int>>{{4, 0}, {0, 4}});
  std::array<Scalar, 3> x{Scalar(1), Scalar(), Scalar()};
  CHECK(k_leg_types(xi10_omega_plus(x)) == std::set<std::pair<int, int>>{{2, 0}});
  CHECK(k_leg_types(xi01_omega_minus(x)) == std::set<std::pair<int, int>>{{0, 2}});
  CHECK(k_leg_types(fx::omega_r()) == std::set<std::pair<int, int>>{{1, 1}});
  CHECK(k_leg_types(wedge(fx::omega_r(), xi10_omega_plus(x))) == std::set<std::pair<int, int>>{{3, 1}});
  CHECK(k_leg_types(wedge(fx::omega_r(), xi01_omega_minus(x))) == std::set<std::pair<int, int>>{{1, 3}});
}

TEST_CASE("metric does not move to first order") {
  Form L = build_family(Family::Lorentzian).Phi;
  for (int k = 0; k < 13; ++k) CHECK(compat_first_order(L, lorentzian_tangent_bilinear(unit_perturbation(k))).is_zero());
  // a rescaling does move it
  CHECK(!compat_first_order(L, L).is_zero());
}
