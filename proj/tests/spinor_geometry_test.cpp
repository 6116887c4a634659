#include "doctest.h"
#include "support.hpp"
#include "cayley/fixtures.hpp"
#include "cayley/spinor_geometry.hpp"

using namespace cayley;
using namespace testing;
using fx::half;

namespace {

const Scalar I = Scalar::i();

Vec v8(std::initializer_list<std::pair<int, Scalar>> t) {
  Vec v(8);
  for (const auto& [a, c] : t) v[a] += c;
  return v;
}

SMat cols(std::initializer_list<Vec> vs) {
  std::vector<Vec> c(vs);
  SMat m(8, c.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    for (int i = 0; i < 8; ++i) m(i, j) = c[j][i];
  return m;
}

}  // namespace

TEST_CASE("purity") {
  CHECK(is_pure(fx::psi_p()));
  CHECK(!is_pure(fx::unit(Signature::Euclid)));
  CHECK(is_pure(fx::psi_plus()));
  CHECK(is_pure(fx::psi_minus()));
  CHECK(!is_pure(fx::psi_L()));
}

TEST_CASE("purity agrees with the annihilator dimension") {
  std::mt19937_64 rng(30);
  for (auto s : {Signature::Euclid, Signature::Split})
    for (int n = 0; n < 30; ++n) {
      Spinor psi = rnd_plus(rng, s, true);
      bool b0 = bilinear(0, psi, psi).is_zero();
      CHECK(b0 == is_pure(psi));
      CHECK((annihilator(psi).dim == 4) == b0);
      CHECK((annihilator(psi).dim == 0) == !b0);
    }
}

TEST_CASE("annihilators") {
  SMat a = cols({v8({{4, 1}, {0, I}}), v8({{1, 1}, {5, I}}), v8({{2, 1}, {6, I}}), v8({{3, 1}, {7, I}})});
  NullSubspace m = annihilator(fx::psi_p());
  CHECK(m.dim == 4);
  CHECK(same_span(m.basis, a));
  SMat b = cols({v8({{7, 1}, {0, I}}), v8({{1, 1}, {2, -I}}), v8({{3, 1}, {4, -I}}), v8({{5, 1}, {6, I}})});
  CHECK(same_span(annihilator(fx::psi_p_split()).basis, b));
  CHECK(annihilator(fx::unit(Signature::Euclid)).dim == 0);
  for (const auto& psi : {fx::psi_p(), fx::psi_p_split(), fx::psi_plus(), fx::pair_p()}) {
    NullSubspace n = annihilator(psi);
    for (std::size_t j = 0; j < n.basis.cols(); ++j) {
      Vec v(8);
      for (int i = 0; i < 8; ++i) v[i] = n.basis(i, j);
      CHECK(gamma_action(v, psi).is_zero());
    }
    SMat g = vector_metric(psi.sig);
    CHECK((n.basis.transpose() * g * n.basis) == SMat(4, 4));
  }
}

TEST_CASE("real index") {
  CHECK(real_index(fx::psi_p_split()) == 0);
  CHECK(real_index(fx::psi_plus()) == 4);
  CHECK(real_index(fx::pair_p()) == 2);
  CHECK(real_index(fx::pair_p_prime()) == 2);
}

TEST_CASE("intersection types") {
  CHECK(intersection_type(fx::psi_p(), conjugate(fx::psi_p())).common == 0);
  CHECK(intersection_type(fx::psi_p(), Scalar(2) * fx::psi_p()).common == 4);
  Spinor a = half() * (fx::unit(Signature::Split) + I * Spinor::plus_unit(Signature::Split, 7));
  Spinor b = (half() * I) * (Spinor::plus_unit(Signature::Split, 4) + I * Spinor::plus_unit(Signature::Split, 3));
  REQUIRE(is_pure(a));
  REQUIRE(is_pure(b));
  auto t = intersection_type(a, b);
  CHECK(t.common == 2);
  CHECK(!t.witness.is_zero());
  CHECK(is_pure(a + b));
}

TEST_CASE("complex structure from a pure spinor") {
  auto d = structure_from_pure(fx::psi_p());
  CHECK(d.omega == fx::F("15") + fx::F("26") + fx::F("37") + fx::F("40"));
  CHECK(d.Omega == fx::Omega_std());
  CHECK(d.J * d.J == Scalar(-1) * SMat::identity(8));
  CHECK(is_decomposable4(d.Omega));
  SMat g = vector_metric(Signature::Euclid);
  CHECK(d.J.transpose() * g * d.J == g);
  auto s = structure_from_pure(fx::psi_p_split());
  CHECK(s.omega == fx::F("12") + fx::F("34") + fx::F("56") + fx::F("70"));
  CHECK(s.J * s.J == Scalar(-1) * SMat::identity(8));
}

TEST_CASE("paracomplex structure from a real pair") {
  auto d = structure_from_real_pair(fx::psi_plus(), fx::psi_minus());
  CHECK(d.Omega_plus == wedge({fx::F("4") + fx::F("0"), fx::F("1") + fx::F("5"), fx::F("2") + fx::F("6"),
                               fx::F("3") + fx::F("7")}));
  CHECK(d.omega_r == fx::F("15") + fx::F("26") + fx::F("37") + fx::F("40"));
  CHECK(d.K * d.K == SMat::identity(8));
  SMat g = vector_metric(Signature::Split);
  CHECK(d.K.transpose() * g * d.K == Scalar(-1) * g);
  // acting on covectors it is the printed swap
  CHECK(g * d.K * g == fx::K_matrix());
  CHECK(is_decomposable4(d.Omega_plus));
  CHECK(is_decomposable4(d.Omega_minus));
}

TEST_CASE("structure constructors reject bad input") {
  CHECK_THROWS(structure_from_pure(fx::unit(Signature::Euclid)));
  CHECK_THROWS(structure_from_real_pair(fx::psi_plus(), fx::psi_p_split()));
}
