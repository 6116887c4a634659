#include "doctest.h"
#include "support.hpp"
#include "cayley/fixtures.hpp"
#include "cayley/octonion.hpp"

using namespace cayley;
using namespace testing;
using fx::F;

TEST_CASE("scalar field arithmetic") {
  Scalar r2 = Scalar::sqrt2(), i = Scalar::i();
  CHECK(r2 * r2 == Scalar(2));
  CHECK(i * i == Scalar(-1));
  Scalar z(mpq_class(1), mpq_class(2), mpq_class(3), mpq_class(4));
  CHECK(z.conj() == Scalar(mpq_class(1), mpq_class(2), mpq_class(-3), mpq_class(-4)));
  CHECK(!z.is_real());
  CHECK((z + z.conj()).is_real());
  CHECK(Scalar::frac(2, 4) == Scalar::frac(1, 2));
}

TEST_CASE("scalar field laws on random elements") {
  std::mt19937_64 rng(1);
  for (int n = 0; n < 200; ++n) {
    Scalar a = rnd(rng, true, true), b = rnd(rng, true, true), c = rnd(rng, true, true);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).conj() == a.conj() * b.conj());
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
  }
}

TEST_CASE("surd square roots") {
  CHECK(Q2(mpq_class(3), mpq_class(2)).sqrt() == Q2(1, 1));  // 3 + 2 sqrt2 = (1 + sqrt2)^2
  CHECK(!Q2(3).sqrt());
  CHECK(Q2(mpq_class(9, 4)).sqrt() == Q2(mpq_class(3, 2)));
}

TEST_CASE("wedge basics") {
  CHECK(wedge(fx::e(0), fx::e(1)) == F("01"));
  CHECK(wedge(F("01"), F("02")).is_zero());
  CHECK(F("10") == -F("01"));
  CHECK(wedge(F("0123"), F("4567")) == F("01234567"));
  CHECK(wedge(F("01234"), F("567")).grade() == 8);
}

TEST_CASE("omega wedge omega") {
  Form w = fx::omega_std();
  Form ww = wedge(w, w);
  // 2 (e1526 + e1537 + e1540 + e2637 + e2640 + e3740)
  Form want = F("1526") + F("1537") + F("1540") + F("2637") + F("2640") + F("3740");
  CHECK(ww == Scalar(2) * want);
}

TEST_CASE("wedge is graded commutative and associative") {
  std::mt19937_64 rng(2);
  for (int n = 0; n < 40; ++n) {
    Form a = rnd_form(rng, 8, 2), b = rnd_form(rng, 8, 3), c = rnd_form(rng, 8, 1, 3);
    CHECK(wedge(a, b) == wedge(b, a));
    Form d = rnd_form(rng, 8, 1, 3);
    CHECK(wedge(c, d) == -wedge(d, c));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("interior product") {
  CHECK(interior_basis(0, F("0123")) == F("123"));
  CHECK(interior_basis(5, structure_3form(Algebra::O)) == F("67") + F("41") - F("23"));
}

TEST_CASE("interior is an antiderivation") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 40; ++n) {
    Vec v = rnd_vec(rng, 8, true);
    Form a = rnd_form(rng, 8, 3, 5, true), b = rnd_form(rng, 8, 2, 5, true);
    CHECK(interior(v, wedge(a, b)) == wedge(interior(v, a), b) - wedge(a, interior(v, b)));
    CHECK(interior(v, interior(v, a)).is_zero());
  }
}

TEST_CASE("evaluation uses the determinant convention") {
  CHECK(evaluate(F("12"), {basis_vec(8, 1), basis_vec(8, 2)}) == Scalar(1));
  CHECK(evaluate(F("12"), {basis_vec(8, 2), basis_vec(8, 1)}) == Scalar(-1));
  CHECK(top_coeff(F("01234567", Scalar(3))) == Scalar(3));
}

TEST_CASE("hodge star on the 3-forms") {
  Form orient = Form::basis(7, {0, 1, 2, 3, 4, 5, 6});
  CHECK(to8(hodge(to7(structure_3form(Algebra::O)), diag(std::vector<long>(7, 1)), orient)) ==
        structure_4form(Algebra::O));
  CHECK(to8(hodge(to7(structure_3form(Algebra::Split)), diag({-1, -1, -1, -1, 1, 1, 1}), orient)) ==
        structure_4form(Algebra::Split));
}

TEST_CASE("hodge squares to one on 2-forms in Euclidean 4d") {
  SMat d4 = diag({1, 1, 1, 1});
  Form orient = Form::basis(4, {0, 1, 2, 3});
  std::mt19937_64 rng(4);
  for (int n = 0; n < 20; ++n) {
    Form s = rnd_form(rng, 4, 2, 4, true);
    CHECK(hodge(hodge(s, d4, orient), d4, orient) == s);
  }
  // and to minus one in Lorentzian signature
  SMat l4 = diag({1, -1, -1, -1});
  Form s = rnd_form(rng, 4, 2, 4);
  CHECK(hodge(hodge(s, l4, orient), l4, orient) == -s);
}

TEST_CASE("metric duality") {
  SMat d7 = diag(std::vector<long>(7, 1));
  CHECK(lower(basis_vec(7, 0), d7) == Form::basis(7, {0}));
  Vec a(7);
  a[0] = Scalar::frac(3, 5);
  CHECK(lower(a, d7) == Form::basis(7, {0}, Scalar::frac(3, 5)));
  SMat g = diag({-1, -1, -1, -1, 1, 1, 1, 1});
  std::mt19937_64 rng(5);
  for (int n = 0; n < 20; ++n) {
    Vec v = rnd_vec(rng, 8, true);
    CHECK(raise(lower(v, g), g) == v);
  }
}

TEST_CASE("lie action") {
  std::mt19937_64 rng(6);
  Form Phi = rnd_form(rng, 8, 4, 10);
  CHECK(lie_act(SMat::identity(8), Phi) == Scalar(-4) * Phi);
  SMat rot(8, 8);
  rot(0, 1) = Scalar(1);
  rot(1, 0) = Scalar(-1);
  CHECK(lie_act(rot, F("01")).is_zero());
}

TEST_CASE("pullback is functorial") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 10; ++n) {
    SMat A(8, 8), B(8, 8);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        A(i, j) = rnd(rng);
        B(i, j) = rnd(rng);
      }
    Form a = rnd_form(rng, 8, 2), b = rnd_form(rng, 8, 2);
    CHECK(pullback(A, wedge(a, b)) == wedge(pullback(A, a), pullback(A, b)));
    CHECK(pullback(A, pullback(B, a)) == pullback(B * A, a));
  }
}

TEST_CASE("restriction and embedding") {
  Form s = F("45") + F("67") + F("01");
  Form r = restrict_to(s, {4, 5, 6, 7});
  CHECK(r == Form::basis(4, {0, 1}) + Form::basis(4, {2, 3}));
  CHECK(embed(r, 8, {4, 5, 6, 7}) == F("45") + F("67"));
}

TEST_CASE("exact linear algebra") {
  SMat m(3, 3);
  m(0, 0) = Scalar(2);
  m(0, 1) = Scalar(1);
  m(1, 1) = Scalar::sqrt2();
  m(2, 2) = Scalar::i();
  CHECK(det(m) == Scalar(2) * Scalar::sqrt2() * Scalar::i());
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv * m == SMat::identity(3));
  CHECK(rank(m) == 3);
  QMat q(3, 3);
  q(0, 0) = Q2(1);
  q(1, 1) = Q2(-2);
  q(0, 1) = q(1, 0) = Q2(3);
  auto in = inertia(q);
  CHECK(in.pos == 1);
  CHECK(in.neg == 1);
  CHECK(in.zero == 1);
}
