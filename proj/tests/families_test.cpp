#include "doctest.h"
#include "support.hpp"
#include "cayley/families.hpp"

using namespace cayley;
using namespace testing;
using fx::half;

namespace {
const Scalar I = Scalar::i();
Scalar theta_u() { return Scalar(Q2(mpq_class(3, 5)), Q2(mpq_class(4, 5))); }
}  // namespace

TEST_CASE("hyperbolic values at t = 2") {
  CHECK(cosh2(Scalar(2)) == Scalar::frac(17, 8));
  CHECK(sinh2(Scalar(2)) == Scalar::frac(15, 8));
  CHECK(cosh2(Scalar(1)) == Scalar(1));
}

TEST_CASE("every family agrees with its closed form") {
  CHECK_NOTHROW(build_family(Family::RiemannianReal));
  CHECK_NOTHROW(build_family(Family::RiemannianComplexTau, Scalar(2)));
  CHECK_NOTHROW(build_family(Family::RiemannianComplexTau, Scalar::frac(1, 3)));
  CHECK_NOTHROW(build_family(Family::SplitReal));
  CHECK_NOTHROW(build_family(Family::SplitComplexTau, Scalar(2)));
  CHECK_NOTHROW(build_family(Family::SplitComplexTheta, theta_u()));
  CHECK_NOTHROW(build_family(Family::Lorentzian));
}

TEST_CASE("Riemannian real family") {
  auto cf = build_family(Family::RiemannianReal);
  Form w = fx::omega_std();
  CHECK(cf.Phi == fx::Omega_std().real_part() - half() * wedge(w, w));
  CHECK(cf.Phi == bilinear(4, fx::unit(Signature::Euclid), fx::unit(Signature::Euclid)));
}

TEST_CASE("theta family degenerations") {
  Form f1 = build_family(Family::SplitComplexTheta, I).Phi;
  CHECK(f1.is_real());
  Form f0 = build_family(Family::SplitComplexTheta, Scalar(1)).Phi;
  CHECK(f0 == build_family(Family::SplitReal).Phi);
}

TEST_CASE("Lorentzian block form") {
  auto cf = build_family(Family::Lorentzian);
  CHECK(cf.Phi == I * wedge(fx::e(0), fx::phi_L()) + fx::star_phi_L());
  CHECK(pairing(conjugate(cf.seed), cf.seed).is_zero());
}

TEST_CASE("fibre closed form") {
  Vec a(7);
  a[0] = Scalar::frac(3, 5);
  Spinor s = fibre_spinor(a, Scalar::frac(4, 5));
  CHECK(closed_form_fibre(a, Scalar::frac(4, 5)) == bilinear(4, s, s));
  CHECK(closed_form_fibre(Vec(7), Scalar(1)) == build_family(Family::RiemannianReal).Phi);
  Vec b(7);
  b[0] = Scalar::frac(3, 5);
  b[1] = Scalar::frac(4, 5);
  CHECK_THROWS(closed_form_fibre(b, Scalar()));
  CHECK_THROWS(closed_form_fibre(a, Scalar(1)));
}

TEST_CASE("fibre closed form on random rational points") {
  // Pythagorean quadruples give rational s
  std::vector<std::array<int, 4>> q{{1, 2, 2, 3}, {2, 3, 6, 7}, {1, 4, 8, 9}, {4, 4, 7, 9}, {2, 6, 9, 11}};
  std::mt19937_64 rng(40);
  for (const auto& [x, y, z, n] : q) {
    std::vector<int> dirs{0, 1, 2, 3, 4, 5, 6};
    std::shuffle(dirs.begin(), dirs.end(), rng);
    Vec a(7);
    a[dirs[0]] = Scalar::frac(x, n);
    a[dirs[1]] = Scalar::frac(-y, n);
    Spinor s = fibre_spinor(a, Scalar::frac(z, n));
    CHECK(closed_form_fibre(a, Scalar::frac(z, n)) == bilinear(4, s, s));
  }
}

TEST_CASE("fibre first order term") {
  CHECK(fibre_first_order(Vec(7)).is_zero());
  // linear in Y
  Vec y1(7), y2(7);
  y1[0] = Scalar(1);
  y2[3] = Scalar(2);
  Vec y3(7);
  y3[0] = Scalar(1);
  y3[3] = Scalar(2);
  CHECK(fibre_first_order(y3) == fibre_first_order(y1) + fibre_first_order(y2));
}

TEST_CASE("metric compatibility") {
  SMat d = vector_metric(Signature::Euclid), h = vector_metric(Signature::Split);
  CHECK(verify_metric_compat(build_family(Family::RiemannianReal).Phi, d, volume_form(d)).ok);
  CHECK(verify_metric_compat(build_family(Family::SplitReal).Phi, h, volume_form(h)).ok);
  CHECK(verify_metric_compat(build_family(Family::RiemannianComplexTau, Scalar(2)).Phi, d, volume_form(d)).ok);
  CHECK(verify_metric_compat(build_family(Family::SplitComplexTheta, theta_u()).Phi, h, volume_form(h)).ok);
  CHECK(verify_metric_compat(build_family(Family::Lorentzian).Phi, h, volume_form(h)).ok);
  SMat d2 = Scalar(2) * d;
  auto bad = verify_metric_compat(build_family(Family::RiemannianReal).Phi, d2, volume_form(d2));
  CHECK(!bad.ok);
  CHECK(!bad.witness.empty());
  CHECK(!verify_metric_compat(build_family(Family::RiemannianReal).Phi, h, volume_form(h)).ok);
}

TEST_CASE("metric recovery") {
  auto r = recover_metric(build_family(Family::RiemannianReal).Phi);
  CHECK(r.residual < 1e-9);
  CHECK(r.pos == 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) CHECK(r.g(i, j) == doctest::Approx(i == j ? 1.0 : 0.0));
  auto s = recover_metric(build_family(Family::Lorentzian).Phi);
  CHECK(s.residual < 1e-9);
  CHECK(s.pos == 4);
  CHECK(s.neg == 4);
  CHECK(s.g(0, 0) == doctest::Approx(1.0));
  CHECK(s.g(1, 1) == doctest::Approx(-1.0));
}

TEST_CASE("metric recovery scales with the form") {
  // Phi -> 2 Phi multiplies the metric by 2^(1/2)
  auto r = recover_metric(Scalar(2) * build_family(Family::RiemannianReal).Phi);
  CHECK(r.residual < 1e-9);
  CHECK(r.g(3, 3) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("calibrations") {
  auto cf = build_family(Family::RiemannianReal);
  auto b = [](int k) { return basis_vec(8, k); };
  auto c = is_calibrated(cf, {b(0), b(5), b(6), b(7)}, cf.metric);
  CHECK(c.calibrated);
  CHECK((c.value == Scalar(1) || c.value == Scalar(-1)));
  auto n = is_calibrated(cf, {b(0), b(1), b(2), b(4)}, cf.metric);
  CHECK(!n.calibrated);
  auto L = build_family(Family::Lorentzian);
  auto l = is_calibrated(L, {b(4), b(5), b(6), b(7)}, L.metric);
  CHECK(l.calibrated);
  CHECK((l.value == I || l.value == -I));
  Vec mix = b(0);
  mix[5] = Scalar(1);
  auto o = orthonormalize({b(0), mix}, cf.metric);
  CHECK(dot(o[1], cf.metric, o[1]) == Scalar(1));
  CHECK(dot(o[0], cf.metric, o[1]).is_zero());
}

TEST_CASE("calibration identities") {
  for (auto t : {CalibTag::Riemannian, CalibTag::SplitFirst, CalibTag::SplitSecond, CalibTag::Lorentzian, CalibTag::Tau}) {
    auto r = calibration_identity(t);
    CHECK(r.equal);
    CHECK(r.built == r.family);
  }
}

TEST_CASE("orbit dimensions") {
  CHECK(orbit_dimension(build_family(Family::RiemannianReal).Phi) == 43);
  CHECK(orbit_dimension(build_family(Family::SplitReal).Phi) == 43);
  CHECK(orbit_dimension(build_family(Family::RiemannianComplexTau, Scalar(2)).Phi) == 49);
  CHECK(orbit_dimension(build_family(Family::Lorentzian).Phi) == 49);
}

TEST_CASE("orbit dimension is frame independent") {
  SMat A = SMat::identity(8);
  A(0, 3) = Scalar(1);
  A(5, 2) = Scalar(-2);
  CHECK(orbit_dimension(pullback(A, build_family(Family::RiemannianReal).Phi)) == 43);
}

TEST_CASE("mixed representation") { CHECK(mixed_representation_check().all()); }

TEST_CASE("fibre dimensions") {
  auto r = fibre_dimension_riemannian();
  CHECK(r.kernel == 7);
  CHECK(r.image == 7);
  auto l = fibre_dimension_lorentzian();
  CHECK(l.kernel == 13);
  CHECK(l.image == 13);
}
