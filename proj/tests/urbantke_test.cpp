#include "doctest.h"
#include "support.hpp"
#include "cayley/builtins.hpp"
#include "cayley/urbantke.hpp"

using namespace cayley;
using namespace testing;

namespace {

FormTriple named(const char* n) { return *builtin::triple(n); }

bool sig(const UrbantkeResult& u, int p, int q) { return (u.pos == p && u.neg == q) || (u.pos == q && u.neg == p); }

}  // namespace

TEST_CASE("Euclidean triples") {
  for (const char* n : {"sigma", "sigma-prime"}) {
    auto u = urbantke_metric(named(n));
    CHECK(sig(u, 4, 0));
    CHECK(u.selfdual_residual < 1e-9);
  }
  auto u = urbantke_metric(named("sigma"));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(u.g(i, j) == doctest::Approx(i == j ? 1.0 : 0.0));
}

TEST_CASE("split triples") {
  for (const char* n : {"sigma-s", "sigma-s-prime"}) {
    auto u = urbantke_metric(named(n));
    CHECK(sig(u, 2, 2));
    CHECK(u.selfdual_residual < 1e-9);
  }
}

TEST_CASE("Lorentzian triples") {
  for (const char* n : {"sigma-L", "sigma-L-prime"}) {
    auto u = urbantke_metric(named(n));
    CHECK(sig(u, 1, 3));
    CHECK(u.selfdual_residual < 1e-9);
    CHECK((u.duality == "+i" || u.duality == "-i"));
  }
}

TEST_CASE("metric is conformally invariant under rescaling and mixing") {
  auto base = urbantke_metric(named("sigma"));
  FormTriple T = named("sigma");
  // an SO(3) rotation of the triple and an overall scale
  Scalar c = Scalar::frac(3, 5), s = Scalar::frac(4, 5);
  FormTriple R = T;
  R.B[0] = Scalar(7) * (c * T.B[0] - s * T.B[1]);
  R.B[1] = Scalar(7) * (s * T.B[0] + c * T.B[1]);
  R.B[2] = Scalar(7) * T.B[2];
  auto u = urbantke_metric(R);
  CHECK(conformal_residual(u.g, base.g) < 1e-9);
}

TEST_CASE("reality conditions") {
  CHECK(reality_check(named("sigma-L")).ok);
  CHECK(reality_check(named("sigma-L-prime")).ok);
  auto r = reality_check(named("sigma"));
  CHECK(!r.ok);
  CHECK(r.i == 0);
  CHECK(r.j == 0);
  FormTriple T = named("sigma-L");
  T.B[2] = T.B[0].conj();
  auto m = reality_check(T);
  CHECK(!m.ok);
  CHECK(m.i == 0);
  CHECK(m.j == 2);
}

TEST_CASE("errors") {
  FormTriple T = named("sigma");
  T.mode = TripleMode::Lorentzian;
  CHECK_THROWS_AS(urbantke_metric(T), std::invalid_argument);
  FormTriple D = named("sigma");
  D.B[2] = D.B[1];
  CHECK_THROWS_AS(urbantke_metric(D), std::invalid_argument);
}

TEST_CASE("wedge Gram matrix") {
  SMat g = wedge_gram(named("sigma"));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(g(i, j).is_zero());
  CHECK(!g(0, 0).is_zero());
  CHECK(g(0, 0) == g(1, 1));
}

TEST_CASE("reduction of Cayley forms") {
  auto rp = reduce_from_cayley(build_family(Family::RiemannianReal), {4, 1, 2, 3}, fx::Sigma());
  CHECK(rp.conformal < 1e-9);
  CHECK(sig(rp.urbantke, 4, 0));
  CHECK(rp.complement == std::vector<int>{0, 5, 6, 7});
  auto rs = reduce_from_cayley(build_family(Family::SplitReal), {3, 4, 5, 6}, fx::Sigma_s());
  CHECK(rs.conformal < 1e-9);
  CHECK(sig(rs.urbantke, 2, 2));
  auto rl = reduce_from_cayley(build_family(Family::Lorentzian), {0, 1, 2, 3}, fx::Sigma_L_prime());
  CHECK(rl.conformal < 1e-9);
  CHECK(sig(rl.urbantke, 1, 3));
  CHECK(rl.triple.mode == TripleMode::Lorentzian);
  CHECK(reality_check(rl.triple).ok);
}

TEST_CASE("reduction needs a calibrated plane") {
  CHECK_THROWS(reduce_from_cayley(build_family(Family::RiemannianReal), {0, 1, 2, 4}, fx::Sigma()));
}
