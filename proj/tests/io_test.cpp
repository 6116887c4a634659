#include "doctest.h"
#include "support.hpp"
#include "cayley/io.hpp"
#include "cayley/fixtures.hpp"

using namespace cayley;
using namespace testing;

TEST_CASE("scalar quadruples") {
  CHECK(parse_scalar("[1,0,0,0]") == Scalar(1));
  CHECK(parse_scalar("[0,1,0,0]") == Scalar::sqrt2());
  CHECK(parse_scalar("[1/2, -3/4, 0, 2]") == Scalar(mpq_class(1, 2), mpq_class(-3, 4), mpq_class(0), mpq_class(2)));
  CHECK(serialize_scalar(Scalar::i()) == "[0,0,1,0]");
  CHECK(parse_scalar("[2/4,0,0,0]") == Scalar::frac(1, 2));
  CHECK_THROWS_AS(parse_scalar("[1,0,0]"), ParseError);
  CHECK_THROWS_AS(parse_scalar("[1,0,0,x]"), ParseError);
  CHECK_THROWS_AS(parse_scalar("[1/0,0,0,0]"), ParseError);
}

TEST_CASE("form documents") {
  Form f = parse_form("form dim=8 grade=4\n[1,0,0,0] e0^e1^e2^e3\n");
  CHECK(f == fx::F("0123"));
  Form g = parse_form("# a comment\nform dim=8 grade=1\n\n[0,1,0,0] e5\n");
  CHECK(g == fx::F("5", Scalar::sqrt2()));
  // unsorted indices are sign-normalized
  CHECK(parse_form("form dim=8 grade=2\n[1,0,0,0] e3^e1\n") == -fx::F("13"));
  // repeated terms add up
  CHECK(parse_form("form dim=4 grade=2\n[1,0,0,0] e0^e1\n[1,0,0,0] e0^e1\n") == Form::basis(4, {0, 1}, Scalar(2)));
}

TEST_CASE("form document errors") {
  auto err = [](const std::string& text, int line) {
    try {
      parse_form(text);
    } catch (const ParseError& e) {
      CHECK(e.line == line);
      return true;
    }
    return false;
  };
  CHECK(err("form dim=4\n", 1));
  CHECK(err("form dim=4 grade=2\n[1,0,0,0] e0^e5\n", 2));
  CHECK(err("form dim=4 grade=2\n[1,0,0,0] e0\n", 2));
  CHECK(err("form dim=4 grade=2\n[1,0,0,0] e0^e1\nbad\n", 3));
  CHECK(err("form dim=4 grade=2\n[1,0,0,0] e1^e1\n", 2));
}

TEST_CASE("repeated index policy") {
  ParseOptions po;
  po.normalize = true;
  Form f = parse_form("form dim=4 grade=2\n[1,0,0,0] e1^e1\n[2,0,0,0] e0^e2\n", po);
  CHECK(f == Form::basis(4, {0, 2}, Scalar(2)));
}

TEST_CASE("serialization round trip") {
  std::mt19937_64 rng(60);
  for (int n = 0; n < 50; ++n) {
    int dim = 1 + n % 8, grade = (n * 7) % (dim + 1);
    Form f = random_form(rng, dim, grade, n % 10);
    std::string text = serialize_form(f);
    CHECK(parse_form(text) == f);
    CHECK(serialize_form(parse_form(text)) == text);
  }
}

TEST_CASE("several sections") {
  std::string t = serialize_form(Form::basis(4, {0, 1})) + serialize_form(Form::basis(4, {2, 3})) +
                  serialize_form(Form::basis(4, {1, 2}, Scalar::i()));
  auto fs = parse_forms(t);
  REQUIRE(fs.size() == 3);
  CHECK(fs[2] == Form::basis(4, {1, 2}, Scalar::i()));
}

TEST_CASE("spinor and metric documents") {
  for (const Spinor& s : {fx::psi_L(), fx::psi_p(), fx::unit(Signature::Euclid)}) CHECK(parse_spinor(serialize_spinor(s)) == s);
  SMat g = diag({-1, -1, -1, -1, 1, 1, 1});
  CHECK(parse_metric(serialize_metric(g)) == g);
  SMat a(2, 2);
  a(0, 1) = Scalar(1);
  CHECK_THROWS_AS(parse_metric(serialize_metric(a)), ParseError);
  CHECK_THROWS_AS(parse_spinor("spinor sig=8,0\n[1,0,0,0]\n"), ParseError);
}
