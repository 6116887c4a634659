#include <set>

#include "doctest.h"
#include "cayley/suite.hpp"

using namespace cayley;

TEST_CASE("check names are unique and cover every criterion") {
  std::set<std::string> names;
  std::set<int> crit;
  for (const auto& c : all_checks()) {
    CHECK(names.insert(c.name).second);
    CHECK(!c.anchor.empty());
    crit.insert(c.criterion);
  }
  for (int k = 1; k <= 18; ++k) CHECK(crit.count(k) == 1);
}

TEST_CASE("filter selects by substring") {
  SuiteOptions o;
  o.filter = "urbantke";
  auto r = run_suite(o);
  CHECK(r.records.size() == 3);
  CHECK(r.ok());
}

TEST_CASE("reports are deterministic") {
  SuiteOptions o;
  o.filter = "orbit";
  auto a = run_suite(o), b = run_suite(o);
  CHECK(report_json(a) == report_json(b));
  CHECK(report_text(a) == report_text(b));
}

TEST_CASE("corrupted fixture is caught") {
  SuiteOptions o;
  o.filter = "cayley-plus";
  o.corrupt_cayley_plus = true;
  auto r = run_suite(o);
  CHECK(!r.ok());
  for (const auto& c : r.records)
    if (!c.pass) CHECK(!c.witness.empty());
}
