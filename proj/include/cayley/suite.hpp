#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cayley/form.hpp"

namespace cayley {

struct SuiteOptions {
  std::string filter;       // substring of the check name
  bool timings = false;     // otherwise ms is reported as 0
  bool corrupt_cayley_plus = false;  // fault injection for the harness itself
};

struct Outcome {
  bool pass = false;
  std::string witness;
};

class SuiteContext {
 public:
  explicit SuiteContext(const SuiteOptions& o) : opt_(o) {}
  // the builtin Cayley form, possibly corrupted
  Form cayley_plus() const;

 private:
  SuiteOptions opt_;
};

struct Check {
  std::string name;
  std::string anchor;  // quoted source text the identity comes from
  int criterion;       // acceptance criterion number
  std::function<Outcome(const SuiteContext&)> run;
};

struct CheckRecord {
  std::string name, anchor;
  int criterion = 0;
  bool pass = false;
  std::string witness;
  long ms = 0;
};

struct SuiteReport {
  std::vector<CheckRecord> records;
  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }
};

const std::vector<Check>& all_checks();
SuiteReport run_suite(const SuiteOptions& opt);

std::string report_text(const SuiteReport& r);
std::string report_json(const SuiteReport& r);

}  // namespace cayley
