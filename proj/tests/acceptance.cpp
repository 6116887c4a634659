// One line per acceptance criterion. Optional argv[1]: path to the CLI, whose
// verify-all run is then checked for exit status and byte-identical output.
#include <array>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <sys/wait.h>

#include "cayley/suite.hpp"

using namespace cayley;

namespace {

const std::map<int, std::string> kTitles = {
    {1, "Clifford relations in both signatures"},
    {2, "Cayley form from the identity spinor"},
    {3, "split Cayley form"},
    {4, "complex structure route"},
    {5, "tau family at t = 2"},
    {6, "theta family and its degenerations"},
    {7, "Lorentzian Cayley form, block and mixed forms"},
    {8, "calibration identities"},
    {9, "metric compatibility"},
    {10, "metric recovery and equivariance"},
    {11, "metrics from 3-forms in 7d"},
    {12, "orbit, stabiliser and fibre dimensions"},
    {13, "pure spinors"},
    {14, "four-metrics from triples of 2-forms"},
    {15, "dimensional reduction"},
    {16, "tangent space computations"},
    {17, "unit spinor fibre"},
    {18, "CLI report and document round trip"},
};

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& cmd) {
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  SuiteReport rep = run_suite({});
  std::map<int, std::string> failures;
  std::map<int, int> counts;
  for (const auto& r : rep.records) {
    ++counts[r.criterion];
    if (!r.pass && !failures.count(r.criterion)) failures[r.criterion] = r.name + ": " + r.witness;
  }

  // determinism of the in-process report
  if (report_json(run_suite({})) != report_json(rep) && !failures.count(18))
    failures[18] = "report differs between runs";

  if (argc > 1 && !failures.count(18)) {
    std::string cli = argv[1];
    Run a = run("'" + cli + "' verify-all --json"), b = run("'" + cli + "' verify-all --json");
    Run f = run("'" + cli + "' verify-all --inject-fault cayley-plus");
    if (a.status != 0) failures[18] = "verify-all exit status " + std::to_string(a.status);
    else if (a.out != b.out) failures[18] = "verify-all output differs between runs";
    else if (a.out != report_json(rep)) failures[18] = "CLI report differs from the library report";
    else if (f.status != 1) failures[18] = "fault injection exit status " + std::to_string(f.status);
  }

  int failed = 0;
  for (const auto& [k, title] : kTitles) {
    bool ok = counts[k] > 0 && !failures.count(k);
    failed += !ok;
    std::cout << "criterion " << k << ": " << (ok ? "PASS" : "FAIL") << "  " << title << " (" << counts[k]
              << " checks)";
    if (!ok) std::cout << "  -- " << (counts[k] ? failures[k] : "no checks");
    std::cout << "\n";
  }
  std::cout << (18 - failed) << "/18 criteria pass\n";
  return failed ? 1 : 0;
}
