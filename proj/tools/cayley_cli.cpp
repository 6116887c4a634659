#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cayley/builtins.hpp"
#include "cayley/io.hpp"
#include "cayley/suite.hpp"

using namespace cayley;

namespace {

constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::string kBuiltin = "builtin:";

std::string slurp(const std::string& path) {
  try {
    return read_file(path);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

bool is_builtin(const std::string& ref) { return ref.rfind(kBuiltin, 0) == 0; }

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

Form load_form(const std::string& ref, const ParseOptions& po) {
  if (is_builtin(ref)) {
    auto f = builtin::form(ref.substr(kBuiltin.size()));
    if (!f) throw UsageError("unknown builtin form; known: " + join(builtin::form_names()));
    return *f;
  }
  return parse_form(slurp(ref), po);
}

Spinor load_spinor(const std::string& ref) {
  if (is_builtin(ref)) {
    auto s = builtin::spinor(ref.substr(kBuiltin.size()));
    if (!s) throw UsageError("unknown builtin spinor; known: " + join(builtin::spinor_names()));
    return *s;
  }
  return parse_spinor(slurp(ref));
}

SMat load_metric(const std::string& ref) {
  if (is_builtin(ref)) {
    auto g = builtin::metric(ref.substr(kBuiltin.size()));
    if (!g) throw UsageError("unknown builtin metric; known: " + join(builtin::metric_names()));
    return *g;
  }
  return parse_metric(slurp(ref));
}

FormTriple load_triple(const std::string& ref, const ParseOptions& po) {
  if (is_builtin(ref)) {
    auto t = builtin::triple(ref.substr(kBuiltin.size()));
    if (!t) throw UsageError("unknown builtin triple; known: " + join(builtin::triple_names()));
    return *t;
  }
  auto fs = parse_forms(slurp(ref), po);
  if (fs.size() != 3) throw UsageError("a triple file holds exactly three form sections");
  FormTriple T;
  for (int i = 0; i < 3; ++i) {
    if (fs[i].dim() != 4 || (!fs[i].is_zero() && fs[i].grade() != 2))
      throw UsageError("triple members must be 2-forms on a 4-dimensional space");
    T.B[i] = fs[i];
  }
  return T;
}

// fixed precision so that repeated runs print the same bytes
std::string num(double x) {
  if (std::abs(x) < 5e-13) x = 0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void print_matrix(const RealMatrix& g) {
  for (int i = 0; i < g.n; ++i) {
    std::cout << " ";
    for (int j = 0; j < g.n; ++j) std::cout << " " << num(g(i, j));
    std::cout << "\n";
  }
}

void print_matrix(const SMat& g) {
  for (std::size_t i = 0; i < g.rows(); ++i) {
    std::cout << " ";
    for (std::size_t j = 0; j < g.cols(); ++j) std::cout << " " << to_string(g(i, j));
    std::cout << "\n";
  }
}

int max_iters() {
  const char* env = std::getenv("CAYLEY_MAX_ITERS");
  if (!env) return 200;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end || v <= 0) throw UsageError("CAYLEY_MAX_ITERS must be a positive integer");
  return static_cast<int>(v);
}

int cmd_verify_all(bool json, const std::string& filter, bool timings, const std::string& fault) {
  SuiteOptions opt;
  opt.filter = filter;
  opt.timings = timings;
  if (!fault.empty()) {
    if (fault != "cayley-plus") throw UsageError("only the cayley-plus fixture can be corrupted");
    opt.corrupt_cayley_plus = true;
  }
  SuiteReport r = run_suite(opt);
  std::cout << (json ? report_json(r) : report_text(r));
  return r.ok() ? 0 : kFail;
}

int cmd_metric(const std::string& in, const std::string& mode, const std::string& candidate, const ParseOptions& po) {
  Form f = load_form(in, po);
  bool four = f.dim() == 8 && f.grade() == 4, three = f.dim() == 7 && f.grade() == 3;
  if (!four && !three) throw UsageError("expected a 4-form on R^8 or a 3-form on R^7");
  if (mode == "exact") {
    if (candidate.empty()) throw UsageError("exact mode needs --candidate");
    SMat g = load_metric(candidate);
    if (static_cast<int>(g.rows()) != f.dim()) throw UsageError("candidate metric has the wrong dimension");
    if (four) {
      auto r = verify_metric_compat(f, g, volume_form(g, 1));
      std::cout << "compatible: " << (r.ok ? "yes" : "no") << "\n";
      if (!r.ok) std::cout << "witness: " << r.witness << "\n";
      return r.ok ? 0 : kFail;
    }
    auto m = metric_from_3form(f);
    bool ok = m.metric && *m.metric == g;
    std::cout << "compatible: " << (ok ? "yes" : "no") << "\n";
    return ok ? 0 : kFail;
  }
  if (four) {
    auto r = recover_metric(f, max_iters());
    std::cout << "metric:\n";
    print_matrix(r.g);
    std::cout << "signature: (" << r.pos << "," << r.neg << ")\n";
    std::cout << "orientation: " << (r.orientation > 0 ? "+" : "-") << "e0^...^e7\n";
    std::cout << "residual: " << (r.residual < 1e-12 ? "< 1e-12" : num(r.residual)) << "\n";
    return r.residual < 1e-9 ? 0 : kFail;
  }
  auto m = metric_from_3form(f);
  if (m.metric) {
    std::cout << "metric:\n";
    print_matrix(*m.metric);
  } else {
    std::cout << "density (no exact normalization):\n";
    print_matrix(m.density);
    std::cout << "density determinant: " << to_string(m.density_det) << "\n";
  }
  std::cout << "signature: (" << m.signature.pos << "," << m.signature.neg << ")\n";
  return 0;
}

std::string parity_name(Parity p) {
  switch (p) {
    case Parity::Plus: return "plus";
    case Parity::Minus: return "minus";
    case Parity::Mixed: return "mixed";
    case Parity::Zero: break;
  }
  return "zero";
}

int cmd_classify(const std::string& in) {
  Spinor s = load_spinor(in);
  if (s.is_zero()) throw UsageError("zero spinor");
  std::cout << "signature: " << to_string(s.sig) << "\n";
  std::cout << "parity: " << parity_name(s.parity()) << "\n";
  if (s.parity() != Parity::Plus) return 0;
  std::cout << "pairing <psi,psi>: " << to_string(pairing(s, s)) << "\n";
  std::cout << "norm <hat psi,psi>: " << to_string(pairing(conjugate(s), s)) << "\n";
  bool pure = is_pure(s);
  std::cout << "pure: " << (pure ? "true" : "false") << "\n";
  std::cout << "stabiliser dimension: " << stabilizer_dim(s) << "\n";
  if (pure) {
    auto a = annihilator(s);
    std::cout << "real index: " << a.real_index << "\n";
    std::cout << "annihilator basis (columns):\n";
    print_matrix(a.basis);
  }
  return 0;
}

int cmd_urbantke(const std::string& in, const std::string& mode, const ParseOptions& po) {
  FormTriple T = load_triple(in, po);
  T.mode = mode == "lorentzian" ? TripleMode::Lorentzian : TripleMode::Real;
  UrbantkeResult u;
  try {
    u = urbantke_metric(T);
  } catch (const std::invalid_argument& e) {
    std::cout << "error: " << e.what() << "\n";
    return kFail;
  }
  std::cout << "metric:\n";
  print_matrix(u.g);
  std::cout << "signature: (" << u.pos << "," << u.neg << ")\n";
  std::cout << "self-duality: *B = " << u.duality << " B\n";
  std::cout << "self-duality residual: " << (u.selfdual_residual < 1e-12 ? "< 1e-12" : num(u.selfdual_residual)) << "\n";
  return u.selfdual_residual < 1e-9 ? 0 : kFail;
}

int cmd_bilinear(int k, const std::string& psi, const std::string& phi) {
  if (k < 0 || k > 8) throw UsageError("k must lie in 0..8");
  Spinor a = load_spinor(psi);
  Spinor b = phi.empty() ? a : load_spinor(phi);
  if (a.sig != b.sig) throw UsageError("spinors live in different signatures");
  std::cout << serialize_form(bilinear(k, a, b));
  return 0;
}

int cmd_orbit_dim(const std::string& in, const ParseOptions& po) {
  Form f = load_form(in, po);
  if (f.dim() != 8 || f.grade() != 4) throw UsageError("expected a 4-form on R^8");
  std::cout << orbit_dimension(f) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley form toolkit: exact checks of 4-forms, spinors and 2-form triples"};
  app.require_subcommand(1);
  ParseOptions po;
  app.add_flag("--normalize", po.normalize, "drop terms with a repeated index instead of failing");

  bool json = false, timings = false;
  std::string filter, fault;
  auto* verify = app.add_subcommand("verify-all", "run the full check list");
  verify->add_flag("--json", json, "emit the report as JSON");
  verify->add_option("--filter", filter, "only checks whose name contains this substring");
  verify->add_flag("--timings", timings, "record wall time per check");
  verify->add_option("--inject-fault", fault, "corrupt a builtin fixture (harness self-test)");

  std::string in, mode, candidate;
  auto* metric = app.add_subcommand("metric", "metric of a 4-form on R^8 or a 3-form on R^7");
  metric->add_option("--in", in, "form file or builtin:NAME")->required();
  metric->add_option("--mode", mode, "exact or numeric")->required()->check(CLI::IsMember({"exact", "numeric"}));
  metric->add_option("--candidate", candidate, "metric file or builtin:NAME (exact mode)");

  std::string spinor;
  auto* classify = app.add_subcommand("classify", "classify a spinor");
  classify->add_option("--spinor", spinor, "spinor file or builtin:NAME")->required();

  std::string triple, umode;
  auto* urb = app.add_subcommand("urbantke", "conformal metric of a triple of 2-forms on R^4");
  urb->add_option("--in", triple, "triple file or builtin:NAME")->required();
  urb->add_option("--mode", umode, "real or lorentzian")->required()->check(CLI::IsMember({"real", "lorentzian"}));

  int k = 4;
  std::string psi, phi;
  auto* bil = app.add_subcommand("bilinear", "spinor bilinear B_k(psi, phi)");
  bil->add_option("-k", k, "form degree")->required();
  bil->add_option("--psi", psi, "spinor file or builtin:NAME")->required();
  bil->add_option("--phi", phi, "second spinor, defaults to psi");

  std::string orbit_in;
  auto* orbit = app.add_subcommand("orbit-dim", "dimension of the GL(8) orbit of a 4-form");
  orbit->add_option("--in", orbit_in, "form file or builtin:NAME")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*verify) return cmd_verify_all(json, filter, timings, fault);
    if (*metric) return cmd_metric(in, mode, candidate, po);
    if (*classify) return cmd_classify(spinor);
    if (*urb) return cmd_urbantke(triple, umode, po);
    if (*bil) return cmd_bilinear(k, psi, phi);
    if (*orbit) return cmd_orbit_dim(orbit_in, po);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
