#include "cayley/builtins.hpp"

#include <functional>
#include <map>

namespace cayley::builtin {

using namespace fx;

namespace {

Scalar theta_u() { return Scalar(Q2(mpq_class(3, 5)), Q2(mpq_class(4, 5))); }

const std::map<std::string, std::function<Form()>>& forms() {
  static const std::map<std::string, std::function<Form()>> m = {
      {"cayley-plus", [] { return build_family(Family::RiemannianReal).Phi; }},
      {"phi-split", [] { return build_family(Family::SplitReal).Phi; }},
      {"phi-tau", [] { return build_family(Family::RiemannianComplexTau, Scalar(2)).Phi; }},
      {"phi-split-tau", [] { return build_family(Family::SplitComplexTau, Scalar(2)).Phi; }},
      {"phi-theta", [] { return build_family(Family::SplitComplexTheta, theta_u()).Phi; }},
      {"phi-L", [] { return build_family(Family::Lorentzian).Phi; }},
      {"3form-g2", [] { return to7(structure_3form(Algebra::O)); }},
      {"3form-g2-split", [] { return to7(structure_3form(Algebra::Split)); }},
  };
  return m;
}

const std::map<std::string, std::function<FormTriple()>>& triples() {
  static const std::map<std::string, std::function<FormTriple()>> m = {
      {"sigma", [] { return make_triple(Sigma(), {4, 1, 2, 3}, TripleMode::Real); }},
      {"sigma-prime", [] { return make_triple(Sigma_prime(), {0, 5, 6, 7}, TripleMode::Real); }},
      {"sigma-s", [] { return make_triple(Sigma_s(), {3, 4, 5, 6}, TripleMode::Real); }},
      {"sigma-s-prime", [] { return make_triple(Sigma_s_prime(), {0, 1, 2, 7}, TripleMode::Real); }},
      {"sigma-L", [] { return make_triple(Sigma_L(), {4, 5, 6, 7}, TripleMode::Lorentzian); }},
      {"sigma-L-prime", [] { return make_triple(Sigma_L_prime(), {0, 1, 2, 3}, TripleMode::Lorentzian); }},
  };
  return m;
}

const std::map<std::string, std::function<Spinor()>>& spinors() {
  static const std::map<std::string, std::function<Spinor()>> m = {
      {"unit", [] { return unit(Signature::Euclid); }},
      {"unit-split", [] { return unit(Signature::Split); }},
      {"psi-p", [] { return psi_p(); }},
      {"psi-p-split", [] { return psi_p_split(); }},
      {"psi-tau", [] { return build_family(Family::RiemannianComplexTau, Scalar(2)).seed; }},
      {"psi-theta", [] { return build_family(Family::SplitComplexTheta, theta_u()).seed; }},
      {"psi-plus", [] { return psi_plus(); }},
      {"psi-minus", [] { return psi_minus(); }},
      {"psi-L", [] { return psi_L(); }},
      {"pair-p", [] { return pair_p(); }},
      {"pair-p-prime", [] { return pair_p_prime(); }},
  };
  return m;
}

const std::map<std::string, std::function<SMat()>>& metrics() {
  static const std::map<std::string, std::function<SMat()>> m = {
      {"delta8", [] { return vector_metric(Signature::Euclid); }},
      {"eta8", [] { return vector_metric(Signature::Split); }},
      {"delta7", [] { return diag(std::vector<long>(7, 1)); }},
      {"eta7", [] { return diag({-1, -1, -1, -1, 1, 1, 1}); }},
  };
  return m;
}

template <class M>
auto lookup(const M& m, const std::string& name) -> std::optional<decltype(m.begin()->second())> {
  auto it = m.find(name);
  if (it == m.end()) return std::nullopt;
  return it->second();
}

template <class M>
std::vector<std::string> names(const M& m) {
  std::vector<std::string> v;
  for (const auto& [k, f] : m) v.push_back(k);
  return v;
}

}  // namespace

std::optional<Form> form(const std::string& name) { return lookup(forms(), name); }
std::optional<FormTriple> triple(const std::string& name) { return lookup(triples(), name); }
std::optional<Spinor> spinor(const std::string& name) { return lookup(spinors(), name); }
std::optional<SMat> metric(const std::string& name) { return lookup(metrics(), name); }

std::vector<std::string> form_names() { return names(forms()); }
std::vector<std::string> triple_names() { return names(triples()); }
std::vector<std::string> spinor_names() { return names(spinors()); }
std::vector<std::string> metric_names() { return names(metrics()); }

}  // namespace cayley::builtin
