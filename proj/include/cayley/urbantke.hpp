#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "cayley/families.hpp"

namespace cayley {

enum class TripleMode { Real, Lorentzian };

// Three 2-forms on R^4, local coordinates 0..3 with orientation e^{0123}.
struct FormTriple {
  std::array<Form, 3> B;
  TripleMode mode = TripleMode::Real;
};

// Restrict 8d 2-forms to the 4 listed directions (in that order).
FormTriple make_triple(const fx::Triple& t, const std::vector<int>& labels, TripleMode mode);

// B^i ^ B^j against e^{0123}
SMat wedge_gram(const FormTriple& T);

struct Reality {
  bool ok = true;
  int i = -1, j = -1;  // first violating pair
  Form witness;
};
Reality reality_check(const FormTriple& T);

struct UrbantkeResult {
  SMat density;  // exact, before normalization
  RealMatrix g;  // density / |det density|^(1/6)
  int pos = 0, neg = 0;
  double selfdual_residual = 0;
  std::string duality;  // "+1", "-1", "+i" or "-i": *B^i = duality * B^i
};
UrbantkeResult urbantke_metric(const FormTriple& T);

// 2-form Hodge star for a numeric 4d metric, orientation e^{0123}.
std::array<std::array<std::complex<double>, 4>, 4> hodge4(const Form& B, const RealMatrix& g);

// max |4 g / tr(g ref^-1) - ref|
double conformal_residual(const RealMatrix& g, const RealMatrix& ref);
RealMatrix to_real(const SMat& m);

struct Reduction {
  FormTriple triple;
  UrbantkeResult urbantke;
  RealMatrix induced;
  Calibration calibration;
  std::vector<int> complement;
  double conformal = 0;
};
// B^i = sigma^i _| Phi restricted to the orthogonal complement of H, where sigma^i
// is the bivector metric-dual to the 2-form sigma_forms[i] on H.
Reduction reduce_from_cayley(const CayleyForm& cf, const std::vector<int>& H, const fx::Triple& sigma_forms);

}  // namespace cayley
