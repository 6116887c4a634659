#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cayley/fixtures.hpp"
#include "cayley/spinor_geometry.hpp"

namespace cayley {

enum class Family {
  RiemannianReal,
  RiemannianComplexTau,
  SplitReal,
  SplitComplexTau,
  SplitComplexTheta,
  Lorentzian
};
std::string to_string(Family f);
Signature signature_of(Family f);

struct CayleyForm {
  Form Phi;
  Family family = Family::RiemannianReal;
  Scalar param{1};  // t for tau families, u for theta families
  Spinor seed;
  SMat metric;      // reference diagonal metric
};

// cosh(2 tau), sinh(2 tau) for e^tau = t
Scalar cosh2(const Scalar& t);
Scalar sinh2(const Scalar& t);

// The displayed closed form for the family, built from (Omega, omega) data.
Form family_closed_form(Family f, const Scalar& param);

// Builds Phi = B_4(seed, seed) and checks it against family_closed_form.
CayleyForm build_family(Family f, const Scalar& param = Scalar(1));

// Cayley form of psi = (s, alpha), alpha in R^7, s = sqrt(1 - |alpha|^2) given.
Form closed_form_fibre(const Vec& alpha, const Scalar& s);
Spinor fibre_spinor(const Vec& alpha, const Scalar& s);
// Coefficient of eps in closed_form_fibre(eps * Y, 1), by dual numbers.
Form fibre_first_order(const Vec& Y);

// Metric identity tensor on Lambda^2, projected away from its totally
// antisymmetric part. Entry (p, q) for pairs p = (i<k), q = (j<l).
SMat compat_tensor(const Form& A, const Form& B, const Form& C);
inline SMat compat_tensor(const Form& Phi) { return compat_tensor(Phi, Phi, Phi); }
SMat lambda2(const SMat& g, const Scalar& scale);
const std::vector<std::pair<int, int>>& index_pairs();

struct CompatResult {
  bool ok = false;
  std::string witness;
};
CompatResult verify_metric_compat(const Form& Phi, const SMat& g, const Form& vol);
// Volume form of g with orientation e^{0..7} (sign flips it).
Form volume_form(const SMat& g, int sign = 1);

struct RealMatrix {
  int n = 0;
  std::vector<double> a;
  double operator()(int i, int j) const { return a[i * n + j]; }
};

struct Recovered {
  RealMatrix g;
  double residual = 0;
  int orientation = 1;  // sign of the volume coefficient
  int iterations = 0;
  int pos = 0, neg = 0;
};
Recovered recover_metric(const Form& Phi, int max_iters = 200);

struct Calibration {
  bool calibrated = false;
  Scalar value;     // Phi on the orthonormal basis
  Scalar constant;  // expected magnitude for this family and plane
  Inertia plane;
};
Calibration is_calibrated(const CayleyForm& cf, const std::vector<Vec>& H, const SMat& g);
std::vector<Vec> orthonormalize(const std::vector<Vec>& H, const SMat& g);

enum class CalibTag { Riemannian, SplitFirst, SplitSecond, Lorentzian, Tau };
struct CalibIdentity {
  Form built;
  Form family;
  bool equal = false;
};
CalibIdentity calibration_identity(CalibTag tag, const Scalar& t = Scalar(2));

int orbit_dimension(const Form& Phi);

struct MixedCheck {
  bool sum_ok = false;
  Scalar pairing;
  int real_index = -1;
  bool Omega_c_ok = false, Omega_c_prime_ok = false, omega_c_ok = false;
  bool identity_ok = false;
  bool all() const;
};
MixedCheck mixed_representation_check();

// Real dimension of first-order spinor directions preserving the constraints,
// and the rank of their image in 4-forms.
struct FibreDim {
  int kernel = 0;
  int image = 0;
};
FibreDim fibre_dimension_riemannian();
FibreDim fibre_dimension_lorentzian();

}  // namespace cayley
