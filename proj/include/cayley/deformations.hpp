#pragma once

#include <array>
#include <set>
#include <utility>

#include "cayley/families.hpp"

namespace cayley {

// e0 ^ (Y _| Phi) - Y ^ (e0 _| Phi), Y on directions 1..7
Form riemannian_fibre_tangent(const Vec& Y, const Form& Phi);

// dpsi+ = a(1 + e4) + xi, dpsi- = -a(1 - e4) + eta, with xi, eta on e1,e2,e3,e5,e6,e7
struct LorentzPerturbation {
  Scalar a;
  std::array<Scalar, 6> xi{}, eta{};
};
Spinor perturbation_spinor(const LorentzPerturbation& p);
// <psi_L, GGGG dpsi>, the "2 dPhi" of the bilinear route
Form lorentzian_tangent_bilinear(const LorentzPerturbation& p);
// the same from the displayed closed forms
Form lorentzian_tangent_closed(const LorentzPerturbation& p);
// basis perturbation k = 0..12: a, then xi_1..6, then eta_1..6
LorentzPerturbation unit_perturbation(int k);

// Building blocks on the K eigenspaces. x holds three coefficients.
Form xi10_omega_plus(const std::array<Scalar, 3>& x);
Form xi01_omega_minus(const std::array<Scalar, 3>& x);
Form xi01_omega(const std::array<Scalar, 3>& x);
Form xi10_omega(const std::array<Scalar, 3>& x);

// Xi = s (1 + e4) + sum x_k (e_k + e_{k+4}) if K-even, s (1 - e4) + sum x_k (e_k - e_{k+4}) if K-odd
struct EigenDecomp {
  int eigen = 0;  // +1 or -1
  Scalar s;
  std::array<Scalar, 3> x{};
};
EigenDecomp split_eigen(const Spinor& Xi);
// <psi+-, GGGG Xi> by bilinears; plus selects psi+
Form eigenspace_bilinear(bool plus, const Spinor& Xi);
Form eigenspace_closed(bool plus, const Spinor& Xi);

struct BigradedDecomposition {
  Form re20, re02, re_r, im20, im02, im_r;
  std::array<Scalar, 13> re_coords{}, im_coords{};  // 6 + 6 + 1
  bool resums = false;
};
// Projection of 2 dPhi onto span(A20) + span(A02) + R(Omega+ + Omega-).
BigradedDecomposition decompose_wrt_K(const Form& dPhi);

// pairs (legs in the +1 eigenspace of K, legs in the -1 eigenspace) occurring in a form
std::set<std::pair<int, int>> k_leg_types(const Form& f);

struct SweepDims {
  int total = 0, re = 0, im = 0, re20 = 0, re02 = 0, im20 = 0, im02 = 0, im_r = 0;
  bool bijection = false;
};
SweepDims sweep_dimensions();

// first-order change of the projected metric identity tensor along dPhi
SMat compat_first_order(const Form& Phi, const Form& dPhi);

}  // namespace cayley
