#pragma once

#include <array>

#include "cayley/clifford.hpp"

// Named objects used throughout: seed spinors, the standard (Omega, omega)
// pairs and the self-dual bases adapted to calibrations.
namespace cayley::fx {

// coefficient * e^{d1 d2 ...} in 8d, digits give the index order
Form F(const char* digits, const Scalar& c = Scalar(1));
Form e(int i);
Scalar half();
Scalar inv_sqrt2();

Spinor unit(Signature s);
Spinor psi_p();        // (1 + i e4)/2, (8,0)
Spinor psi_p_split();  // (1 + i e7)/2, (4,4)
Spinor psi_plus();     // (1 + e4)/2, (4,4)
Spinor psi_minus();    // (1 - e4)/2, (4,4)
Spinor psi_L();        // (1 + i e4)/sqrt2, (4,4)
Spinor pair_p();       // real index two pair summing to psi_L
Spinor pair_p_prime();

Form Omega_std();
Form omega_std();
Form Omega_split();
Form omega_split();
Form Omega_plus();
Form Omega_minus();
Form omega_r();
Form phi_L();
Form star_phi_L();
Form Omega_c();
Form Omega_c_prime();
Form omega_c();

using Triple = std::array<Form, 3>;
Triple Sigma();           // on e4, e1, e2, e3
Triple Sigma_prime();     // on e0, e5, e6, e7
Triple Sigma_s();         // split plane e3..e6
Triple Sigma_s_prime();   // its complement e0, e1, e2, e7
Triple Sigma_L();         // e4..e7
Triple Sigma_L_prime();   // e0..e3
extern const std::array<int, 3> kSplitWeights;  // diag(-1,-1,1)

// Paracomplex structure: swap e0<->e4, e1<->e5, e2<->e6, e3<->e7
SMat K_matrix();

}  // namespace cayley::fx
