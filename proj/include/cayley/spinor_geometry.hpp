#pragma once

#include "cayley/clifford.hpp"

namespace cayley {

struct NullSubspace {
  SMat basis;  // 8 x dim, columns
  int dim = 0;
  int real_index = 0;
};

// Signature metric of the vector space the spinor lives over.
SMat vector_metric(Signature s);

bool is_pure(const Spinor& psi);
NullSubspace annihilator(const Spinor& psi);
int real_index(const Spinor& psi);

int span_dim(const SMat& cols);
int intersection_dim(const SMat& a, const SMat& b);
bool same_span(const SMat& a, const SMat& b);
SMat conj(const SMat& m);

struct Intersection {
  int common = 0;  // 0, 2 or 4 shared null directions
  Form witness;    // B_2 when common == 2
};
Intersection intersection_type(const Spinor& phi, const Spinor& psi);

struct ComplexStructureData {
  SMat J;
  Form omega;
  Form Omega;
  NullSubspace eplus;
};
// Needs real index 0 and <conj(psi), psi> = 1/2. M(psi) is the +i eigenspace.
ComplexStructureData structure_from_pure(const Spinor& psi);

struct ParaComplexStructureData {
  SMat K;
  Form omega_r;
  Form Omega_plus, Omega_minus;
};
// Needs real pure spinors with <psi+, psi-> = 1/2.
ParaComplexStructureData structure_from_real_pair(const Spinor& plus, const Spinor& minus);

// Omega ^ (v _| Omega) = 0 for all basis v
bool is_decomposable4(const Form& Omega);

}  // namespace cayley
