#pragma once

#include <random>

#include "cayley/clifford.hpp"
#include "cayley/form.hpp"

namespace testing {

using namespace cayley;

// small exact values; complex if asked
inline Scalar rnd(std::mt19937_64& rng, bool complex = false, bool surd = false) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  Q2 re(mpq_class(num(rng), den(rng)), surd ? mpq_class(num(rng), den(rng)) : mpq_class(0));
  Q2 im = complex ? Q2(mpq_class(num(rng), den(rng))) : Q2();
  return Scalar(re, im);
}

inline Vec rnd_vec(std::mt19937_64& rng, int n, bool complex = false) {
  Vec v(n);
  for (auto& c : v) c = rnd(rng, complex);
  return v;
}

inline Form rnd_form(std::mt19937_64& rng, int dim, int grade, int terms = 6, bool complex = false) {
  Form f(dim, grade);
  std::vector<int> idx(dim);
  for (int i = 0; i < dim; ++i) idx[i] = i;
  for (int t = 0; t < terms; ++t) {
    std::shuffle(idx.begin(), idx.end(), rng);
    f += Form::basis(dim, std::vector<int>(idx.begin(), idx.begin() + grade), rnd(rng, complex));
  }
  return f;
}

inline Spinor rnd_plus(std::mt19937_64& rng, Signature s, bool complex = false) {
  return Spinor::plus(s, rnd_vec(rng, 8, complex));
}

}  // namespace testing
