#include "cayley/fixtures.hpp"

#include <cstring>
#include <vector>

namespace cayley::fx {

Form F(const char* digits, const Scalar& c) {
  std::vector<int> idx;
  for (const char* p = digits; *p; ++p) idx.push_back(*p - '0');
  return Form::basis(8, idx, c);
}

Form e(int i) { return Form::basis(8, {i}); }

Scalar half() { return Scalar::frac(1, 2); }

Scalar inv_sqrt2() { return Scalar(Q2(0, mpq_class(1, 2))); }

namespace {

const Scalar I = Scalar::i();

Spinor up(Signature s, std::initializer_list<std::pair<int, Scalar>> terms) {
  Vec v(8);
  for (const auto& [a, c] : terms) v[a] += c;
  return Spinor::plus(s, v);
}

}  // namespace

Spinor unit(Signature s) { return Spinor::plus_unit(s, 0); }

Spinor psi_p() { return up(Signature::Euclid, {{0, half()}, {4, half() * I}}); }

Spinor psi_p_split() { return up(Signature::Split, {{0, half()}, {7, half() * I}}); }

Spinor psi_plus() { return up(Signature::Split, {{0, half()}, {4, half()}}); }

Spinor psi_minus() { return up(Signature::Split, {{0, half()}, {4, -half()}}); }

Spinor psi_L() { return up(Signature::Split, {{0, inv_sqrt2()}, {4, inv_sqrt2() * I}}); }

Spinor pair_p() {
  Scalar c = inv_sqrt2() * half();
  return up(Signature::Split, {{0, c}, {3, -c}, {4, c * I}, {7, c * I}});
}

Spinor pair_p_prime() {
  Scalar c = inv_sqrt2() * half();
  return up(Signature::Split, {{0, c}, {3, c}, {4, c * I}, {7, -c * I}});
}

Form Omega_std() {
  return wedge({e(4) + I * e(0), e(1) + I * e(5), e(2) + I * e(6), e(3) + I * e(7)});
}

Form omega_std() { return F("15") + F("26") + F("37") + F("40"); }

Form Omega_split() {
  return wedge({e(7) + I * e(0), e(1) - I * e(2), e(3) - I * e(4), e(5) + I * e(6)});
}

Form omega_split() { return F("12") + F("34") + F("56") + F("70"); }

Form Omega_plus() { return wedge({e(4) + e(0), e(1) + e(5), e(2) + e(6), e(3) + e(7)}); }

Form Omega_minus() { return wedge({e(4) - e(0), e(1) - e(5), e(2) - e(6), e(3) - e(7)}); }

Form omega_r() { return omega_std(); }

Form phi_L() {
  return F("123") - wedge(e(1), F("45", I) - F("67")) - wedge(e(2), F("46", I) - F("75")) -
         wedge(e(3), F("47", I) - F("56"));
}

Form star_phi_L() {
  return F("4567", I) + wedge(F("23"), F("45", I) - F("67")) + wedge(F("31"), F("46", I) - F("75")) +
         wedge(F("12"), F("47", I) - F("56"));
}

Form Omega_c() { return wedge({e(0) - I * e(7), I * e(3) + e(4), e(1) + e(6), e(2) - e(5)}); }

Form Omega_c_prime() { return wedge({e(0) + I * e(7), I * e(3) - e(4), e(1) - e(6), e(2) + e(5)}); }

Form omega_c() { return F("61") + F("25") + F("34", I) - F("07", I); }

Triple Sigma() { return {F("41") - F("23"), F("42") - F("31"), F("43") - F("12")}; }

Triple Sigma_prime() { return {F("05") - F("67"), F("06") - F("75"), F("07") - F("56")}; }

Triple Sigma_s() { return {F("54") + F("36"), F("53") + F("64"), F("56") - F("43")}; }

Triple Sigma_s_prime() { return {F("01") + F("27"), F("02") + F("71"), F("07") - F("12")}; }

Triple Sigma_L() { return {F("45", I) - F("67"), F("46", I) - F("75"), F("47", I) - F("56")}; }

Triple Sigma_L_prime() { return {F("01", I) - F("23"), F("02", I) - F("31"), F("03", I) - F("12")}; }

const std::array<int, 3> kSplitWeights{-1, -1, 1};

SMat K_matrix() {
  SMat k(8, 8);
  for (int a = 0; a < 4; ++a) {
    k(a, a + 4) = Scalar(1);
    k(a + 4, a) = Scalar(1);
  }
  return k;
}

}  // namespace cayley::fx
