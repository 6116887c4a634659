#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cayley/clifford.hpp"
#include "cayley/form.hpp"

namespace cayley {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(int line, int col, const std::string& msg);
};

struct ParseOptions {
  bool normalize = false;  // drop terms with a repeated index instead of failing
};

// Text formats, line oriented, '#' starts a comment:
//   form dim=<n> grade=<k>      then terms "[a,b,c,d] e0^e1^..."
//   spinor sig=<8,0|4,4>        then 16 quadruples
//   metric dim=<n>              then n rows of n quadruples
// [a,b,c,d] is a + b sqrt2 + i (c + d sqrt2), entries integers or p/q.
Scalar parse_scalar(const std::string& text);
std::string serialize_scalar(const Scalar& s);

Form parse_form(const std::string& text, const ParseOptions& opt = {});
// several consecutive form sections (a triple file holds three)
std::vector<Form> parse_forms(const std::string& text, const ParseOptions& opt = {});
std::string serialize_form(const Form& f);

Spinor parse_spinor(const std::string& text);
std::string serialize_spinor(const Spinor& s);

SMat parse_metric(const std::string& text);
std::string serialize_metric(const SMat& g);

std::string read_file(const std::string& path);

// Random document for round-trip testing.
Form random_form(std::mt19937_64& rng, int dim, int grade, int terms);

}  // namespace cayley
