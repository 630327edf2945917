#ifndef PLURIND_SYSFILE_HPP
#define PLURIND_SYSFILE_HPP

#include <string>
#include <utility>
#include <vector>

#include "indicator.hpp"

namespace plurind {

// Parsed polynomial-system file.
//
// Grammar (one statement per line, '#' comments):
//   vars: x, y                  declares 1..4 variables ('i' is reserved)
//   P1 = x^2*y - 1              polynomial definition
//   at: (1, -1)                 basepoint, defaults to 0
//   q: 2                        exponent weight, defaults to 2
//
// Expressions: sums of products of factors; factors are rationals (a or
// a/b), the imaginary unit i, declared variables, or parenthesized sums,
// each with an optional nonnegative '^' exponent. Implicit products are
// rejected.
struct SystemFile {
  std::string name;  // file stem; empty when parsed from a bare string
  std::vector<std::string> variables;
  std::vector<std::pair<std::string, Polynomial>> polynomials;
  GPoint basepoint;
  Rational q = 2;

  int dimension() const { return static_cast<int>(variables.size()); }
  UFunction to_ufunction() const;
};

SystemFile parse_system(const std::string& text);

// Grammar-compliant rendering; parse(print(s)) reproduces the term sets.
std::string print_system(const SystemFile& sys);

// "(c1, ..., cn)" with constant expressions per coordinate.
GPoint parse_point(const std::string& text, int dimension);

std::string print_point(const GPoint& x);

}  // namespace plurind

#endif
