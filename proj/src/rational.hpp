#ifndef PLURIND_RATIONAL_HPP
#define PLURIND_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "error.hpp"

namespace plurind {

// Exact arbitrary-precision rational. cpp_rational keeps values reduced with
// a positive denominator, which is exactly the canonical form we need.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Point of Q^n (indicator generators, polytope vertices, directions).
using QVec = std::vector<Rational>;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Reduced form, "p" when integral, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "p" or "p/q" with optional leading sign; used by the system-file
// parser and the C API.
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

}  // namespace plurind

#endif
