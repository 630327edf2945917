#ifndef PLURIND_EXPVEC_HPP
#define PLURIND_EXPVEC_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "rational.hpp"

namespace plurind {

// Monomial exponent / lattice point of Z+^n. Dimension is the length;
// std::vector's lexicographic operator< gives the deterministic term order.
using ExpVec = std::vector<int>;

inline constexpr int kMaxDimension = 4;

inline ExpVec expvec_zero(int n) { return ExpVec(static_cast<size_t>(n)); }

inline ExpVec operator+(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

// a <= b componentwise.
inline bool dominated_by(const ExpVec& a, const ExpVec& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

inline QVec to_qvec(const ExpVec& e) {
  QVec q;
  q.reserve(e.size());
  for (int v : e) q.emplace_back(v);
  return q;
}

inline QVec qvec_zero(int n) { return QVec(static_cast<size_t>(n)); }

// Exact inner product of rational vectors.
inline Rational dot(const QVec& a, const QVec& b) {
  Rational s = 0;
  for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

inline Rational dot(const QVec& a, const ExpVec& b) {
  Rational s = 0;
  for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

std::string to_string(const QVec& v);
std::string to_string(const ExpVec& v);

}  // namespace plurind

#endif
