#ifndef PLURIND_INDICATOR_HPP
#define PLURIND_INDICATOR_HPP

#include <complex>
#include <span>
#include <vector>

#include "polynomial.hpp"

namespace plurind {

// Polyhedral indicator: psi(t) = max_{g in G} <g, t> on R^n, with generator
// set G of nonnegative rational points. Construction canonicalizes G to the
// extreme points of conv(G), which leaves psi (and every min/max statistic
// computed from G) unchanged.
class PolyhedralIndicator {
 public:
  PolyhedralIndicator(int n, std::vector<QVec> generators);

  int dimension() const { return n_; }
  const std::vector<QVec>& generators() const { return generators_; }

  // psi(t), exact. t may have entries of any sign.
  Rational eval_psi(const QVec& t) const;
  double eval_psi(std::span<const double> t) const;

  // Psi(y) = psi(log|y_1|, ..., log|y_n|), extended continuously: a zero
  // coordinate contributes -inf wherever a generator has a positive entry
  // there, and 0 where the entry is 0. Returns -infinity when every
  // generator is killed.
  double eval_Psi(std::span<const std::complex<double>> y) const;

  // psi(1): logarithmic type.
  Rational sigma() const;
  // (psi(1_1), ..., psi(1_n)): logarithmic multitype.
  QVec multitype() const;
  // psi(a) for strictly positive a: directional Lelong number at infinity.
  Rational directional_lelong_inf(const QVec& a) const;

  // min_{g in G} <a, g>: the Lelong number at the basepoint the generators
  // were computed at (a = 1 gives the classical one).
  Rational min_weight(const QVec& a) const;

  // Locally bounded off the origin: every nonempty proper coordinate subset
  // S admits a generator vanishing on S.
  bool is_I0() const;

  friend bool operator==(const PolyhedralIndicator& a,
                         const PolyhedralIndicator& b) {
    return a.n_ == b.n_ && a.generators_ == b.generators_;
  }

 private:
  int n_;
  std::vector<QVec> generators_;  // extreme points of conv(G), lex sorted
};

// Indicator of log|P| at x: generators are the Taylor support of P at x.
PolyhedralIndicator from_polynomial_at(const Polynomial& p, const GPoint& x);

// Indicator of (1/q) log sum |P_k|^q at x: union of component supports;
// independent of q.
PolyhedralIndicator from_map_at(const PolyMap& m, const GPoint& x);

// Pointwise supremum: union of generator sets.
PolyhedralIndicator sup_combine(const std::vector<PolyhedralIndicator>& parts);

// Indicator of the indicator at x: for every coordinate subset S supported
// on the nonzero coordinates of x, add each generator with S zeroed out.
// Equals the identity when x = 0.
PolyhedralIndicator positive_closure(const PolyhedralIndicator& phi,
                                     const GPoint& x);

// The u of the calculus: a polynomial map payload with its basepoint.
// u(z) = (1/q) log sum_k |P_k(z)|^q  (single component: log|P|).
struct UFunction {
  PolyMap map;
  GPoint basepoint;

  UFunction(PolyMap m, GPoint x);

  int dimension() const { return map.dimension(); }

  // Float evaluation, overflow-safe via max-shift; -infinity on common zeros.
  double eval(std::span<const std::complex<double>> z) const;

  PolyhedralIndicator indicator_at(const GPoint& x) const;
  PolyhedralIndicator indicator_at_basepoint() const;

  // Indicator attained at generic basepoints: generators are the downward
  // closure of the supports at 0 (all J with d^J P_k not identically zero).
  PolyhedralIndicator generic_indicator() const;
};

// nu(u, x) and its directional variants: min_{g} <a, g> over the generators
// of the indicator of u at x. a must be strictly positive; defaults to 1.
Rational lelong_at_point(const UFunction& u, const GPoint& x);
Rational lelong_at_point(const UFunction& u, const GPoint& x, const QVec& a);

// S_a indicator: generators a_k^{-1} 1_k for strictly positive a.
PolyhedralIndicator s_a_indicator(const QVec& a);

}  // namespace plurind

#endif
