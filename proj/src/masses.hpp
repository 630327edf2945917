#ifndef PLURIND_MASSES_HPP
#define PLURIND_MASSES_HPP

#include "hull.hpp"
#include "indicator.hpp"

namespace plurind {

// Total Monge-Ampere mass split of an I_0 indicator into the point mass at
// the origin and the mass spread on the unit torus.
struct MassReport {
  Rational total;            // Newton number
  Rational tau_prime;        // delta(0) weight
  Rational tau_doubleprime;  // torus weight
};

// Bound chain for a polynomial-map payload: mass candidate at the basepoint,
// at a generic basepoint, and the multitype bound of the generic indicator.
// Guaranteed nondecreasing.
struct BoundChain {
  Rational newton_at_basepoint;
  Rational newton_generic;
  Rational multitype_bound;
};

// Newton polyhedron at infinity of the indicator: conv(G union {0}); the set
// of a with <a,t> <= psi^+(t) for all t.
RatPolytope theta_plus(const PolyhedralIndicator& phi);

// n! Vol(theta_plus): the total Monge-Ampere mass of the indicator.
Rational newton_number(const PolyhedralIndicator& phi);

// Requires phi in I_0. tau'' = n! Vol(conv G), tau' = newton number - tau''.
MassReport mass_decomposition(const PolyhedralIndicator& phi);

// psi(a)^n / (a_1 ... a_n) for strictly positive a; an upper bound for the
// mass, tight on S_a.
Rational directional_bound(const PolyhedralIndicator& phi, const QVec& a);

// n! sigma_1 ... sigma_n.
Rational multitype_bound(const PolyhedralIndicator& phi);

BoundChain bound_chain(const UFunction& u);

Rational factorial(int n);

}  // namespace plurind

#endif
