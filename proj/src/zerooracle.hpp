#ifndef PLURIND_ZEROORACLE_HPP
#define PLURIND_ZEROORACLE_HPP

#include <complex>
#include <vector>

#include "hull.hpp"
#include "polynomial.hpp"

namespace plurind {

struct Zero {
  std::vector<std::complex<double>> point;
  double residual = 0;      // sum of |P_k| at the polished point
  double jacobian_abs = 0;  // |det J| at the point (n = 2), |P'| for n = 1
};

struct ZeroSet {
  std::vector<Zero> zeros;
  int count = 0;  // distinct zeros after dedup; multiplicities not resolved
  bool certified_simple = false;  // all jacobian_abs > 1e-6
};

// All deg(p) roots (with multiplicity) of a univariate polynomial by
// simultaneous Durand-Kerner iteration from a perturbed circle start,
// Newton-polished. Throws Numeric after 500 sweeps without convergence;
// callers retry with a scaled variable.
std::vector<std::complex<double>> roots_univariate(const Polynomial& p);

// Float-coefficient core (ascending coefficients). Same contract.
std::vector<std::complex<double>> roots_of_coeffs(
    std::vector<std::complex<double>> coeffs);

// roots_univariate with automatic variable rescaling on non-convergence.
std::vector<std::complex<double>> roots_univariate_robust(const Polynomial& p);

// Exact Sylvester determinant of two bivariate polynomials with respect to
// the eliminated variable, by fraction-free (Bareiss) elimination over the
// univariate polynomial ring in the kept variable. Errors with "common
// component" when the determinant vanishes identically.
Polynomial sylvester_resultant(const Polynomial& p1, const Polynomial& p2,
                               int eliminate);

// Brute-force common-zero count for an n = 2 pair with discrete zeros:
// resultant roots give candidate first coordinates, second coordinates come
// from the evaluated univariate polynomials, every candidate is polished by
// 2-D Newton on the full system and filtered by residual.
ZeroSet count_common_zeros_2d(const Polynomial& p1, const Polynomial& p2);

// n = 1 oracle: polished roots of a single univariate polynomial.
ZeroSet count_zeros_1d(const Polynomial& p);

// Hit-ratio volume estimate over the bounding box, deterministic per seed.
// Degenerate polytopes report 0.
double monte_carlo_volume(const RatPolytope& p, long samples,
                          unsigned long long seed);

}  // namespace plurind

#endif
