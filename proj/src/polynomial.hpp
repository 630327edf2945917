#ifndef PLURIND_POLYNOMIAL_HPP
#define PLURIND_POLYNOMIAL_HPP

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "expvec.hpp"
#include "gaussian.hpp"

namespace plurind {

// Sparse multivariate polynomial over the Gaussian rationals. Terms map an
// exponent vector to a nonzero coefficient; the zero polynomial is the empty
// map. All operations keep that canonical form.
class Polynomial {
 public:
  using TermMap = std::map<ExpVec, Gaussian>;

  explicit Polynomial(int n);
  Polynomial(int n, TermMap terms);

  static Polynomial zero(int n) { return Polynomial(n); }
  static Polynomial constant(int n, Gaussian c);
  static Polynomial monomial(int n, ExpVec e, Gaussian c);
  // The variable z_k as a polynomial.
  static Polynomial variable(int n, int k);

  int dimension() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  // Coefficient of e (zero Gaussian if absent).
  Gaussian coefficient(const ExpVec& e) const;

  // Max exponent of z_k over all terms; 0 for constants. Errors on the zero
  // polynomial.
  int degree_in(int k) const;
  // Max total degree over all terms. Errors on the zero polynomial.
  int total_degree() const;

  friend Polynomial operator+(const Polynomial& p, const Polynomial& r);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& r);
  friend Polynomial operator-(const Polynomial& p);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& r);
  friend Polynomial operator*(const Gaussian& c, const Polynomial& p);
  friend bool operator==(const Polynomial& p, const Polynomial& r) {
    return p.n_ == r.n_ && p.terms_ == r.terms_;
  }

  // d/dz_k, exact.
  Polynomial derivative(int k) const;

  // q with q(s) = p(x0 + s), exact (iterated univariate Horner shift).
  Polynomial taylor_shift(const GPoint& x0) const;

  // Exponent support of the Taylor expansion at x0: the set of J with
  // d^J p (x0) != 0. Errors on the zero polynomial.
  std::vector<ExpVec> support_at(const GPoint& x0) const;

  // (degree_in(1), ..., degree_in(n)). Errors on the zero polynomial.
  std::vector<int> partial_degrees() const;

  std::complex<double> eval(std::span<const std::complex<double>> z) const;
  Gaussian eval_exact(const GPoint& z) const;

 private:
  void check_dim(const Polynomial& other) const;

  int n_;
  TermMap terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& r);
Polynomial mul(const Polynomial& p, const Polynomial& r);

// Finite polynomial mapping with the exponent weight q of the
// (1/q) log sum |P_k|^q construction. The indicator is independent of q.
struct PolyMap {
  std::vector<Polynomial> components;
  Rational q = 2;

  PolyMap() = default;
  PolyMap(std::vector<Polynomial> comps, Rational weight = 2);

  int dimension() const { return components.front().dimension(); }
};

// --- helpers used by the resultant machinery (exact, univariate) ---

// p viewed in variable `var`: coefficient of var^k as a polynomial in the
// remaining variables (same ambient dimension, exponent of `var` zeroed).
Polynomial coefficient_in(const Polynomial& p, int var, int k);

// Compress a 2-variable polynomial that only uses variable `keep` into a
// univariate polynomial. Errors if any other exponent is nonzero.
Polynomial to_univariate(const Polynomial& p, int keep);

// Exact univariate division; errors if the division leaves a remainder.
Polynomial divexact_univariate(const Polynomial& a, const Polynomial& b);

// Ascending coefficient list of a univariate polynomial as complex doubles.
std::vector<std::complex<double>> to_complex_coeffs(const Polynomial& p);

}  // namespace plurind

#endif
