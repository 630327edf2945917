#include "polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace plurind {

Rational parse_rational(const std::string& text) {
  if (text.empty()) fail(ErrorCode::Parse, "empty rational literal");
  size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) fail(ErrorCode::Parse, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    fail(ErrorCode::Parse, "malformed rational '" + text + "'");
  }
}

std::string to_string(const Gaussian& g) {
  if (g.im == 0) return to_string(g.re);
  std::string im_part;
  if (g.im == 1)
    im_part = "i";
  else if (g.im == -1)
    im_part = "-i";
  else
    im_part = to_string(g.im) + "i";
  if (g.re == 0) return im_part;
  if (g.im > 0) return to_string(g.re) + "+" + im_part;
  return to_string(g.re) + im_part;
}

std::string to_string(const QVec& v) {
  std::string s = "(";
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) s += ", ";
    s += to_string(v[k]);
  }
  return s + ")";
}

std::string to_string(const ExpVec& v) {
  std::string s = "(";
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) s += ", ";
    s += std::to_string(v[k]);
  }
  return s + ")";
}

Polynomial::Polynomial(int n) : n_(n) {
  if (n < 1 || n > kMaxDimension)
    fail(ErrorCode::Dimension,
         "polynomial dimension must be 1..4, got " + std::to_string(n));
}

Polynomial::Polynomial(int n, TermMap terms) : Polynomial(n) {
  for (auto it = terms.begin(); it != terms.end();) {
    const auto& [e, c] = *it;
    if (e.size() != static_cast<size_t>(n))
      fail(ErrorCode::Dimension, "term exponent dimension mismatch");
    for (int v : e)
      if (v < 0) fail(ErrorCode::Invalid, "negative exponent in term");
    it = c.is_zero() ? terms.erase(it) : std::next(it);
  }
  terms_ = std::move(terms);
}

Polynomial Polynomial::constant(int n, Gaussian c) {
  TermMap t;
  if (!c.is_zero()) t.emplace(expvec_zero(n), std::move(c));
  return Polynomial(n, std::move(t));
}

Polynomial Polynomial::monomial(int n, ExpVec e, Gaussian c) {
  TermMap t;
  if (!c.is_zero()) t.emplace(std::move(e), std::move(c));
  return Polynomial(n, std::move(t));
}

Polynomial Polynomial::variable(int n, int k) {
  ExpVec e = expvec_zero(n);
  e[static_cast<size_t>(k)] = 1;
  return monomial(n, std::move(e), Gaussian(1));
}

Gaussian Polynomial::coefficient(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Gaussian() : it->second;
}

int Polynomial::degree_in(int k) const {
  if (is_zero()) fail(ErrorCode::Degenerate, "degree of zero polynomial");
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(k)]);
  return d;
}

int Polynomial::total_degree() const {
  if (is_zero()) fail(ErrorCode::Degenerate, "degree of zero polynomial");
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

void Polynomial::check_dim(const Polynomial& other) const {
  if (n_ != other.n_)
    fail(ErrorCode::Dimension, "polynomial dimension mismatch: " +
                                   std::to_string(n_) + " vs " +
                                   std::to_string(other.n_));
}

Polynomial operator+(const Polynomial& p, const Polynomial& r) {
  p.check_dim(r);
  Polynomial::TermMap out = p.terms_;
  for (const auto& [e, c] : r.terms_) {
    auto [it, inserted] = out.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return Polynomial(p.n_, std::move(out));
}

Polynomial operator-(const Polynomial& p) {
  Polynomial::TermMap out;
  for (const auto& [e, c] : p.terms_) out.emplace(e, -c);
  return Polynomial(p.n_, std::move(out));
}

Polynomial operator-(const Polynomial& p, const Polynomial& r) {
  return p + (-r);
}

Polynomial operator*(const Polynomial& p, const Polynomial& r) {
  p.check_dim(r);
  Polynomial::TermMap out;
  for (const auto& [e1, c1] : p.terms_) {
    for (const auto& [e2, c2] : r.terms_) {
      ExpVec e = e1 + e2;
      Gaussian c = c1 * c2;
      auto [it, inserted] = out.emplace(std::move(e), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return Polynomial(p.n_, std::move(out));
}

Polynomial operator*(const Gaussian& c, const Polynomial& p) {
  Polynomial::TermMap out;
  if (!c.is_zero())
    for (const auto& [e, pc] : p.terms_) out.emplace(e, c * pc);
  return Polynomial(p.n_, std::move(out));
}

Polynomial add(const Polynomial& p, const Polynomial& r) { return p + r; }
Polynomial mul(const Polynomial& p, const Polynomial& r) { return p * r; }

Polynomial Polynomial::derivative(int k) const {
  TermMap out;
  const size_t uk = static_cast<size_t>(k);
  for (const auto& [e, c] : terms_) {
    if (e[uk] == 0) continue;
    ExpVec d = e;
    d[uk] -= 1;
    out.emplace(std::move(d), Gaussian(Rational(e[uk])) * c);
  }
  return Polynomial(n_, std::move(out));
}

Polynomial Polynomial::taylor_shift(const GPoint& x0) const {
  if (x0.size() != static_cast<size_t>(n_))
    fail(ErrorCode::Dimension, "shift point dimension mismatch");
  Polynomial cur = *this;
  for (size_t k = 0; k < x0.size(); ++k) {
    const Gaussian& a = x0[k];
    if (a.is_zero()) continue;
    // Group terms by the exponents of the other variables; each group is a
    // dense univariate coefficient vector in z_k, shifted in place by the
    // classic Horner/Pascal loop.
    std::map<ExpVec, std::vector<Gaussian>> groups;
    for (const auto& [e, c] : cur.terms_) {
      ExpVec key = e;
      int dk = key[k];
      key[k] = 0;
      auto& coeffs = groups[key];
      if (coeffs.size() <= static_cast<size_t>(dk))
        coeffs.resize(static_cast<size_t>(dk) + 1);
      coeffs[static_cast<size_t>(dk)] = c;
    }
    TermMap out;
    for (auto& [key, coeffs] : groups) {
      const int d = static_cast<int>(coeffs.size()) - 1;
      for (int i = 0; i < d; ++i)
        for (int j = d - 1; j >= i; --j)
          coeffs[static_cast<size_t>(j)] +=
              a * coeffs[static_cast<size_t>(j) + 1];
      for (int j = 0; j <= d; ++j) {
        if (coeffs[static_cast<size_t>(j)].is_zero()) continue;
        ExpVec e = key;
        e[k] = j;
        out.emplace(std::move(e), coeffs[static_cast<size_t>(j)]);
      }
    }
    cur = Polynomial(n_, std::move(out));
  }
  return cur;
}

std::vector<ExpVec> Polynomial::support_at(const GPoint& x0) const {
  if (is_zero())
    fail(ErrorCode::Degenerate, "support of the zero polynomial is undefined");
  Polynomial shifted = taylor_shift(x0);
  std::vector<ExpVec> support;
  support.reserve(shifted.terms_.size());
  for (const auto& [e, c] : shifted.terms_) support.push_back(e);
  return support;
}

std::vector<int> Polynomial::partial_degrees() const {
  if (is_zero())
    fail(ErrorCode::Degenerate, "partial degrees of the zero polynomial");
  std::vector<int> d(static_cast<size_t>(n_), 0);
  for (const auto& [e, c] : terms_)
    for (size_t k = 0; k < e.size(); ++k) d[k] = std::max(d[k], e[k]);
  return d;
}

namespace {

template <class Value, class Coeff>
Value eval_with_powers(const Polynomial::TermMap& terms, int n,
                       const std::vector<int>& maxdeg,
                       const std::vector<std::vector<Value>>& pow,
                       Coeff to_value) {
  (void)n;
  (void)maxdeg;
  Value acc{};
  for (const auto& [e, c] : terms) {
    Value t = to_value(c);
    for (size_t k = 0; k < e.size(); ++k)
      if (e[k] > 0) t = t * pow[k][static_cast<size_t>(e[k])];
    acc = acc + t;
  }
  return acc;
}

}  // namespace

std::complex<double> Polynomial::eval(
    std::span<const std::complex<double>> z) const {
  if (z.size() != static_cast<size_t>(n_))
    fail(ErrorCode::Dimension, "evaluation point dimension mismatch");
  if (is_zero()) return {};
  std::vector<int> maxdeg = partial_degrees();
  std::vector<std::vector<std::complex<double>>> pow(
      static_cast<size_t>(n_));
  for (size_t k = 0; k < pow.size(); ++k) {
    pow[k].resize(static_cast<size_t>(maxdeg[k]) + 1);
    pow[k][0] = 1.0;
    for (int j = 1; j <= maxdeg[k]; ++j)
      pow[k][static_cast<size_t>(j)] = pow[k][static_cast<size_t>(j) - 1] * z[k];
  }
  return eval_with_powers<std::complex<double>>(
      terms_, n_, maxdeg, pow,
      [](const Gaussian& c) { return c.to_complex(); });
}

Gaussian Polynomial::eval_exact(const GPoint& z) const {
  if (z.size() != static_cast<size_t>(n_))
    fail(ErrorCode::Dimension, "evaluation point dimension mismatch");
  if (is_zero()) return {};
  std::vector<int> maxdeg = partial_degrees();
  std::vector<std::vector<Gaussian>> pow(static_cast<size_t>(n_));
  for (size_t k = 0; k < pow.size(); ++k) {
    pow[k].resize(static_cast<size_t>(maxdeg[k]) + 1);
    pow[k][0] = Gaussian(1);
    for (int j = 1; j <= maxdeg[k]; ++j)
      pow[k][static_cast<size_t>(j)] = pow[k][static_cast<size_t>(j) - 1] * z[k];
  }
  return eval_with_powers<Gaussian>(terms_, n_, maxdeg, pow,
                                    [](const Gaussian& c) { return c; });
}

PolyMap::PolyMap(std::vector<Polynomial> comps, Rational weight)
    : components(std::move(comps)), q(std::move(weight)) {
  if (components.empty())
    fail(ErrorCode::Invalid, "polynomial map needs at least one component");
  const int n = components.front().dimension();
  for (const auto& p : components)
    if (p.dimension() != n)
      fail(ErrorCode::Dimension, "map components have mixed dimensions");
  if (q <= 0) fail(ErrorCode::Invalid, "exponent weight q must be positive");
}

Polynomial coefficient_in(const Polynomial& p, int var, int k) {
  Polynomial::TermMap out;
  const size_t uv = static_cast<size_t>(var);
  for (const auto& [e, c] : p.terms()) {
    if (e[uv] != k) continue;
    ExpVec key = e;
    key[uv] = 0;
    out.emplace(std::move(key), c);
  }
  return Polynomial(p.dimension(), std::move(out));
}

Polynomial to_univariate(const Polynomial& p, int keep) {
  Polynomial::TermMap out;
  const size_t uk = static_cast<size_t>(keep);
  for (const auto& [e, c] : p.terms()) {
    for (size_t k = 0; k < e.size(); ++k)
      if (k != uk && e[k] != 0)
        fail(ErrorCode::Invalid, "polynomial is not univariate in the kept variable");
    out.emplace(ExpVec{e[uk]}, c);
  }
  return Polynomial(1, std::move(out));
}

Polynomial divexact_univariate(const Polynomial& a, const Polynomial& b) {
  if (a.dimension() != 1 || b.dimension() != 1)
    fail(ErrorCode::Invalid, "divexact needs univariate polynomials");
  if (b.is_zero()) fail(ErrorCode::Invalid, "division by zero polynomial");
  if (a.is_zero()) return Polynomial::zero(1);
  int db = b.degree_in(0);
  Gaussian lb = b.coefficient(ExpVec{db});
  Polynomial rem = a;
  Polynomial::TermMap qterms;
  while (!rem.is_zero()) {
    int dr = rem.degree_in(0);
    if (dr < db)
      fail(ErrorCode::Numeric, "inexact univariate division (nonzero remainder)");
    Gaussian qc = rem.coefficient(ExpVec{dr}) / lb;
    qterms.emplace(ExpVec{dr - db}, qc);
    rem = rem - Polynomial::monomial(1, ExpVec{dr - db}, qc) * b;
  }
  return Polynomial(1, std::move(qterms));
}

std::vector<std::complex<double>> to_complex_coeffs(const Polynomial& p) {
  if (p.dimension() != 1)
    fail(ErrorCode::Invalid, "complex coefficient list needs a univariate polynomial");
  if (p.is_zero()) return {};
  std::vector<std::complex<double>> coeffs(
      static_cast<size_t>(p.degree_in(0)) + 1);
  for (const auto& [e, c] : p.terms())
    coeffs[static_cast<size_t>(e[0])] = c.to_complex();
  return coeffs;
}

}  // namespace plurind
