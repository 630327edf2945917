#include "indicator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "hull.hpp"

namespace plurind {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

PolyhedralIndicator::PolyhedralIndicator(int n, std::vector<QVec> generators)
    : n_(n) {
  if (n < 1 || n > kMaxDimension)
    fail(ErrorCode::Dimension, "indicator dimension must be 1..4");
  if (generators.empty())
    fail(ErrorCode::Invalid, "indicator needs at least one generator");
  for (const auto& g : generators) {
    if (g.size() != static_cast<size_t>(n))
      fail(ErrorCode::Dimension, "generator dimension mismatch");
    for (const auto& v : g)
      if (v < 0) fail(ErrorCode::Invalid, "indicator generators must be >= 0");
  }
  // Canonical form: extreme points of conv(G). psi is a max of linear
  // functionals, so dropping non-extreme generators changes nothing.
  generators_ = hull(std::move(generators)).vertices;
}

Rational PolyhedralIndicator::eval_psi(const QVec& t) const {
  if (t.size() != static_cast<size_t>(n_))
    fail(ErrorCode::Dimension, "psi argument dimension mismatch");
  Rational best = dot(generators_.front(), t);
  for (size_t k = 1; k < generators_.size(); ++k)
    best = std::max(best, dot(generators_[k], t));
  return best;
}

double PolyhedralIndicator::eval_psi(std::span<const double> t) const {
  if (t.size() != static_cast<size_t>(n_))
    fail(ErrorCode::Dimension, "psi argument dimension mismatch");
  double best = kNegInf;
  for (const auto& g : generators_) {
    double s = 0;
    for (size_t k = 0; k < t.size(); ++k) s += to_double(g[k]) * t[k];
    best = std::max(best, s);
  }
  return best;
}

double PolyhedralIndicator::eval_Psi(
    std::span<const std::complex<double>> y) const {
  if (y.size() != static_cast<size_t>(n_))
    fail(ErrorCode::Dimension, "Psi argument dimension mismatch");
  std::vector<double> logabs(y.size());
  for (size_t k = 0; k < y.size(); ++k) {
    double a = std::abs(y[k]);
    logabs[k] = a == 0.0 ? kNegInf : std::log(a);
  }
  double best = kNegInf;
  for (const auto& g : generators_) {
    double s = 0;
    for (size_t k = 0; k < logabs.size(); ++k) {
      if (g[k] == 0) continue;  // 0 * (-inf) = 0 by convention
      if (logabs[k] == kNegInf) {
        s = kNegInf;
        break;
      }
      s += to_double(g[k]) * logabs[k];
    }
    best = std::max(best, s);
  }
  return best;
}

Rational PolyhedralIndicator::sigma() const {
  return eval_psi(QVec(static_cast<size_t>(n_), Rational(1)));
}

QVec PolyhedralIndicator::multitype() const {
  QVec out;
  out.reserve(static_cast<size_t>(n_));
  for (int k = 0; k < n_; ++k) {
    QVec unit(static_cast<size_t>(n_), Rational(0));
    unit[static_cast<size_t>(k)] = 1;
    out.push_back(eval_psi(unit));
  }
  return out;
}

Rational PolyhedralIndicator::directional_lelong_inf(const QVec& a) const {
  if (a.size() != static_cast<size_t>(n_))
    fail(ErrorCode::Dimension, "direction dimension mismatch");
  for (const auto& v : a)
    if (v <= 0)
      fail(ErrorCode::Invalid, "direction must be strictly positive");
  return eval_psi(a);
}

Rational PolyhedralIndicator::min_weight(const QVec& a) const {
  if (a.size() != static_cast<size_t>(n_))
    fail(ErrorCode::Dimension, "weight dimension mismatch");
  Rational best = dot(generators_.front(), a);
  for (size_t k = 1; k < generators_.size(); ++k)
    best = std::min(best, dot(generators_[k], a));
  return best;
}

bool PolyhedralIndicator::is_I0() const {
  // Subsets of {0,...,n-1}, nonempty and proper.
  for (unsigned mask = 1; mask + 1 < (1u << n_); ++mask) {
    bool found = false;
    for (const auto& g : generators_) {
      bool vanishes = true;
      for (int k = 0; k < n_ && vanishes; ++k)
        if ((mask >> k) & 1u) vanishes = g[static_cast<size_t>(k)] == 0;
      if (vanishes) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

PolyhedralIndicator from_polynomial_at(const Polynomial& p, const GPoint& x) {
  std::vector<QVec> gens;
  for (const auto& e : p.support_at(x)) gens.push_back(to_qvec(e));
  return PolyhedralIndicator(p.dimension(), std::move(gens));
}

PolyhedralIndicator from_map_at(const PolyMap& m, const GPoint& x) {
  std::vector<QVec> gens;
  for (const auto& comp : m.components)
    for (const auto& e : comp.support_at(x)) gens.push_back(to_qvec(e));
  return PolyhedralIndicator(m.dimension(), std::move(gens));
}

PolyhedralIndicator sup_combine(
    const std::vector<PolyhedralIndicator>& parts) {
  if (parts.empty()) fail(ErrorCode::Invalid, "sup of no indicators");
  const int n = parts.front().dimension();
  std::vector<QVec> gens;
  for (const auto& phi : parts) {
    if (phi.dimension() != n)
      fail(ErrorCode::Dimension, "sup_combine dimension mismatch");
    const auto& g = phi.generators();
    gens.insert(gens.end(), g.begin(), g.end());
  }
  return PolyhedralIndicator(n, std::move(gens));
}

PolyhedralIndicator positive_closure(const PolyhedralIndicator& phi,
                                     const GPoint& x) {
  const int n = phi.dimension();
  if (x.size() != static_cast<size_t>(n))
    fail(ErrorCode::Dimension, "closure point dimension mismatch");
  unsigned closable = 0;
  for (int k = 0; k < n; ++k)
    if (!x[static_cast<size_t>(k)].is_zero()) closable |= 1u << k;
  std::set<QVec> gens;
  for (const auto& g : phi.generators()) {
    for (unsigned sub = closable;; sub = (sub - 1) & closable) {
      QVec zeroed = g;
      for (int k = 0; k < n; ++k)
        if ((sub >> k) & 1u) zeroed[static_cast<size_t>(k)] = 0;
      gens.insert(std::move(zeroed));
      if (sub == 0) break;
    }
  }
  return PolyhedralIndicator(n, std::vector<QVec>(gens.begin(), gens.end()));
}

UFunction::UFunction(PolyMap m, GPoint x)
    : map(std::move(m)), basepoint(std::move(x)) {
  if (basepoint.size() != static_cast<size_t>(map.dimension()))
    fail(ErrorCode::Dimension, "basepoint dimension mismatch");
  for (const auto& comp : map.components)
    if (comp.is_zero())
      fail(ErrorCode::Degenerate, "map has an identically zero component");
}

double UFunction::eval(std::span<const std::complex<double>> z) const {
  const double q = to_double(map.q);
  double maxlog = kNegInf;
  std::vector<double> logs;
  logs.reserve(map.components.size());
  for (const auto& comp : map.components) {
    double a = std::abs(comp.eval(z));
    double l = a == 0.0 ? kNegInf : std::log(a);
    logs.push_back(l);
    maxlog = std::max(maxlog, l);
  }
  if (maxlog == kNegInf) return kNegInf;
  if (logs.size() == 1) return maxlog;
  double s = 0;
  for (double l : logs) s += l == kNegInf ? 0.0 : std::exp(q * (l - maxlog));
  return maxlog + std::log(s) / q;
}

PolyhedralIndicator UFunction::indicator_at(const GPoint& x) const {
  return from_map_at(map, x);
}

PolyhedralIndicator UFunction::indicator_at_basepoint() const {
  return indicator_at(basepoint);
}

PolyhedralIndicator UFunction::generic_indicator() const {
  const int n = dimension();
  std::set<ExpVec> closure;
  for (const auto& comp : map.components) {
    if (comp.is_zero())
      fail(ErrorCode::Degenerate, "map has an identically zero component");
    for (const auto& [e, c] : comp.terms()) {
      // All J <= e componentwise.
      ExpVec j = expvec_zero(n);
      for (;;) {
        closure.insert(j);
        int k = 0;
        while (k < n && j[static_cast<size_t>(k)] == e[static_cast<size_t>(k)]) {
          j[static_cast<size_t>(k)] = 0;
          ++k;
        }
        if (k == n) break;
        j[static_cast<size_t>(k)] += 1;
      }
    }
  }
  std::vector<QVec> gens;
  gens.reserve(closure.size());
  for (const auto& e : closure) gens.push_back(to_qvec(e));
  return PolyhedralIndicator(n, std::move(gens));
}

Rational lelong_at_point(const UFunction& u, const GPoint& x, const QVec& a) {
  for (const auto& v : a)
    if (v <= 0) fail(ErrorCode::Invalid, "weight must be strictly positive");
  return u.indicator_at(x).min_weight(a);
}

Rational lelong_at_point(const UFunction& u, const GPoint& x) {
  return lelong_at_point(u, x,
                         QVec(static_cast<size_t>(u.dimension()), Rational(1)));
}

PolyhedralIndicator s_a_indicator(const QVec& a) {
  const int n = static_cast<int>(a.size());
  std::vector<QVec> gens;
  for (int k = 0; k < n; ++k) {
    if (a[static_cast<size_t>(k)] <= 0)
      fail(ErrorCode::Invalid, "S_a needs a strictly positive direction");
    QVec g(static_cast<size_t>(n), Rational(0));
    g[static_cast<size_t>(k)] = 1 / a[static_cast<size_t>(k)];
    gens.push_back(std::move(g));
  }
  return PolyhedralIndicator(n, std::move(gens));
}

}  // namespace plurind
