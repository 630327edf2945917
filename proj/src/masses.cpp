#include "masses.hpp"

namespace plurind {

Rational factorial(int n) {
  Rational f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

RatPolytope theta_plus(const PolyhedralIndicator& phi) {
  std::vector<QVec> pts = phi.generators();
  pts.push_back(qvec_zero(phi.dimension()));
  return hull(std::move(pts));
}

Rational newton_number(const PolyhedralIndicator& phi) {
  return factorial(phi.dimension()) * theta_plus(phi).volume;
}

MassReport mass_decomposition(const PolyhedralIndicator& phi) {
  if (!phi.is_I0())
    fail(ErrorCode::Degenerate,
         "mass decomposition needs an indicator locally bounded off 0");
  MassReport r;
  r.total = newton_number(phi);
  r.tau_doubleprime =
      factorial(phi.dimension()) * hull(phi.generators()).volume;
  r.tau_prime = r.total - r.tau_doubleprime;
  return r;
}

Rational directional_bound(const PolyhedralIndicator& phi, const QVec& a) {
  Rational psi = phi.directional_lelong_inf(a);  // validates a > 0
  Rational num = 1;
  for (int k = 0; k < phi.dimension(); ++k) num *= psi;
  Rational den = 1;
  for (const auto& v : a) den *= v;
  return num / den;
}

Rational multitype_bound(const PolyhedralIndicator& phi) {
  Rational b = factorial(phi.dimension());
  for (const auto& s : phi.multitype()) b *= s;
  return b;
}

BoundChain bound_chain(const UFunction& u) {
  BoundChain c;
  c.newton_at_basepoint = newton_number(u.indicator_at_basepoint());
  PolyhedralIndicator generic = u.generic_indicator();
  c.newton_generic = newton_number(generic);
  c.multitype_bound = multitype_bound(generic);
  if (c.newton_at_basepoint > c.newton_generic ||
      c.newton_generic > c.multitype_bound)
    fail(ErrorCode::Numeric, "bound chain is not nondecreasing");
  return c;
}

}  // namespace plurind
