#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>

#include "masses.hpp"
#include "numericlab.hpp"
#include "zerooracle.hpp"

namespace plurind {

namespace {

using nlohmann::json;

json rational_json(const Rational& q) { return to_string(q); }

json qvec_json(const QVec& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(rational_json(q));
  return a;
}

json gaussian_json(const Gaussian& g) {
  return json{{"re", to_string(g.re)}, {"im", to_string(g.im)}};
}

json complex_json(const std::complex<double>& z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

json system_json(const SystemFile& sys) {
  json polys = json::array();
  for (const auto& [name, p] : sys.polynomials)
    polys.push_back(json{{"name", name}});
  // Polynomial bodies in the file grammar, recovered from the printer so
  // reports round-trip.
  {
    std::istringstream text(print_system(sys));
    std::string line;
    size_t idx = 0;
    while (std::getline(text, line)) {
      size_t eq = line.find(" = ");
      if (eq == std::string::npos) continue;
      if (idx < polys.size()) polys[idx++]["text"] = line.substr(eq + 3);
    }
  }
  json out{{"variables", sys.variables},
           {"polynomials", polys},
           {"q", rational_json(sys.q)}};
  json base = json::array();
  for (const auto& g : sys.basepoint) base.push_back(gaussian_json(g));
  out["basepoint"] = base;
  if (!sys.name.empty()) out["name"] = sys.name;
  return out;
}

json skeleton(const SystemFile& sys, const std::string& command) {
  return json{{"schema", "plurind-report/1"},
              {"command", command},
              {"system", system_json(sys)}};
}

json indicator_block(const PolyhedralIndicator& phi) {
  json gens = json::array();
  for (const auto& g : phi.generators()) gens.push_back(qvec_json(g));
  return json{{"generators", gens},
              {"sigma", rational_json(phi.sigma())},
              {"multitype", qvec_json(phi.multitype())},
              {"in_I0", phi.is_I0()}};
}

json newton_block(const PolyhedralIndicator& phi) {
  RatPolytope theta = theta_plus(phi);
  json verts = json::array();
  for (const auto& v : theta.vertices) verts.push_back(qvec_json(v));
  json out{{"theta_vertices", verts},
           {"volume", rational_json(theta.volume)},
           {"newton_number", rational_json(newton_number(phi))}};
  if (phi.is_I0()) {
    MassReport mass = mass_decomposition(phi);
    out["tau_prime"] = rational_json(mass.tau_prime);
    out["tau_doubleprime"] = rational_json(mass.tau_doubleprime);
  } else {
    // The decomposition is only defined for indicators in I_0.
    out["tau_prime"] = nullptr;
    out["tau_doubleprime"] = nullptr;
  }
  return out;
}

json zeros_block(const ZeroSet& zs) {
  json zeros = json::array();
  for (const auto& z : zs.zeros) {
    json pt = json::array();
    for (const auto& c : z.point) pt.push_back(complex_json(c));
    zeros.push_back(json{{"point", pt},
                         {"residual", z.residual},
                         {"jacobian_abs", z.jacobian_abs}});
  }
  return json{{"count", zs.count},
              {"certified_simple", zs.certified_simple},
              {"zeros", zeros}};
}

ZeroSet run_oracle(const SystemFile& sys) {
  const int n = sys.dimension();
  if (n > 2)
    fail(ErrorCode::Dimension, "the zero oracle supports dimensions 1 and 2");
  if (n == 1) {
    if (sys.polynomials.size() != 1)
      fail(ErrorCode::Invalid,
           "the 1-D oracle expects a single univariate polynomial");
    return count_zeros_1d(to_univariate(sys.polynomials.front().second, 0));
  }
  if (sys.polynomials.size() != 2)
    fail(ErrorCode::Degenerate,
         "the 2-D oracle needs exactly two polynomials (discrete zero set)");
  return count_common_zeros_2d(sys.polynomials[0].second,
                               sys.polynomials[1].second);
}

}  // namespace

bool oracle_applicable(const SystemFile& sys) {
  return (sys.dimension() == 1 && sys.polynomials.size() == 1) ||
         (sys.dimension() == 2 && sys.polynomials.size() == 2);
}

std::optional<Rational> rationalize(double value, long max_den, double tol) {
  if (!std::isfinite(value)) return std::nullopt;
  // Continued-fraction convergents with bounded denominator.
  double x = value;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(x);
    if (fl > 1e15 || fl < -1e15) break;
    long a = static_cast<long>(fl);
    long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double rem = x - fl;
    if (rem < 1e-15) break;
    x = 1.0 / rem;
  }
  if (q1 == 0) return std::nullopt;
  if (std::abs(value - static_cast<double>(p1) / static_cast<double>(q1)) > tol)
    return std::nullopt;
  return Rational(p1, q1);
}

json indicator_report(const SystemFile& sys) {
  UFunction u = sys.to_ufunction();
  PolyhedralIndicator phi = u.indicator_at_basepoint();
  json out = skeleton(sys, "indicator");
  out["indicator"] = indicator_block(phi);
  QVec ones(static_cast<size_t>(sys.dimension()), Rational(1));
  out["indicator"]["lelong_at_basepoint"] = rational_json(phi.min_weight(ones));
  return out;
}

json newton_report(const SystemFile& sys) {
  UFunction u = sys.to_ufunction();
  PolyhedralIndicator phi = u.indicator_at_basepoint();
  json out = skeleton(sys, "newton");
  out["indicator"] = indicator_block(phi);
  out["newton"] = newton_block(phi);
  return out;
}

json bounds_report(const SystemFile& sys, const std::vector<QVec>& directions) {
  UFunction u = sys.to_ufunction();
  PolyhedralIndicator phi = u.indicator_at_basepoint();
  BoundChain chain = bound_chain(u);
  json out = skeleton(sys, "bounds");
  out["bounds"] = json{
      {"chain",
       json{{"newton_at_basepoint", rational_json(chain.newton_at_basepoint)},
            {"newton_generic", rational_json(chain.newton_generic)},
            {"multitype_bound", rational_json(chain.multitype_bound)}}}};
  json dirs = json::array();
  for (const auto& a : directions) {
    dirs.push_back(json{{"a", qvec_json(a)},
                        {"bound", rational_json(directional_bound(phi, a))}});
  }
  out["bounds"]["directional"] = dirs;
  return out;
}

json zeros_report(const SystemFile& sys) {
  for (const auto& [name, p] : sys.polynomials)
    if (p.is_zero())
      fail(ErrorCode::Degenerate, "polynomial '" + name + "' is identically zero");
  json out = skeleton(sys, "zeros");
  out["zeros"] = zeros_block(run_oracle(sys));
  return out;
}

VerifyOutcome run_verify(const SystemFile& sys, const VerifyOptions& opts) {
  VerifyOutcome outcome;
  UFunction u = sys.to_ufunction();
  PolyhedralIndicator phi = u.indicator_at_basepoint();
  PolyhedralIndicator generic = u.generic_indicator();
  const int n = sys.dimension();

  auto add = [&outcome](CheckResult r) {
    if (!r.pass && !r.skipped) ++outcome.violations;
    outcome.checks.push_back(std::move(r));
  };

  // Mass bound chain, exact.
  {
    CheckResult r;
    r.name = "kou_chain";
    BoundChain chain = bound_chain(u);
    r.pass = chain.newton_at_basepoint <= chain.newton_generic &&
             chain.newton_generic <= chain.multitype_bound;
    r.detail = to_string(chain.newton_at_basepoint) + " <= " +
               to_string(chain.newton_generic) + " <= " +
               to_string(chain.multitype_bound);
    add(std::move(r));
  }

  // Oracle-side checks: zero count against the Newton number, and the
  // multitype bound against the sum of n-th powers of Lelong numbers.
  std::optional<ZeroSet> zeros;
  if (oracle_applicable(sys)) zeros = run_oracle(sys);
  {
    CheckResult r;
    r.name = "oracle_kou";
    if (!zeros) {
      r.skipped = true;
      r.pass = true;
      r.detail = "oracle not applicable";
    } else {
      Rational bound = newton_number(phi);
      r.pass = Rational(zeros->count) <= bound;
      r.detail = "count " + std::to_string(zeros->count) + " <= " + to_string(bound);
    }
    add(std::move(r));
  }
  {
    CheckResult r;
    r.name = "dyson_sum";
    if (!zeros) {
      r.skipped = true;
      r.pass = true;
      r.detail = "oracle not applicable";
    } else {
      Rational sum = 0;
      for (const auto& z : zeros->zeros) {
        GPoint exact;
        bool all_rational = true;
        for (const auto& c : z.point) {
          auto re = rationalize(c.real(), 64, 1e-9);
          auto im = rationalize(c.imag(), 64, 1e-9);
          if (!re || !im) {
            all_rational = false;
            break;
          }
          exact.emplace_back(*re, *im);
        }
        Rational nu = 1;
        if (all_rational)
          nu = lelong_at_point(u, exact);
        Rational power = 1;
        for (int k = 0; k < n; ++k) power *= nu;
        sum += power;
      }
      Rational bound = multitype_bound(generic);
      r.pass = sum <= bound;
      r.detail = "sum nu^n = " + to_string(sum) + " <= " + to_string(bound);
    }
    add(std::move(r));
  }

  // Directional mass bounds, exact rational comparisons at seeded random
  // positive rational directions.
  {
    CheckResult r;
    r.name = "ocenka";
    std::mt19937_64 rng(opts.seed);
    Rational n0 = newton_number(phi);
    Rational ng = newton_number(generic);
    bool ok = true;
    std::string witness;
    for (int it = 0; it < opts.ocenka_directions && ok; ++it) {
      QVec a;
      for (int k = 0; k < n; ++k) {
        long num = static_cast<long>(rng() % 12) + 1;
        long den = static_cast<long>(rng() % 12) + 1;
        a.emplace_back(num, den);
      }
      if (!(directional_bound(phi, a) >= n0 && directional_bound(generic, a) >= ng)) {
        ok = false;
        witness = to_string(a);
      }
    }
    r.pass = ok;
    r.detail = ok ? std::to_string(opts.ocenka_directions) + " directions"
                  : "violated at a = " + witness;
    add(std::move(r));
  }

  // Global majorization by the indicator.
  {
    CheckResult r;
    r.name = "majorization";
    MajorizationReport m = majorization_check(u, sys.basepoint,
                                              opts.majorization_points,
                                              opts.majorization_slack);
    r.pass = m.violations == 0;
    std::ostringstream detail;
    detail << m.samples << " points, max excess " << m.max_violation;
    r.detail = detail.str();
    add(std::move(r));
  }

  // Tangent convergence in L1 over the annulus grid.
  {
    CheckResult r;
    r.name = "tangent";
    GridSpec grid;
    std::vector<double> dist;
    for (int m : opts.tangent_orders)
      dist.push_back(tangent_l1(u, sys.basepoint, m, grid));
    bool decreasing = true;
    int bumps = 0;
    for (size_t k = 1; k < dist.size(); ++k) {
      if (dist[k] > dist[k - 1]) {
        if (dist[k] > 1.1 * dist[k - 1] || ++bumps > 1) decreasing = false;
      }
    }
    r.pass = decreasing && dist.back() < opts.tangent_final_threshold;
    std::ostringstream detail;
    for (size_t k = 0; k < dist.size(); ++k)
      detail << (k ? " " : "") << dist[k];
    r.detail = detail.str();
    add(std::move(r));
  }

  return outcome;
}

json verify_report(const SystemFile& sys, const VerifyOptions& opts) {
  VerifyOutcome outcome = run_verify(sys, opts);
  json checks = json::array();
  for (const auto& c : outcome.checks)
    checks.push_back(json{{"name", c.name},
                          {"pass", c.pass},
                          {"skipped", c.skipped},
                          {"detail", c.detail}});
  json out = skeleton(sys, "verify");
  out["verify"] = json{{"checks", checks}, {"violations", outcome.violations}};
  return out;
}

std::string render_newton_svg(const SystemFile& sys) {
  if (sys.dimension() != 2)
    fail(ErrorCode::Dimension, "SVG rendering is only available for n = 2");
  UFunction u = sys.to_ufunction();
  RatPolytope theta = theta_plus(u.indicator_at_basepoint());

  double max_x = 1, max_y = 1;
  for (const auto& v : theta.vertices) {
    max_x = std::max(max_x, to_double(v[0]));
    max_y = std::max(max_y, to_double(v[1]));
  }
  const double scale = 48;
  const double pad = 32;
  const double width = pad * 2 + scale * max_x;
  const double height = pad * 2 + scale * max_y;
  auto sx = [&](double x) { return pad + scale * x; };
  auto sy = [&](double y) { return height - pad - scale * y; };

  // Boundary order for the polygon: angular sort around the centroid.
  std::vector<std::pair<double, double>> pts;
  double cx = 0, cy = 0;
  for (const auto& v : theta.vertices) {
    pts.emplace_back(to_double(v[0]), to_double(v[1]));
    cx += pts.back().first;
    cy += pts.back().second;
  }
  cx /= static_cast<double>(pts.size());
  cy /= static_cast<double>(pts.size());
  std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
    return std::atan2(a.second - cy, a.first - cx) <
           std::atan2(b.second - cy, b.first - cx);
  });

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int gx = 0; gx <= static_cast<int>(max_x); ++gx)
    for (int gy = 0; gy <= static_cast<int>(max_y); ++gy)
      svg << "  <circle class=\"lattice\" cx=\"" << sx(gx) << "\" cy=\""
          << sy(gy) << "\" r=\"1.5\" fill=\"#bbbbbb\"/>\n";
  svg << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\""
      << sx(max_x) + pad / 2 << "\" y2=\"" << sy(0)
      << "\" stroke=\"black\"/>\n";
  svg << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\""
      << sx(0) << "\" y2=\"" << sy(max_y) - pad / 2
      << "\" stroke=\"black\"/>\n";
  svg << "  <polygon points=\"";
  for (size_t k = 0; k < pts.size(); ++k) {
    if (k) svg << " ";
    svg << sx(pts[k].first) << "," << sy(pts[k].second);
  }
  svg << "\" fill=\"#4477aa55\" stroke=\"#225588\" stroke-width=\"2\"/>\n";
  for (const auto& [px, py] : pts)
    svg << "  <circle class=\"vertex\" cx=\"" << sx(px) << "\" cy=\"" << sy(py)
        << "\" r=\"3\" fill=\"#225588\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

std::string to_string(const nlohmann::json& j) { return j.dump(2); }

}  // namespace plurind
