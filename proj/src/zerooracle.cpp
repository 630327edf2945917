#include "zerooracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace plurind {

namespace {

using Complex = std::complex<double>;

Complex eval_coeffs(const std::vector<Complex>& c, Complex z) {
  Complex acc = 0.0;
  for (size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
  return acc;
}

std::vector<Complex> derivative_coeffs(const std::vector<Complex>& c) {
  std::vector<Complex> d;
  for (size_t k = 1; k < c.size(); ++k)
    d.push_back(c[k] * static_cast<double>(k));
  return d;
}

}  // namespace

std::vector<Complex> roots_of_coeffs(std::vector<Complex> coeffs) {
  // Trim numerically dead leading coefficients.
  double scale = 0;
  for (const auto& c : coeffs) scale = std::max(scale, std::abs(c));
  if (scale == 0) fail(ErrorCode::Degenerate, "root finding on the zero polynomial");
  while (coeffs.size() > 1 && std::abs(coeffs.back()) < 1e-14 * scale)
    coeffs.pop_back();
  const int d = static_cast<int>(coeffs.size()) - 1;
  if (d < 1) fail(ErrorCode::Invalid, "root finding needs degree >= 1");

  // Monic normalization.
  Complex lead = coeffs.back();
  for (auto& c : coeffs) c /= lead;
  auto dcoeffs = derivative_coeffs(coeffs);

  // Cauchy-bound radius, perturbed circle start.
  double radius = 0;
  for (int k = 0; k < d; ++k)
    radius = std::max(radius, std::abs(coeffs[static_cast<size_t>(k)]));
  radius = 1.0 + radius;
  std::vector<Complex> z(static_cast<size_t>(d));
  for (int j = 0; j < d; ++j) {
    double angle = 2.0 * std::numbers::pi * j / d + 0.4;
    double frac = std::fmod(0.618033988749895 * (j + 1), 1.0);
    z[static_cast<size_t>(j)] = std::polar(radius * (0.6 + 0.35 * frac), angle);
  }

  bool converged = false;
  for (int sweep = 0; sweep < 500 && !converged; ++sweep) {
    double step = 0;
    for (int j = 0; j < d; ++j) {
      Complex denom = 1.0;
      for (int k = 0; k < d; ++k)
        if (k != j)
          denom *= z[static_cast<size_t>(j)] - z[static_cast<size_t>(k)];
      if (denom == 0.0) {
        // Coinciding iterates: nudge deterministically.
        z[static_cast<size_t>(j)] += Complex(1e-8, 1e-8) * (1.0 + std::abs(z[static_cast<size_t>(j)]));
        step = 1;
        continue;
      }
      Complex dz = eval_coeffs(coeffs, z[static_cast<size_t>(j)]) / denom;
      z[static_cast<size_t>(j)] -= dz;
      step = std::max(step, std::abs(dz) / (1.0 + std::abs(z[static_cast<size_t>(j)])));
    }
    converged = step < 1e-14;
  }
  if (!converged) {
    // Accept if the residuals are already fine (clusters converge slowly).
    double worst = 0;
    for (const auto& r : z) worst = std::max(worst, std::abs(eval_coeffs(coeffs, r)));
    if (worst > 1e-9)
      fail(ErrorCode::Numeric, "Durand-Kerner did not converge in 500 sweeps");
  }

  // Newton polish (simple roots tighten to machine precision; multiple roots
  // keep their cluster values).
  for (auto& root : z) {
    for (int it = 0; it < 12; ++it) {
      Complex pv = eval_coeffs(coeffs, root);
      Complex dv = eval_coeffs(dcoeffs, root);
      if (std::abs(dv) < 1e-12) break;
      Complex step = pv / dv;
      if (!(std::abs(step) < 1e-15 * (1.0 + std::abs(root)))) root -= step;
    }
  }

  double worst = 0;
  for (const auto& r : z) worst = std::max(worst, std::abs(eval_coeffs(coeffs, r)));
  if (worst > 1e-8)
    fail(ErrorCode::Numeric, "root residuals above 1e-8 after polishing");

  std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return z;
}

std::vector<Complex> roots_univariate(const Polynomial& p) {
  if (p.dimension() != 1)
    fail(ErrorCode::Invalid, "roots_univariate needs a univariate polynomial");
  if (p.is_zero() || p.degree_in(0) < 1)
    fail(ErrorCode::Degenerate, "root finding needs degree >= 1");
  return roots_of_coeffs(to_complex_coeffs(p));
}

std::vector<Complex> roots_univariate_robust(const Polynomial& p) {
  static const double kScales[] = {1.0, 2.0, 0.5, 4.0, 0.25, 8.0, 0.125};
  const Error* last = nullptr;
  Error saved(ErrorCode::Numeric, "");
  for (double s : kScales) {
    try {
      if (s == 1.0) return roots_univariate(p);
      // Solve q(w) = p(s w) and map roots back.
      auto coeffs = to_complex_coeffs(p);
      double f = 1.0;
      for (auto& c : coeffs) {
        c *= f;
        f *= s;
      }
      auto roots = roots_of_coeffs(coeffs);
      for (auto& r : roots) r *= s;
      return roots;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Numeric) throw;
      saved = e;
      last = &saved;
    }
  }
  throw *last;
}

Polynomial sylvester_resultant(const Polynomial& p1, const Polynomial& p2,
                               int eliminate) {
  if (p1.dimension() != 2 || p2.dimension() != 2)
    fail(ErrorCode::Invalid, "resultant needs two bivariate polynomials");
  if (eliminate != 0 && eliminate != 1)
    fail(ErrorCode::Invalid, "eliminated variable index must be 0 or 1");
  if (p1.is_zero() || p2.is_zero())
    fail(ErrorCode::Degenerate, "resultant of a zero polynomial");
  const int keep = 1 - eliminate;
  const int d1 = p1.degree_in(eliminate);
  const int d2 = p2.degree_in(eliminate);
  if (d1 < 1 || d2 < 1)
    fail(ErrorCode::Invalid,
         "both polynomials need positive degree in the eliminated variable");

  const int m = d1 + d2;
  const Polynomial zero1 = Polynomial::zero(1);
  std::vector<std::vector<Polynomial>> mat(
      static_cast<size_t>(m), std::vector<Polynomial>(static_cast<size_t>(m), zero1));
  auto coeff = [&](const Polynomial& p, int k) {
    return to_univariate(coefficient_in(p, eliminate, k), keep);
  };
  // d2 shifted rows of p1's coefficients (leading first), then d1 rows of p2's.
  for (int r = 0; r < d2; ++r)
    for (int k = 0; k <= d1; ++k)
      mat[static_cast<size_t>(r)][static_cast<size_t>(r + d1 - k)] = coeff(p1, k);
  for (int r = 0; r < d1; ++r)
    for (int k = 0; k <= d2; ++k)
      mat[static_cast<size_t>(d2 + r)][static_cast<size_t>(r + d2 - k)] = coeff(p2, k);

  // Bareiss fraction-free elimination; divisions are exact in Q(i)[x].
  int sign = 1;
  Polynomial prev = Polynomial::constant(1, Gaussian(1));
  for (int k = 0; k + 1 < m; ++k) {
    if (mat[static_cast<size_t>(k)][static_cast<size_t>(k)].is_zero()) {
      int pivot = -1;
      for (int r = k + 1; r < m; ++r)
        if (!mat[static_cast<size_t>(r)][static_cast<size_t>(k)].is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0)
        fail(ErrorCode::Degenerate,
             "common component: the resultant vanishes identically");
      std::swap(mat[static_cast<size_t>(k)], mat[static_cast<size_t>(pivot)]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i) {
      for (int j = k + 1; j < m; ++j) {
        Polynomial num =
            mat[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                mat[static_cast<size_t>(k)][static_cast<size_t>(k)] -
            mat[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                mat[static_cast<size_t>(k)][static_cast<size_t>(j)];
        mat[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            divexact_univariate(num, prev);
      }
      mat[static_cast<size_t>(i)][static_cast<size_t>(k)] = zero1;
    }
    prev = mat[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }
  Polynomial det = mat[static_cast<size_t>(m) - 1][static_cast<size_t>(m) - 1];
  if (sign < 0) det = -det;
  if (det.is_zero())
    fail(ErrorCode::Degenerate,
         "common component: the resultant vanishes identically");
  return det;
}

namespace {

std::vector<Complex> evaluated_coeffs(const Polynomial& p, int var_of_coeff,
                                      Complex at) {
  // p(x, y) as a univariate polynomial in `var_of_coeff`, with the other
  // variable evaluated at `at`.
  const int other = 1 - var_of_coeff;
  const int deg = p.degree_in(var_of_coeff);
  std::vector<Complex> out(static_cast<size_t>(deg) + 1, Complex(0));
  for (int k = 0; k <= deg; ++k) {
    Polynomial ck = to_univariate(coefficient_in(p, var_of_coeff, k), other);
    if (ck.is_zero()) continue;
    out[static_cast<size_t>(k)] = eval_coeffs(to_complex_coeffs(ck), at);
  }
  return out;
}

double system_residual(const Polynomial& p1, const Polynomial& p2,
                       const Complex z[2]) {
  std::array<Complex, 2> pt{z[0], z[1]};
  return std::abs(p1.eval(pt)) + std::abs(p2.eval(pt));
}

}  // namespace

ZeroSet count_common_zeros_2d(const Polynomial& p1, const Polynomial& p2) {
  if (p1.dimension() != 2 || p2.dimension() != 2)
    fail(ErrorCode::Invalid, "2-D oracle needs bivariate polynomials");
  if (p1.is_zero() || p2.is_zero())
    fail(ErrorCode::Degenerate, "2-D oracle needs nonzero polynomials");

  // Prefer eliminating y; fall back to x.
  int eliminate = 1;
  if (p1.degree_in(1) < 1 || p2.degree_in(1) < 1) eliminate = 0;
  if (p1.degree_in(eliminate) < 1 || p2.degree_in(eliminate) < 1) {
    // One polynomial is constant in both variables or the system splits into
    // univariate factors; handle the split case, reject constants.
    const Polynomial* px = nullptr;
    const Polynomial* py = nullptr;
    for (const Polynomial* p : {&p1, &p2}) {
      if (p->degree_in(0) >= 1 && p->degree_in(1) == 0) px = p;
      if (p->degree_in(1) >= 1 && p->degree_in(0) == 0) py = p;
    }
    if (!px || !py)
      fail(ErrorCode::Degenerate,
           "zero set is not discrete (a component is constant)");
    ZeroSet out;
    auto dx = px->derivative(0);
    auto dy = py->derivative(1);
    for (Complex rx : roots_univariate_robust(to_univariate(*px, 0))) {
      for (Complex ry : roots_univariate_robust(to_univariate(*py, 1))) {
        Zero zero;
        zero.point = {rx, ry};
        Complex z[2] = {rx, ry};
        zero.residual = system_residual(p1, p2, z);
        std::array<Complex, 2> pt{rx, ry};
        zero.jacobian_abs = std::abs(dx.eval(pt)) * std::abs(dy.eval(pt));
        out.zeros.push_back(std::move(zero));
      }
    }
    out.count = static_cast<int>(out.zeros.size());
    out.certified_simple = std::all_of(
        out.zeros.begin(), out.zeros.end(),
        [](const Zero& z) { return z.jacobian_abs > 1e-6; });
    return out;
  }

  const int keep = 1 - eliminate;
  Polynomial res = sylvester_resultant(p1, p2, eliminate);
  if (res.degree_in(0) < 1) return {};  // nonzero constant: no common zeros

  std::vector<Complex> first_coords = roots_univariate_robust(res);
  // Dedup resultant roots into distinct candidates.
  std::vector<Complex> candidates;
  for (const auto& r : first_coords) {
    bool fresh = true;
    for (const auto& c : candidates)
      if (std::abs(c - r) < 1e-6) {
        fresh = false;
        break;
      }
    if (fresh) candidates.push_back(r);
  }

  const Polynomial d1x = p1.derivative(0), d1y = p1.derivative(1);
  const Polynomial d2x = p2.derivative(0), d2y = p2.derivative(1);
  double coeff_scale = 0;
  for (const auto& [e, c] : p1.terms())
    coeff_scale = std::max(coeff_scale, std::abs(c.to_complex()));
  for (const auto& [e, c] : p2.terms())
    coeff_scale = std::max(coeff_scale, std::abs(c.to_complex()));

  ZeroSet out;
  for (const Complex& xc : candidates) {
    // Second-coordinate candidates from both evaluated polynomials; the
    // loose filter keeps the ones compatible with the other equation, the
    // Newton polish decides.
    std::vector<Complex> second;
    for (const Polynomial* p : {&p1, &p2}) {
      const Polynomial* other = (p == &p1) ? &p2 : &p1;
      std::vector<Complex> coeffs = evaluated_coeffs(*p, eliminate, xc);
      double scale = 0;
      for (const auto& c : coeffs) scale = std::max(scale, std::abs(c));
      if (scale < 1e-10 * coeff_scale) continue;  // p vanishes along the line
      while (coeffs.size() > 1 && std::abs(coeffs.back()) < 1e-10 * scale)
        coeffs.pop_back();
      if (coeffs.size() < 2) continue;
      std::vector<Complex> roots;
      try {
        roots = roots_of_coeffs(coeffs);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::Numeric) throw;
        continue;  // hopeless evaluation; the other polynomial gets its turn
      }
      for (const Complex& yc : roots) {
        Complex z[2];
        z[keep] = xc;
        z[eliminate] = yc;
        std::array<Complex, 2> pt{z[0], z[1]};
        double other_val = std::abs(other->eval(pt));
        if (other_val < 1e-3 * (1.0 + coeff_scale)) second.push_back(yc);
      }
    }

    for (const Complex& yc : second) {
      Complex z[2];
      z[keep] = xc;
      z[eliminate] = yc;
      // 2-D Newton polish on the full system.
      bool ok = false;
      for (int it = 0; it < 60; ++it) {
        std::array<Complex, 2> pt{z[0], z[1]};
        Complex f1 = p1.eval(pt), f2 = p2.eval(pt);
        if (std::abs(f1) + std::abs(f2) < 1e-13 * (1.0 + coeff_scale)) {
          ok = true;
          break;
        }
        Complex j11 = d1x.eval(pt), j12 = d1y.eval(pt);
        Complex j21 = d2x.eval(pt), j22 = d2y.eval(pt);
        Complex det = j11 * j22 - j12 * j21;
        if (std::abs(det) < 1e-14) break;
        Complex dx = (f1 * j22 - f2 * j12) / det;
        Complex dy = (f2 * j11 - f1 * j21) / det;
        z[0] -= dx;
        z[1] -= dy;
        if (std::abs(dx) + std::abs(dy) < 1e-15 * (1.0 + std::abs(z[0]) + std::abs(z[1]))) {
          std::array<Complex, 2> pt2{z[0], z[1]};
          ok = std::abs(p1.eval(pt2)) + std::abs(p2.eval(pt2)) <
               1e-8;
          break;
        }
      }
      if (!ok) continue;
      double residual = system_residual(p1, p2, z);
      if (residual >= 1e-8) continue;

      bool fresh = true;
      for (const auto& existing : out.zeros)
        if (std::abs(existing.point[0] - z[0]) +
                std::abs(existing.point[1] - z[1]) <
            1e-6) {
          fresh = false;
          break;
        }
      if (!fresh) continue;

      Zero zero;
      zero.point = {z[0], z[1]};
      zero.residual = residual;
      std::array<Complex, 2> pt{z[0], z[1]};
      zero.jacobian_abs = std::abs(d1x.eval(pt) * d2y.eval(pt) -
                                   d1y.eval(pt) * d2x.eval(pt));
      out.zeros.push_back(std::move(zero));
    }
  }

  std::sort(out.zeros.begin(), out.zeros.end(), [](const Zero& a, const Zero& b) {
    if (a.point[0].real() != b.point[0].real())
      return a.point[0].real() < b.point[0].real();
    if (a.point[0].imag() != b.point[0].imag())
      return a.point[0].imag() < b.point[0].imag();
    return a.point[1].real() < b.point[1].real();
  });
  out.count = static_cast<int>(out.zeros.size());
  out.certified_simple =
      !out.zeros.empty() &&
      std::all_of(out.zeros.begin(), out.zeros.end(),
                  [](const Zero& z) { return z.jacobian_abs > 1e-6; });
  return out;
}

ZeroSet count_zeros_1d(const Polynomial& p) {
  if (p.dimension() != 1)
    fail(ErrorCode::Invalid, "1-D oracle needs a univariate polynomial");
  if (p.is_zero()) fail(ErrorCode::Degenerate, "1-D oracle needs a nonzero polynomial");
  ZeroSet out;
  if (p.degree_in(0) < 1) return out;  // nonzero constant
  Polynomial dp = p.derivative(0);
  std::vector<Complex> roots = roots_univariate_robust(p);
  for (const Complex& r : roots) {
    bool fresh = true;
    for (const auto& existing : out.zeros)
      if (std::abs(existing.point[0] - r) < 1e-6) {
        fresh = false;
        break;
      }
    if (!fresh) continue;
    Zero zero;
    zero.point = {r};
    std::array<Complex, 1> pt{r};
    zero.residual = std::abs(p.eval(pt));
    zero.jacobian_abs = std::abs(dp.eval(pt));
    out.zeros.push_back(std::move(zero));
  }
  out.count = static_cast<int>(out.zeros.size());
  out.certified_simple =
      !out.zeros.empty() &&
      std::all_of(out.zeros.begin(), out.zeros.end(),
                  [](const Zero& z) { return z.jacobian_abs > 1e-6; });
  return out;
}

double monte_carlo_volume(const RatPolytope& p, long samples,
                          unsigned long long seed) {
  if (samples < 1) fail(ErrorCode::Invalid, "Monte Carlo needs >= 1 sample");
  if (!p.full_dimensional() || p.vertices.size() < 2) return 0.0;
  const int n = p.n;

  double lo[4], hi[4];
  for (int k = 0; k < n; ++k) {
    lo[k] = std::numeric_limits<double>::infinity();
    hi[k] = -std::numeric_limits<double>::infinity();
  }
  for (const auto& v : p.vertices)
    for (int k = 0; k < n; ++k) {
      double c = to_double(v[static_cast<size_t>(k)]);
      lo[k] = std::min(lo[k], c);
      hi[k] = std::max(hi[k], c);
    }
  double box = 1;
  for (int k = 0; k < n; ++k) box *= hi[k] - lo[k];
  if (box <= 0) return 0.0;

  // Facet inequalities in floats, normalized so the slack margin is scale
  // free.
  struct F {
    double a[4];
    double b;
  };
  std::vector<F> facets;
  for (const auto& f : p.facets) {
    F g{};
    double norm = 0;
    for (int k = 0; k < n; ++k) {
      g.a[k] = to_double(f.normal[static_cast<size_t>(k)]);
      norm += g.a[k] * g.a[k];
    }
    norm = std::sqrt(norm);
    for (int k = 0; k < n; ++k) g.a[k] /= norm;
    g.b = to_double(f.offset) / norm;
    facets.push_back(g);
  }

  // Portable uniform doubles from mt19937_64 (library distributions are not
  // bit-identical across standard libraries).
  std::mt19937_64 rng(seed);
  auto u01 = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  long hits = 0;
  for (long s = 0; s < samples; ++s) {
    double z[4];
    for (int k = 0; k < n; ++k) z[k] = lo[k] + (hi[k] - lo[k]) * u01();
    bool inside = true;
    for (const auto& f : facets) {
      double dot = 0;
      for (int k = 0; k < n; ++k) dot += f.a[k] * z[k];
      if (dot > f.b + 1e-12) {
        inside = false;
        break;
      }
    }
    if (inside) ++hits;
  }
  return box * static_cast<double>(hits) / static_cast<double>(samples);
}

}  // namespace plurind
