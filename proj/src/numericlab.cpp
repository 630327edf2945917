#include "numericlab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace plurind {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Flat float image of a UFunction; the hot loops below evaluate millions of
// samples, so the exact-coefficient term maps are compiled once.
struct CompiledPoly {
  struct Term {
    std::array<int, 4> e{};
    std::complex<double> c;
  };
  std::vector<Term> terms;
  std::array<int, 4> maxdeg{};
  int n = 0;

  explicit CompiledPoly(const Polynomial& p) : n(p.dimension()) {
    for (const auto& [e, c] : p.terms()) {
      Term t;
      t.c = c.to_complex();
      for (size_t k = 0; k < e.size(); ++k) {
        t.e[k] = e[k];
        maxdeg[k] = std::max(maxdeg[k], e[k]);
      }
      terms.push_back(t);
    }
  }

  std::complex<double> eval(const std::complex<double>* z) const {
    std::array<std::array<std::complex<double>, 32>, 4> pw;
    for (int k = 0; k < n; ++k) {
      pw[static_cast<size_t>(k)][0] = 1.0;
      for (int j = 1; j <= maxdeg[static_cast<size_t>(k)]; ++j)
        pw[static_cast<size_t>(k)][static_cast<size_t>(j)] =
            pw[static_cast<size_t>(k)][static_cast<size_t>(j) - 1] * z[k];
    }
    std::complex<double> acc = 0.0;
    for (const auto& t : terms) {
      std::complex<double> v = t.c;
      for (int k = 0; k < n; ++k)
        if (t.e[static_cast<size_t>(k)] > 0)
          v *= pw[static_cast<size_t>(k)]
                 [static_cast<size_t>(t.e[static_cast<size_t>(k)])];
      acc += v;
    }
    return acc;
  }
};

struct CompiledU {
  std::vector<CompiledPoly> comps;
  double q;
  int n;

  explicit CompiledU(const UFunction& u)
      : q(to_double(u.map.q)), n(u.dimension()) {
    if (u.map.components.size() > 16)
      fail(ErrorCode::Invalid, "numeric lab caps maps at 16 components");
    for (const auto& p : u.map.components) {
      for (int d : p.partial_degrees())
        if (d >= 32) fail(ErrorCode::Invalid, "numeric lab caps degrees below 32");
      comps.emplace_back(p);
    }
  }

  double eval(const std::complex<double>* z) const {
    double maxlog = kNegInf;
    double logs[16];
    size_t m = comps.size();
    for (size_t k = 0; k < m; ++k) {
      double a = std::abs(comps[k].eval(z));
      logs[k] = a == 0.0 ? kNegInf : std::log(a);
      maxlog = std::max(maxlog, logs[k]);
    }
    if (maxlog == kNegInf || m == 1) return maxlog;
    double s = 0;
    for (size_t k = 0; k < m; ++k)
      if (logs[k] != kNegInf) s += std::exp(q * (logs[k] - maxlog));
    return maxlog + std::log(s) / q;
  }
};

struct TorusEval {
  const CompiledU& u;
  std::vector<std::complex<double>> center;
  std::vector<double> radius;

  double at(const double* theta) const {
    std::complex<double> z[4];
    for (size_t k = 0; k < center.size(); ++k)
      z[k] = center[k] + std::polar(radius[k], theta[k]);
    return u.eval(z);
  }
};

void check_spec(const UFunction& u, const TorusSpec& spec) {
  const size_t n = static_cast<size_t>(u.dimension());
  if (spec.center.size() != n || spec.radius_log.size() != n)
    fail(ErrorCode::Dimension, "torus spec dimension mismatch");
  if (spec.samples_per_axis < 8)
    fail(ErrorCode::Invalid, "torus lattice needs >= 8 samples per axis");
}

TorusEval make_eval(const CompiledU& cu, const TorusSpec& spec) {
  TorusEval ev{cu, spec.center, {}};
  ev.radius.reserve(spec.radius_log.size());
  for (double t : spec.radius_log) ev.radius.push_back(std::exp(t));
  return ev;
}

// Product equi-angular lattice scan; reports the best value and angle.
void lattice_scan(const TorusEval& ev, int n, int m, double* best_theta,
                  double& best_val) {
  int idx[4] = {0, 0, 0, 0};
  double theta[4] = {0, 0, 0, 0};
  best_val = kNegInf;
  for (;;) {
    for (int k = 0; k < n; ++k) theta[k] = kTwoPi * idx[k] / m;
    double v = ev.at(theta);
    if (v > best_val) {
      best_val = v;
      std::copy(theta, theta + 4, best_theta);
    }
    int k = 0;
    while (k < n && ++idx[k] == m) idx[k++] = 0;
    if (k == n) break;
  }
}

}  // namespace

double halton(unsigned long long index, int base) {
  double f = 1.0, r = 0.0;
  unsigned long long i = index;
  while (i > 0) {
    f /= base;
    r += f * static_cast<double>(i % static_cast<unsigned long long>(base));
    i /= static_cast<unsigned long long>(base);
  }
  return r;
}

double torus_max(const UFunction& u, const TorusSpec& spec) {
  check_spec(u, spec);
  CompiledU cu(u);
  TorusEval ev = make_eval(cu, spec);
  const int n = u.dimension();

  double best_theta[4];
  double best_val;
  lattice_scan(ev, n, spec.samples_per_axis, best_theta, best_val);
  if (!spec.refine || best_val == kNegInf) return best_val;

  // Nested equi-angular grids around the best angle, 9 points per axis,
  // bracket halved per round.
  double w = kTwoPi / spec.samples_per_axis;
  while (w > 1e-10) {
    int idx[4] = {0, 0, 0, 0};
    double theta[4];
    double round_best = best_val;
    double round_theta[4];
    std::copy(best_theta, best_theta + 4, round_theta);
    for (;;) {
      for (int k = 0; k < n; ++k)
        theta[k] = best_theta[k] + w * (idx[k] - 4) / 4.0;
      double v = ev.at(theta);
      if (v > round_best) {
        round_best = v;
        std::copy(theta, theta + 4, round_theta);
      }
      int k = 0;
      while (k < n && ++idx[k] == 9) idx[k++] = 0;
      if (k == n) break;
    }
    best_val = round_best;
    std::copy(round_theta, round_theta + 4, best_theta);
    w /= 2;
  }
  return best_val;
}

double torus_mean(const UFunction& u, const TorusSpec& spec) {
  check_spec(u, spec);
  CompiledU cu(u);
  TorusEval ev = make_eval(cu, spec);
  const int n = u.dimension();
  const int m = spec.samples_per_axis;
  int idx[4] = {0, 0, 0, 0};
  double theta[4] = {0, 0, 0, 0};
  double sum = 0;
  long count = 0;
  for (;;) {
    for (int k = 0; k < n; ++k) theta[k] = kTwoPi * idx[k] / m;
    sum += std::max(ev.at(theta), -1e6);
    ++count;
    int k = 0;
    while (k < n && ++idx[k] == m) idx[k++] = 0;
    if (k == n) break;
  }
  return sum / static_cast<double>(count);
}

namespace {

std::vector<std::complex<double>> to_complex_point(const GPoint& x) {
  std::vector<std::complex<double>> out;
  out.reserve(x.size());
  for (const auto& g : x) out.push_back(g.to_complex());
  return out;
}

}  // namespace

double majorant_constant(const UFunction& u, const GPoint& x, int samples) {
  TorusSpec spec;
  spec.center = to_complex_point(x);
  spec.radius_log.assign(x.size(), 0.0);
  spec.samples_per_axis = std::max(8, samples);
  return torus_max(u, spec);
}

std::vector<double> psi_estimate(const UFunction& u, const GPoint& x,
                                 const QVec& t,
                                 const std::vector<double>& R_schedule) {
  if (t.size() != static_cast<size_t>(u.dimension()))
    fail(ErrorCode::Dimension, "direction dimension mismatch");
  if (R_schedule.size() < 3)
    fail(ErrorCode::Invalid, "R schedule needs at least 3 entries");
  for (size_t k = 1; k < R_schedule.size(); ++k)
    if (R_schedule[k] <= R_schedule[k - 1])
      fail(ErrorCode::Invalid, "R schedule must be increasing");

  TorusSpec spec;
  spec.center = to_complex_point(x);
  spec.radius_log.assign(t.size(), 0.0);
  spec.samples_per_axis = u.dimension() <= 2 ? 64 : 16;
  const double base = torus_max(u, spec);

  std::vector<double> out;
  out.reserve(R_schedule.size());
  for (double r : R_schedule) {
    for (size_t k = 0; k < t.size(); ++k)
      spec.radius_log[k] = r * to_double(t[k]);
    out.push_back((torus_max(u, spec) - base) / r);
  }
  return out;
}

MajorizationReport majorization_check_against(const UFunction& u,
                                              const GPoint& x,
                                              const PolyhedralIndicator& phi,
                                              int trial_points, double slack) {
  if (trial_points < 1)
    fail(ErrorCode::Invalid, "majorization check needs >= 1 trial point");
  const int n = u.dimension();
  CompiledU cu(u);
  auto center = to_complex_point(x);

  MajorizationReport report;
  report.constant = majorant_constant(u, x, 64);
  report.max_violation = kNegInf;

  static constexpr int kBases[8] = {2, 3, 5, 7, 11, 13, 17, 19};
  unsigned long long index = 1;
  std::vector<std::complex<double>> w(static_cast<size_t>(n));
  std::vector<std::complex<double>> z(static_cast<size_t>(n));
  while (report.samples < trial_points) {
    double r2 = 0;
    for (int k = 0; k < n; ++k) {
      double mag = std::pow(10.0, -3.0 + 6.0 * halton(index, kBases[2 * k]));
      double phase = kTwoPi * halton(index, kBases[2 * k + 1]);
      w[static_cast<size_t>(k)] = std::polar(mag, phase);
      r2 += mag * mag;
    }
    ++index;
    if (r2 > 1e6) continue;  // stay inside the radius-1e3 ball
    ++report.samples;
    for (int k = 0; k < n; ++k)
      z[static_cast<size_t>(k)] = center[static_cast<size_t>(k)] +
                                  w[static_cast<size_t>(k)];
    double uz = cu.eval(z.data());
    if (uz == kNegInf) continue;
    double violation = uz - phi.eval_Psi(w) - report.constant;
    report.max_violation = std::max(report.max_violation, violation);
    if (violation > slack) ++report.violations;
  }
  return report;
}

MajorizationReport majorization_check(const UFunction& u, const GPoint& x,
                                      int trial_points, double slack) {
  return majorization_check_against(u, x, u.indicator_at(x), trial_points,
                                    slack);
}

namespace {

std::complex<double> int_pow(std::complex<double> z, int m) {
  std::complex<double> acc = 1.0;
  while (m > 0) {
    if (m & 1) acc *= z;
    z *= z;
    m >>= 1;
  }
  return acc;
}

}  // namespace

double tangent_l1(const UFunction& u, const GPoint& x, int m,
                  const GridSpec& grid) {
  if (m < 1) fail(ErrorCode::Invalid, "tangent order m must be >= 1");
  if (grid.radial < 1 || grid.angular < 1)
    fail(ErrorCode::Invalid, "tangent grid must be nonempty");
  const int n = u.dimension();
  CompiledU cu(u);
  PolyhedralIndicator phi = u.indicator_at(x);
  auto center = to_complex_point(x);

  const int cells = grid.radial * grid.angular;
  auto point_at = [&](int c, int k) {
    int ri = c % grid.radial;
    int ai = c / grid.radial;
    double rho = grid.rho_min *
                 std::pow(grid.rho_max / grid.rho_min,
                          (ri + 0.5) / static_cast<double>(grid.radial));
    double phase = kTwoPi * (ai + 0.5 + 0.13 * k) /
                   static_cast<double>(grid.angular);
    return std::polar(rho, phase);
  };

  auto clip = [](double v) { return std::clamp(v, -1e3, 1e3); };

  int idx[4] = {0, 0, 0, 0};
  std::vector<std::complex<double>> z(static_cast<size_t>(n));
  std::vector<std::complex<double>> arg(static_cast<size_t>(n));
  double sum = 0;
  long count = 0;
  for (;;) {
    for (int k = 0; k < n; ++k) {
      z[static_cast<size_t>(k)] = point_at(idx[k], k);
      arg[static_cast<size_t>(k)] =
          center[static_cast<size_t>(k)] + int_pow(z[static_cast<size_t>(k)], m);
    }
    double v_tangent = cu.eval(arg.data()) / m;
    double v_psi = phi.eval_Psi(z);
    sum += std::abs(clip(v_tangent) - clip(v_psi));
    ++count;
    int k = 0;
    while (k < n && ++idx[k] == cells) idx[k++] = 0;
    if (k == n) break;
  }
  return sum / static_cast<double>(count);
}

}  // namespace plurind
