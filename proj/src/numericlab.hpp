#ifndef PLURIND_NUMERICLAB_HPP
#define PLURIND_NUMERICLAB_HPP

#include <complex>
#include <vector>

#include "indicator.hpp"

namespace plurind {

// Equi-angular sampling of the torus {z : |z_k - center_k| = e^{radius_log_k}}.
// Deterministic; no RNG anywhere in this module. With `refine` set, the max
// search polishes the best lattice angle with nested shrinking grids (every
// stage is again an equi-angular lattice), pushing the discretization error
// of the max far below test tolerances. Sampled values never exceed the true
// supremum, so refined maxima remain lower estimates.
struct TorusSpec {
  std::vector<std::complex<double>> center;
  std::vector<double> radius_log;
  int samples_per_axis = 64;
  bool refine = true;
};

double torus_max(const UFunction& u, const TorusSpec& spec);
// Equal-weight lattice mean; u is clipped below at -1e6 to tame the -inf
// samples on zero sets.
double torus_mean(const UFunction& u, const TorusSpec& spec);

// Numeric estimate of g'(u, x, 0): max of u on the unit torus centered at x.
// `samples` is the per-axis lattice resolution.
double majorant_constant(const UFunction& u, const GPoint& x, int samples);

// Sequence R -> (g'(u,x,Rt) - g'(u,x,0)) / R over the schedule. The shift
// makes the sequence nondecreasing; the last entry approximates psi_{u,x}(t).
std::vector<double> psi_estimate(const UFunction& u, const GPoint& x,
                                 const QVec& t,
                                 const std::vector<double>& R_schedule);

inline std::vector<double> default_R_schedule() { return {1, 2, 4, 8, 16}; }

struct MajorizationReport {
  int samples = 0;
  int violations = 0;
  double max_violation = 0;  // max of u(z) - Psi(z-x) - C over the samples
  double constant = 0;       // the C used
};

// Samples deterministic quasi-random points z in the ball |z - x| <= 1e3
// (per-coordinate log-uniform magnitudes, Halton phases) and verifies
// u(z) <= Psi_{u,x}(z - x) + C + slack with C = majorant_constant.
MajorizationReport majorization_check(const UFunction& u, const GPoint& x,
                                      int trial_points, double slack);

// Same check against an explicitly supplied indicator; lets tests feed a
// deliberately broken indicator and watch the violations appear.
MajorizationReport majorization_check_against(const UFunction& u,
                                              const GPoint& x,
                                              const PolyhedralIndicator& phi,
                                              int trial_points, double slack);

// Annulus grid for the tangent comparison; magnitudes are a midpoint
// geometric subdivision of [rho_min, rho_max] (never hitting 1), phases are
// half-offset so no grid point lands on a coordinate axis.
struct GridSpec {
  double rho_min = 0.5;
  double rho_max = 2.0;
  int radial = 12;
  int angular = 16;
};

// Discrete L1 distance between z -> (1/m) u(x + z^m) and Psi_{u,x}(z) over
// the grid, both integrands clipped at +-1e3.
double tangent_l1(const UFunction& u, const GPoint& x, int m,
                  const GridSpec& grid);

// Radical-inverse (Halton) sequence member, deterministic quasi-random.
double halton(unsigned long long index, int base);

}  // namespace plurind

#endif
