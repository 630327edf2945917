#ifndef PLURIND_REPORT_HPP
#define PLURIND_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sysfile.hpp"

namespace plurind {

// Knobs of the inequality suite run by `verify`. Deterministic: the seed
// fixes the ocenka directions, everything else is quasi-random or exact.
struct VerifyOptions {
  int ocenka_directions = 100;
  int majorization_points = 10000;
  double majorization_slack = 1e-6;
  std::vector<int> tangent_orders = {1, 2, 4, 8, 16};
  double tangent_final_threshold = 0.25;
  unsigned long long seed = 0x5eed5eedULL;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string detail;
};

struct VerifyOutcome {
  std::vector<CheckResult> checks;
  int violations = 0;
};

VerifyOutcome run_verify(const SystemFile& sys, const VerifyOptions& opts);

// JSON reports; exact rationals are serialized as "p" / "p/q" strings,
// floating quantities as JSON numbers. See schemas/report.schema.json.
nlohmann::json indicator_report(const SystemFile& sys);
nlohmann::json newton_report(const SystemFile& sys);
nlohmann::json bounds_report(const SystemFile& sys,
                             const std::vector<QVec>& directions);
nlohmann::json zeros_report(const SystemFile& sys);
nlohmann::json verify_report(const SystemFile& sys, const VerifyOptions& opts);

// Newton polygon rendering (n = 2 only): lattice grid, axes, and the
// theta-plus polygon with one point per hull vertex.
std::string render_newton_svg(const SystemFile& sys);

// Nearest rational with denominator <= max_den if within tol, else nullopt.
std::optional<Rational> rationalize(double value, long max_den, double tol);

// The zero oracle only applies to square desk-scale systems: a single
// univariate polynomial or a bivariate pair.
bool oracle_applicable(const SystemFile& sys);

std::string to_string(const nlohmann::json& j);

}  // namespace plurind

#endif
