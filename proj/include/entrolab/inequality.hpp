#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entrolab/order.hpp"

namespace entrolab {

struct GridSpec {
  int x_points = 1001;              // >= 101 when explicit_x is empty
  std::vector<double> explicit_x;   // overrides the uniform grid if nonempty
  double slack = 1e-9;              // absolute slack for "<=" margins, in (0, 1e-6]

  std::vector<double> grid() const; // validated x grid over [0,1]
};

struct CheckResult {
  std::string claim_id;
  std::string anchor;        // ASCII statement of the certified claim
  double worst_margin = 0.0; // signed; >= -slack passes
  double worst_x = 0.0;
  std::string worst_order;
  bool pass = false;
  long long points = 0;
};

// Individual certifications. Margins are signed RHS-LHS distances with
// absolute slack only, since both sides of every claim vanish together at
// the degenerate endpoints.
CheckResult check_renyi_monotonicity(const GridSpec& grid);
CheckResult check_tsallis_lower_bound(const GridSpec& grid);
CheckResult check_min_entropy_bound(const GridSpec& grid);
CheckResult check_shannon_power_bounds(const GridSpec& grid);
std::vector<CheckResult> check_renyi_new_bounds(const GridSpec& grid);
std::vector<CheckResult> check_tsallis_new_bounds(const GridSpec& grid);
CheckResult check_salpha_vs_smin(const GridSpec& grid);
std::vector<CheckResult> check_appendix_facts(const GridSpec& grid);
std::vector<CheckResult> check_proof_auxiliaries(const GridSpec& grid);

// The whole suite, sorted by claim id. `only` filters to exact claim ids.
// `threads` <= 1 runs sequentially; results are deterministic either way.
std::vector<CheckResult> run_inequality_suite(
    const GridSpec& grid, const std::vector<std::string>& only = {},
    int threads = 1);

// Claim ids the suite can produce, sorted.
std::vector<std::string> known_claim_ids();

struct QStarPoint {
  double x = 0.0;
  double q_star = 0.0;
  bool found = false;
};

// Exploratory scan: per x, the q where the normalized Tsallis binary
// entropy H^T_q(x)/H^T_q(1/2) switches from decreasing to increasing in q.
// No pass/fail claim attaches to this.
std::vector<QStarPoint> scan_qstar(const std::vector<double>& xs,
                                   double q_lo = 1.05, double q_hi = 6.0);

}  // namespace entrolab
