#pragma once

#include <string>
#include <vector>

// Maps the enhancement factor over the (Delta, delta) plane with a worker
// pool and deterministic, schedule-independent output ordering.

namespace tpa {

struct SweepSpec {
  double dcap_min = -10.0, dcap_max = 10.0;
  int dcap_count = 41;
  double dsmall_min = -1.9, dsmall_max = 8.0;
  int dsmall_count = 34;
  double t = 0.0;
  int workers = 1;
  // Per-point quadrature: uniform grid centered at Delta/2 (node sums then
  // land exactly on the nu_a+nu_b = Delta ridge) covering +-grid_halfwidth.
  int grid_n = 601;
  double grid_halfwidth = 40.0;

  // Throws std::invalid_argument on counts < 1, workers < 1, or
  // dsmall_min <= -2 (gamma_f = 2 + delta must stay positive).
  void validate() const;
};

struct SweepRow {
  double delta_cap = 0, delta_small = 0;
  double r1 = 0, sum_rk2 = 0, enhancement = 0;
  bool ok = true;
  std::string error;  // set when this point failed; row flagged, not fatal
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepRow> rows;  // row-major: Delta outer, delta inner
  double elapsed_seconds = 0;
};

struct SweepSummary {
  double argmin_delta_cap = 0, argmin_delta_small = 0;
  double min_enhancement = 0;
  long below_one_count = 0;       // rows with E < 1 - 1e-9 (must be 0)
  long convexity_violations = 0;  // axis-aligned midpoint triples with
                                  // E(l)+E(r)-2E(m) < -1e-3 (absolute)
  double worst_violation = 0;     // most negative midpoint second difference
  double worst_violation_rel = 0; // same, relative to the midpoint value
  long failed_rows = 0;
};

// Runs the sweep. Rows are emitted in row-major order regardless of the
// execution schedule; per-point failures are flagged rows, not aborts.
SweepResult run_sweep(const SweepSpec& spec);

// Argmin/min of E, count of E < 1-1e-9 rows, and the count of axis-aligned
// midpoint-convexity violations beyond the absolute tolerance 1e-3.
// Throws EmptySweep on an empty result.
SweepSummary analyze_sweep(const SweepResult& res);

}  // namespace tpa
