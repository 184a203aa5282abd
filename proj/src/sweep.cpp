#include "tpa/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "tpa/errors.hpp"
#include "tpa/grid.hpp"
#include "tpa/model.hpp"
#include "tpa/response.hpp"
#include "tpa/schmidt.hpp"

extern "C" void openblas_set_num_threads(int);

namespace tpa {

namespace {

double lin(double lo, double hi, int count, int i) {
  if (count == 1) return lo;
  return lo + (hi - lo) * static_cast<double>(i) / (count - 1);
}

SweepRow evaluate_point(const SweepSpec& spec, double dcap, double dsmall) {
  SweepRow row;
  row.delta_cap = dcap;
  row.delta_small = dsmall;
  try {
    const LevelSystem sys = make_system(2.0 + dsmall, dcap);
    // centering at Delta/2 keeps the node-sum lattice on the two-photon
    // resonance and covers [min(0,Delta)-25, max(0,Delta)+25]
    const FrequencyGrid grid =
        uniform_grid(dcap / 2.0, spec.grid_halfwidth, spec.grid_n);
    const KernelMatrix K = build_kernel(sys, grid, grid, spec.t);
    const std::vector<double> sigma = singular_values(K);
    double sum = 0.0;
    for (double s : sigma) sum += s * s;
    row.r1 = sigma.front();
    row.sum_rk2 = sum;
    if (row.r1 <= 0.0) throw ZeroKernel("leading singular value vanishes");
    row.enhancement = sum / (row.r1 * row.r1);
  } catch (const std::exception& ex) {
    row.ok = false;
    row.error = ex.what();
  }
  return row;
}

}  // namespace

void SweepSpec::validate() const {
  if (dcap_count < 1 || dsmall_count < 1)
    throw std::invalid_argument("sweep axis counts must be >= 1");
  if (dcap_max < dcap_min || dsmall_max < dsmall_min)
    throw std::invalid_argument("sweep axis bounds must be ordered");
  if (dsmall_min <= -2.0)
    throw std::invalid_argument(
        "delta must stay above -2 so gamma_f remains positive");
  if (workers < 1) throw std::invalid_argument("worker count must be >= 1");
  if (grid_n < 2) throw std::invalid_argument("per-point grid needs >= 2 nodes");
  if (!(grid_halfwidth > 0.0))
    throw std::invalid_argument("per-point grid halfwidth must be positive");
}

SweepResult run_sweep(const SweepSpec& spec) {
  spec.validate();
  openblas_set_num_threads(1);  // worker pool supplies the parallelism

  const auto t0 = std::chrono::steady_clock::now();
  SweepResult res;
  res.spec = spec;
  const long total = static_cast<long>(spec.dcap_count) * spec.dsmall_count;
  res.rows.resize(total);

  std::atomic<long> next{0};
  auto worker = [&] {
    for (;;) {
      const long idx = next.fetch_add(1);
      if (idx >= total) return;
      const int i = static_cast<int>(idx / spec.dsmall_count);
      const int j = static_cast<int>(idx % spec.dsmall_count);
      const double dcap = lin(spec.dcap_min, spec.dcap_max, spec.dcap_count, i);
      const double dsmall =
          lin(spec.dsmall_min, spec.dsmall_max, spec.dsmall_count, j);
      res.rows[idx] = evaluate_point(spec, dcap, dsmall);
    }
  };

  const int pool = static_cast<int>(
      std::min<long>(spec.workers, std::max<long>(total, 1)));
  if (pool <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(pool);
    for (int k = 0; k < pool; ++k) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }

  res.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return res;
}

SweepSummary analyze_sweep(const SweepResult& res) {
  if (res.rows.empty()) throw EmptySweep("sweep holds no rows");
  SweepSummary sum;
  bool have_min = false;
  for (const SweepRow& row : res.rows) {
    if (!row.ok) {
      ++sum.failed_rows;
      continue;
    }
    if (!have_min || row.enhancement < sum.min_enhancement) {
      have_min = true;
      sum.min_enhancement = row.enhancement;
      sum.argmin_delta_cap = row.delta_cap;
      sum.argmin_delta_small = row.delta_small;
    }
    if (row.enhancement < 1.0 - 1e-9) ++sum.below_one_count;
  }
  if (!have_min) throw EmptySweep("sweep holds no successful rows");

  // axis-aligned midpoint second differences E(l)+E(r)-2E(m)
  const int nd = res.spec.dsmall_count;
  const int nc = static_cast<int>(res.rows.size()) / nd;
  auto at = [&](int i, int j) -> const SweepRow& {
    return res.rows[static_cast<std::size_t>(i) * nd + j];
  };
  auto record = [&](const SweepRow& l, const SweepRow& m, const SweepRow& r) {
    if (!l.ok || !m.ok || !r.ok) return;
    const double d2 = l.enhancement + r.enhancement - 2.0 * m.enhancement;
    if (d2 < sum.worst_violation) {
      sum.worst_violation = d2;
      sum.worst_violation_rel = d2 / std::abs(m.enhancement);
    }
    if (d2 < -1e-3) ++sum.convexity_violations;
  };
  for (int i = 0; i < nc; ++i)
    for (int j = 1; j + 1 < nd; ++j) record(at(i, j - 1), at(i, j), at(i, j + 1));
  for (int j = 0; j < nd; ++j)
    for (int i = 1; i + 1 < nc; ++i) record(at(i - 1, j), at(i, j), at(i + 1, j));
  return sum;
}

}  // namespace tpa
