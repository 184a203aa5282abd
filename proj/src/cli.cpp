#include "tpa/cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tpa/config.hpp"
#include "tpa/dynamics.hpp"
#include "tpa/errors.hpp"
#include "tpa/grid.hpp"
#include "tpa/io.hpp"
#include "tpa/model.hpp"
#include "tpa/optimal.hpp"
#include "tpa/response.hpp"
#include "tpa/schmidt.hpp"
#include "tpa/sweep.hpp"
#include "tpa/version.hpp"

extern "C" void openblas_set_num_threads(int);

namespace tpa::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Common {
  std::string config_path;
  std::string out_dir;
  int workers = 1;
  std::uint64_t seed = 12345;
};

fs::path resolve_out(const Common& cmn, const std::string& command) {
  if (!cmn.out_dir.empty()) return cmn.out_dir;
  const char* root = std::getenv("TPAOPT_OUT");
  return fs::path(root && *root ? root : "out") / command;
}

FrequencyGrid resolve_grid(const RunConfig& cfg) {
  return (cfg.grid ? *cfg.grid : GridSpec{}).build();
}

void finish(const fs::path& out, const std::string& command,
            const RunConfig& cfg, const Common& cmn,
            const std::vector<std::string>& outputs) {
  write_manifest(out, command, cfg.config_path, cfg.config_hash, cmn.workers,
                 cmn.seed, outputs);
}

json system_json(const LevelSystem& sys) {
  json j;
  j["mode"] = to_string(sys.mode);
  j["gamma_e"] = sys.gamma_e;
  j["gamma_f"] = sys.gamma_f;
  j["delta_cap"] = sys.delta_cap;
  j["delta_small"] = sys.delta_small();
  j["mu_ge"] = sys.mu_ge;
  j["mu_ef"] = sys.mu_ef;
  j["e0"] = sys.e0;
  if (sys.mode == CouplingMode::TwoAtom) {
    j["gamma_e2"] = sys.two_atom.gamma_e2;
    j["delta_atoms"] = sys.two_atom.delta_atoms;
  }
  if (sys.omega_e_abs != 0.0) j["omega_e_abs_rad_per_s"] = sys.omega_e_abs;
  return j;
}

int cmd_kernel(const RunConfig& cfg, const Common& cmn) {
  const fs::path out = resolve_out(cmn, "kernel");
  const FrequencyGrid g = resolve_grid(cfg);
  const KernelMatrix K = build_kernel(cfg.system, g, g, cfg.kernel_t);

  std::vector<std::string> outputs = {"grid.csv", "kernel_abs.csv",
                                      "kernel_axis_a.csv", "kernel_axis_b.csv",
                                      "summary.json"};
  write_grid_csv(out / "grid.csv", g);
  write_kernel_abs_csv(out, K);
  if (cfg.kernel_binary) {
    write_kernel_binary(out, K);
    outputs.push_back("kernel.bin");
    outputs.push_back("kernel.bin.txt");
  }

  json j;
  j["system"] = system_json(cfg.system);
  j["t"] = K.t;
  j["rows"] = K.rows();
  j["cols"] = K.cols();
  j["grid"] = g.meta.detail;
  j["overlap_warning"] = g.meta.overlap_warning;
  j["weighted_frobenius_sq"] = weighted_frobenius_sq(K);
  write_text_file(out / "summary.json", j.dump(2) + "\n");
  finish(out, "kernel", cfg, cmn, outputs);
  return 0;
}

int cmd_schmidt(const RunConfig& cfg, const Common& cmn) {
  const fs::path out = resolve_out(cmn, "schmidt");
  const FrequencyGrid g = resolve_grid(cfg);
  const KernelMatrix K = build_kernel(cfg.system, g, g, cfg.kernel_t);
  const SchmidtDecomposition sd = decompose(K);

  write_grid_csv(out / "grid.csv", g);
  write_schmidt_csv(out, sd);
  json j;
  j["system"] = system_json(cfg.system);
  j["t"] = K.t;
  j["grid"] = g.meta.detail;
  j["rank"] = sd.rank();
  j["r1"] = sd.r[0];
  j["sum_rk2"] = sd.sum_r_sq();
  j["E"] = enhancement(sd);
  write_text_file(out / "summary.json", j.dump(2) + "\n");

  std::vector<std::string> outputs = {"grid.csv", "schmidt_values.csv",
                                      "summary.json"};
  for (std::size_t k = 1; k <= std::min<std::size_t>(sd.rank(), 8); ++k) {
    char name[32];
    std::snprintf(name, sizeof(name), "mode_%03zu.csv", k);
    outputs.emplace_back(name);
  }
  finish(out, "schmidt", cfg, cmn, outputs);
  return 0;
}

int cmd_optimize(const RunConfig& cfg, const Common& cmn) {
  const fs::path out = resolve_out(cmn, "optimize");
  const FrequencyGrid g = resolve_grid(cfg);
  const KernelMatrix K = build_kernel(cfg.system, g, g, 0.0);
  const SchmidtDecomposition sd = decompose(K);
  const PulsePair pair = classical_optimal(sd, cfg.photon_number);
  const TwoPhotonState state = quantum_optimal(K);

  write_pulse_csv(out / "pulse_a1.csv", pair.grid_a, pair.a1);
  write_pulse_csv(out / "pulse_a2.csv", pair.grid_b, pair.a2);
  write_state_csv(out, state.amplitude, state.grid_a, state.grid_b);
  write_schmidt_csv(out, sd);

  const double pf_cl = transition_prob_classical(K, pair);
  const double pf_qu = transition_prob_quantum(K, state);
  if (pf_cl > 0.1 || pf_qu > 0.1)
    std::fprintf(stderr,
                 "warning: reported probability exceeds 0.1; second-order "
                 "perturbation theory is not self-consistent here\n");

  json j;
  j["system"] = system_json(cfg.system);
  j["grid"] = g.meta.detail;
  j["r1"] = sd.r[0];
  j["sum_rk2"] = sd.sum_r_sq();
  j["E"] = enhancement(sd);
  j["N"] = cfg.photon_number;
  j["norm_constant"] = state.norm_constant;
  j["pf_classical"] = pf_cl;
  j["pf_quantum"] = pf_qu;
  j["pf_classical_per_pair"] =
      pf_cl / (cfg.photon_number * cfg.photon_number);
  j["residual_classical"] = fixed_point_residual(K, pair);
  j["residual_quantum"] = fixed_point_residual(K, state);
  if (cfg.system.mode == CouplingMode::Symmetric) {
    const double analytic = analytic_norm(cfg.system);
    j["norm_analytic"] = analytic;
    j["norm_quadrature_rel_err"] =
        std::abs(state.norm_constant - analytic) / analytic;
  }
  write_text_file(out / "summary.json", j.dump(2) + "\n");
  finish(out, "optimize", cfg, cmn,
         {"pulse_a1.csv", "pulse_a2.csv", "state_abs.csv", "state_arg.csv",
          "state_axis_a.csv", "state_axis_b.csv", "schmidt_values.csv",
          "summary.json"});
  return 0;
}

int cmd_sweep(const RunConfig& cfg, const Common& cmn) {
  const fs::path out = resolve_out(cmn, "sweep");
  SweepSpec spec = cfg.sweep;
  spec.workers = cmn.workers;
  std::fprintf(stderr, "sweep: %d x %d points, %d workers\n", spec.dcap_count,
               spec.dsmall_count, spec.workers);
  const SweepResult res = run_sweep(spec);
  const SweepSummary sum = analyze_sweep(res);
  std::fprintf(stderr, "sweep: %zu rows in %.1f s (%ld failed)\n",
               res.rows.size(), res.elapsed_seconds, sum.failed_rows);

  write_sweep_csv(out / "sweep.csv", res);
  json j;
  j["argmin_delta_cap"] = sum.argmin_delta_cap;
  j["argmin_delta_small"] = sum.argmin_delta_small;
  j["min_enhancement"] = sum.min_enhancement;
  j["below_one_count"] = sum.below_one_count;
  j["convexity_violations"] = sum.convexity_violations;
  j["worst_violation"] = sum.worst_violation;
  j["worst_violation_rel"] = sum.worst_violation_rel;
  j["failed_rows"] = sum.failed_rows;
  j["elapsed_seconds"] = res.elapsed_seconds;
  j["workers"] = spec.workers;
  write_text_file(out / "summary.json", j.dump(2) + "\n");
  finish(out, "sweep", cfg, cmn, {"sweep.csv", "summary.json"});
  return 0;
}

int cmd_dynamics(const RunConfig& cfg, const Common& cmn) {
  const fs::path out = resolve_out(cmn, "dynamics");
  const FrequencyGrid g = resolve_grid(cfg);
  const KernelMatrix K = build_kernel(cfg.system, g, g, 0.0);
  const SchmidtDecomposition sd = decompose(K);
  const PulsePair pair = classical_optimal(sd, cfg.photon_number);
  const TwoPhotonState state = quantum_optimal(K);
  const std::vector<double> times =
      time_window(cfg.t_min, cfg.t_max, cfg.t_count);

  const PopulationTrace cl = classical_populations(cfg.system, pair, times);
  const PopulationTrace qu = quantum_populations(cfg.system, state, times);
  write_dynamics_csv(out / "dynamics.csv", {cl, qu});

  // p_f(0) evaluated exactly, not at the nearest window sample
  const std::vector<double> origin{0.0};
  const double pf0_cl =
      classical_populations(cfg.system, pair, origin).p_f[0];
  const double pf0_qu = quantum_populations(cfg.system, state, origin).p_f[0];

  const double peak_prob = std::max(
      {*std::max_element(cl.p_e.begin(), cl.p_e.end()),
       *std::max_element(qu.p_e.begin(), qu.p_e.end()),
       *std::max_element(cl.p_f.begin(), cl.p_f.end()),
       *std::max_element(qu.p_f.begin(), qu.p_f.end()), pf0_cl, pf0_qu});
  if (peak_prob > 0.1)
    std::fprintf(stderr,
                 "warning: reported probability exceeds 0.1; second-order "
                 "perturbation theory is not self-consistent here\n");

  json j;
  j["system"] = system_json(cfg.system);
  j["grid"] = g.meta.detail;
  j["t_min"] = cfg.t_min;
  j["t_max"] = cfg.t_max;
  j["t_count"] = cfg.t_count;
  j["E"] = enhancement(sd);
  j["N"] = cfg.photon_number;
  j["pf0_classical"] = pf0_cl;
  j["pf0_quantum"] = pf0_qu;
  if (pf0_cl > 0.0) j["pf0_ratio"] = pf0_qu / pf0_cl;
  j["peak_pe_classical"] = *std::max_element(cl.p_e.begin(), cl.p_e.end());
  j["peak_pe_quantum"] = *std::max_element(qu.p_e.begin(), qu.p_e.end());
  j["peak_pf_classical"] = *std::max_element(cl.p_f.begin(), cl.p_f.end());
  j["peak_pf_quantum"] = *std::max_element(qu.p_f.begin(), qu.p_f.end());
  try {
    j["symmetry_classical"] = symmetry_metric(cl);
    j["symmetry_quantum"] = symmetry_metric(qu);
  } catch (const AsymmetricTimeGrid&) {
    // asymmetric window requested: the metric is undefined, not an error
  }
  write_text_file(out / "summary.json", j.dump(2) + "\n");
  finish(out, "dynamics", cfg, cmn, {"dynamics.csv", "summary.json"});
  return 0;
}

int cmd_preset(const RunConfig& cfg, const Common& cmn) {
  const fs::path out = resolve_out(cmn, "preset");
  const LevelSystem sys = from_rubidium();
  const double tail_cut = std::atan(0.5);
  const std::vector<int> sizes = {800, 1131, 1600};

  json study = json::array();
  std::string csv = "n,nodes,r1,sum_rk2,E\n";
  double final_E = 0.0, final_r1 = 0.0, final_sum = 0.0;
  double norm_rel_err = 0.0;
  for (int n : sizes) {
    std::fprintf(stderr, "preset rubidium: cluster size %d ...\n", n);
    // unequal scales keep the corrected endpoints of either cluster off the
    // two-photon resonance ridge of the other
    const FrequencyGrid grid = graded_grid(
        {{0.0, 70.0, n}, {sys.delta_cap, 80.0, n}}, tail_cut);
    const KernelMatrix K = build_kernel(sys, grid, grid, 0.0);
    const std::vector<double> sigma = singular_values(K);
    double sum = 0.0;
    for (double s : sigma) sum += s * s;
    const double E = sum / (sigma[0] * sigma[0]);
    json row;
    row["n"] = n;
    row["nodes"] = grid.size();
    row["r1"] = sigma[0];
    row["sum_rk2"] = sum;
    row["E"] = E;
    study.push_back(row);
    csv += std::to_string(n) + "," + std::to_string(grid.size()) + "," +
           g17(sigma[0]) + "," + g17(sum) + "," + g17(E) + "\n";
    final_E = E;
    final_r1 = sigma[0];
    final_sum = sum;
    if (n == sizes.back()) {
      const double analytic = analytic_norm(sys);
      norm_rel_err = std::abs(weighted_frobenius_sq(K) - analytic) / analytic;
    }
  }
  const bool in_band =
      final_E >= cfg.preset_band_min && final_E <= cfg.preset_band_max;

  write_text_file(out / "study.csv", csv);
  json j;
  j["system"] = system_json(sys);
  j["tail_cut"] = tail_cut;
  j["study"] = study;
  j["E"] = final_E;
  j["r1"] = final_r1;
  j["sum_rk2"] = final_sum;
  j["norm_quadrature_rel_err"] = norm_rel_err;
  j["band_min"] = cfg.preset_band_min;
  j["band_max"] = cfg.preset_band_max;
  j["in_band"] = in_band;
  write_text_file(out / "report.json", j.dump(2) + "\n");
  finish(out, "preset rubidium", cfg, cmn, {"study.csv", "report.json"});

  std::printf("rubidium: E = %.4f (band [%g, %g]: %s)\n", final_E,
              cfg.preset_band_min, cfg.preset_band_max,
              in_band ? "inside" : "OUTSIDE");
  return 0;
}

// ---------------------------------------------------------------------------
// selfcheck: fast invariant suite over every module

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

Check check_harmonic_rank1() {
  Check c{"harmonic_rank1"};
  const LevelSystem sys = make_system(2.0, 0.0);
  const FrequencyGrid g = graded_grid({{0.0, 1.0, 401}}, kDefaultTailCut);
  const SchmidtDecomposition sd = decompose(build_kernel(sys, g, g, 0.0));
  const double E = enhancement(sd);
  const double ratio = sd.rank() > 1 ? sd.r[1] / sd.r[0] : 0.0;
  c.ok = std::abs(E - 1.0) < 1e-3 && ratio < 1e-6;
  c.detail = "E-1 = " + g17(E - 1.0) + ", r2/r1 = " + g17(ratio);
  return c;
}

Check check_two_atom(std::mt19937_64& rng) {
  Check c{"two_atom_rank1"};
  std::uniform_real_distribution<double> ge2(0.5, 2.0), datoms(-3.0, 3.0);
  double worst_ratio = 0.0, worst_e = 0.0;
  for (int k = 0; k < 3; ++k) {
    TwoAtomParams ta{ge2(rng), datoms(rng)};
    const LevelSystem sys =
        make_system(2.0, 0.0, 1.0, 1.0, CouplingMode::TwoAtom, ta);
    const FrequencyGrid ga = uniform_grid(0.0, 30.0, 301);
    const FrequencyGrid gb = uniform_grid(ta.delta_atoms, 30.0, 301);
    const SchmidtDecomposition sd = decompose(build_kernel(sys, ga, gb, 0.0));
    const double ratio = sd.rank() > 1 ? sd.r[1] / sd.r[0] : 0.0;
    worst_ratio = std::max(worst_ratio, ratio);
    worst_e = std::max(worst_e, std::abs(enhancement(sd) - 1.0));
  }
  c.ok = worst_ratio < 1e-10 && worst_e < 1e-9;
  c.detail = "max r2/r1 = " + g17(worst_ratio) + ", max |E-1| = " + g17(worst_e);
  return c;
}

Check check_time_invariance() {
  Check c{"time_invariance"};
  const LevelSystem sys = make_system(0.5, 5.0);
  const FrequencyGrid g = uniform_grid(0.0, 40.0, 401);
  const std::vector<double> base = singular_values(build_kernel(sys, g, g, 0.0));
  double worst = 0.0;
  for (double t : {1.0, 5.0}) {
    const std::vector<double> s = singular_values(build_kernel(sys, g, g, t));
    for (std::size_t k = 0; k < s.size(); ++k)
      worst = std::max(worst, std::abs(s[k] - base[k]) / base[0]);
  }
  c.ok = worst < 1e-8;
  c.detail = "max rel dev = " + g17(worst);
  return c;
}

Check check_fixed_points() {
  Check c{"fixed_point_residuals"};
  const LevelSystem sys = make_system(0.5, 5.0);
  const FrequencyGrid g = uniform_grid(0.0, 40.0, 401);
  const KernelMatrix K = build_kernel(sys, g, g, 0.0);
  const SchmidtDecomposition sd = decompose(K);
  const double rc = fixed_point_residual(K, classical_optimal(sd));
  const double rq = fixed_point_residual(K, quantum_optimal(K));
  c.ok = rc < 1e-6 && rq < 1e-8;
  c.detail = "classical = " + g17(rc) + ", quantum = " + g17(rq);
  return c;
}

Check check_bounds(std::mt19937_64& rng) {
  Check c{"maximality_bounds"};
  const LevelSystem sys = make_system(0.5, 5.0);
  const FrequencyGrid g = uniform_grid(0.0, 40.0, 401);
  const KernelMatrix K = build_kernel(sys, g, g, 0.0);
  const SchmidtDecomposition sd = decompose(K);
  const std::size_t m = std::min<std::size_t>(sd.rank(), 12);
  const double r1sq = sd.r[0] * sd.r[0];
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::complex<double>> cc(m), dd(m);
    double cn = 0.0, dn = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      cc[k] = {gauss(rng), gauss(rng)};
      dd[k] = {gauss(rng), gauss(rng)};
      cn += std::norm(cc[k]);
      dn += std::norm(dd[k]);
    }
    for (std::size_t k = 0; k < m; ++k) {
      cc[k] /= std::sqrt(cn);
      dd[k] /= std::sqrt(dn);
    }
    const double p = coefficient_prob(sd, cc, dd, 1.0, false);
    worst = std::max(worst, (p - r1sq) / r1sq);
  }
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::complex<double>> pk(m);
    double tot = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      pk[k] = uni(rng);
      tot += pk[k].real();
    }
    for (std::size_t k = 0; k < m; ++k) pk[k] /= tot;
    const double p = coefficient_prob(sd, pk, {}, 1.0, true);
    worst = std::max(worst, (p - sd.sum_r_sq()) / sd.sum_r_sq());
  }
  c.ok = worst < 1e-12;
  c.detail = "worst relative excess = " + g17(worst);
  return c;
}

Check check_norms() {
  Check c{"analytic_norm"};
  double worst = 0.0;
  for (double gf : {0.5, 1.0, 2.0})
    for (double dcap : {0.0, 5.0}) {
      const LevelSystem sys = make_system(gf, dcap);
      const FrequencyGrid g =
          graded_grid({{dcap / 2.0, 8.0, 601}}, kDefaultTailCut);
      const double q = weighted_frobenius_sq(build_kernel(sys, g, g, 0.0));
      const double a = analytic_norm(sys);
      worst = std::max(worst, std::abs(q - a) / a);
    }
  c.ok = worst < 5e-3;
  c.detail = "worst rel err = " + g17(worst);
  return c;
}

int cmd_selfcheck(const RunConfig& cfg, const Common& cmn) {
  const fs::path out = resolve_out(cmn, "selfcheck");
  std::mt19937_64 rng(cmn.seed);
  std::vector<Check> checks;
  checks.push_back(check_harmonic_rank1());
  checks.push_back(check_two_atom(rng));
  checks.push_back(check_time_invariance());
  checks.push_back(check_fixed_points());
  checks.push_back(check_bounds(rng));
  checks.push_back(check_norms());

  bool all_ok = true;
  json j;
  for (const Check& c : checks) {
    std::printf("[%s] %s: %s\n", c.ok ? "ok" : "FAIL", c.name.c_str(),
                c.detail.c_str());
    j[c.name] = {{"ok", c.ok}, {"detail", c.detail}};
    all_ok = all_ok && c.ok;
  }
  write_text_file(out / "selfcheck.json", j.dump(2) + "\n");
  finish(out, "selfcheck", cfg, cmn, {"selfcheck.json"});
  if (!all_ok) throw NumericalFailure("selfcheck found failing invariants");
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  openblas_set_num_threads(1);  // determinism; parallelism lives in the pools

  CLI::App app{"Optimal classical pulse pairs and entangled two-photon states "
               "for resonant two-photon excitation"};
  app.set_version_flag("--version", std::string("tpa-opt ") + kVersion);
  app.require_subcommand(1);

  Common cmn;
  app.add_option("--config", cmn.config_path, "INI config file");
  app.add_option("--out", cmn.out_dir, "output directory");
  app.add_option("--workers", cmn.workers, "worker pool size")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cmn.seed, "seed for randomized checks");

  CLI::App* c_kernel = app.add_subcommand("kernel", "dump |T| over the grid");
  c_kernel->fallthrough();
  CLI::App* c_schmidt =
      app.add_subcommand("schmidt", "Schmidt coefficients and mode functions");
  c_schmidt->fallthrough();
  CLI::App* c_optimize = app.add_subcommand(
      "optimize", "optimal pulses, state, probabilities, E, residuals");
  c_optimize->fallthrough();
  CLI::App* c_sweep =
      app.add_subcommand("sweep", "enhancement map over the detuning window");
  c_sweep->fallthrough();
  CLI::App* c_dynamics =
      app.add_subcommand("dynamics", "time-resolved populations");
  c_dynamics->fallthrough();
  CLI::App* c_preset = app.add_subcommand("preset", "end-to-end named report");
  c_preset->fallthrough();
  std::string preset_name;
  c_preset->add_option("name", preset_name, "preset name")
      ->required()
      ->check(CLI::IsMember({"rubidium"}));
  std::string times_spec;
  c_dynamics->add_option("--times", times_spec,
                         "time window as min:max:count");
  CLI::App* c_selfcheck =
      app.add_subcommand("selfcheck", "run the invariant suite");
  c_selfcheck->fallthrough();

  std::vector<std::string> argv_s = args;
  std::vector<const char*> argv;
  argv.push_back("tpa-opt");
  for (const std::string& a : argv_s) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    RunConfig cfg = load_config(cmn.config_path);
    if (!times_spec.empty()) {
      double a = 0, b = 0;
      int n = 0;
      if (std::sscanf(times_spec.c_str(), "%lf:%lf:%d", &a, &b, &n) != 3)
        throw ConfigError("--times expects min:max:count, got '" + times_spec +
                          "'");
      cfg.t_min = a;
      cfg.t_max = b;
      cfg.t_count = n;
      if (cfg.t_count < 1 || cfg.t_max < cfg.t_min)
        throw ConfigError("--times window must be ordered with count >= 1");
    }

    if (c_kernel->parsed()) return cmd_kernel(cfg, cmn);
    if (c_schmidt->parsed()) return cmd_schmidt(cfg, cmn);
    if (c_optimize->parsed()) return cmd_optimize(cfg, cmn);
    if (c_sweep->parsed()) return cmd_sweep(cfg, cmn);
    if (c_dynamics->parsed()) return cmd_dynamics(cfg, cmn);
    if (c_preset->parsed()) return cmd_preset(cfg, cmn);
    if (c_selfcheck->parsed()) return cmd_selfcheck(cfg, cmn);
    std::fprintf(stderr, "no subcommand given\n");
    return 1;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const std::runtime_error& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}

}  // namespace tpa::cli
