#include "tpa/dynamics.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "tpa/errors.hpp"
#include "tpa/response.hpp"

namespace tpa {

namespace {

using std::complex;
constexpr complex<double> kI{0.0, 1.0};

void require_shared_axis(const FrequencyGrid& a, const FrequencyGrid& b) {
  if (a.nodes != b.nodes || a.weights != b.weights)
    throw GridMismatch("populations need one shared frequency axis");
}

void require_ladder_mode(const LevelSystem& sys) {
  if (sys.mode == CouplingMode::TwoAtom)
    throw UnsupportedMode(
        "populations are defined for the single-ladder couplings only");
}

Eigen::VectorXcd phase_vector(const FrequencyGrid& g, double t) {
  Eigen::VectorXcd e(g.size());
  for (Eigen::Index i = 0; i < e.size(); ++i)
    e[i] = std::exp(-kI * g.nodes[i] * t);
  return e;
}

}  // namespace

std::vector<double> default_time_window() { return time_window(-30.0, 30.0, 601); }

std::vector<double> time_window(double t_min, double t_max, int count) {
  if (count < 1) throw std::invalid_argument("time sample count must be >= 1");
  if (t_max < t_min) throw std::invalid_argument("time window must be ordered");
  std::vector<double> t(count);
  for (int k = 0; k < count; ++k)
    t[k] = count == 1 ? t_min
                      : t_min + (t_max - t_min) * static_cast<double>(k) /
                                    (count - 1);
  return t;
}

PopulationTrace classical_populations(const LevelSystem& sys,
                                      const PulsePair& pulses,
                                      const std::vector<double>& times) {
  require_ladder_mode(sys);
  require_shared_axis(pulses.grid_a, pulses.grid_b);
  const FrequencyGrid& g = pulses.grid_a;
  const KernelMatrix K0 = build_kernel(sys, g, g, 0.0);

  // M_ij = w_i A1_i T_ij w_j A2_j so the target amplitude is e_t^T M e_t
  Eigen::MatrixXcd M = K0.values;
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    M.row(i) *= g.weights[i] * pulses.a1[i];
  for (Eigen::Index j = 0; j < M.cols(); ++j)
    M.col(j) *= g.weights[j] * pulses.a2[j];

  // intermediate-state weights w_i (A1+A2)_i / (nu_i + i*gamma_e)
  Eigen::VectorXcd ce(g.size());
  for (Eigen::Index i = 0; i < ce.size(); ++i)
    ce[i] = g.weights[i] * (pulses.a1[i] + pulses.a2[i]) /
            (g.nodes[i] + kI * sys.gamma_e);
  const double coup_e = sys.mu_ge * sys.e0;

  PopulationTrace tr;
  tr.drive = "classical";
  tr.times = times;
  tr.p_e.resize(times.size());
  tr.p_f.resize(times.size());
  for (std::size_t k = 0; k < times.size(); ++k) {
    const Eigen::VectorXcd et = phase_vector(g, times[k]);
    const Eigen::VectorXcd me = M * et;
    tr.p_e[k] = std::norm(coup_e * (ce.array() * et.array()).sum());
    tr.p_f[k] = std::norm((et.array() * me.array()).sum());
  }
  return tr;
}

PopulationTrace quantum_populations(const LevelSystem& sys,
                                    const TwoPhotonState& state,
                                    const std::vector<double>& times) {
  require_ladder_mode(sys);
  require_shared_axis(state.grid_a, state.grid_b);
  const FrequencyGrid& g = state.grid_a;
  if (state.amplitude.rows() != static_cast<Eigen::Index>(g.size()) ||
      state.amplitude.cols() != static_cast<Eigen::Index>(g.size()))
    throw GridMismatch("state amplitude shape does not match its grid");
  const KernelMatrix K0 = build_kernel(sys, g, g, 0.0);

  Eigen::MatrixXcd M = K0.values.cwiseProduct(state.amplitude);
  for (Eigen::Index i = 0; i < M.rows(); ++i) M.row(i) *= g.weights[i];
  for (Eigen::Index j = 0; j < M.cols(); ++j) M.col(j) *= g.weights[j];

  // B1 sums over the first argument, B2 over the second
  Eigen::MatrixXcd P = state.amplitude;  // P_ij = w_i phi_ij/(nu_i+i*g_e)
  for (Eigen::Index i = 0; i < P.rows(); ++i)
    P.row(i) *= g.weights[i] / (g.nodes[i] + kI * sys.gamma_e);
  Eigen::MatrixXcd Q = state.amplitude;  // Q_ij = phi_ij w_j/(nu_j+i*g_e)
  for (Eigen::Index j = 0; j < Q.cols(); ++j)
    Q.col(j) *= g.weights[j] / (g.nodes[j] + kI * sys.gamma_e);
  const double coup_e2 = sys.mu_ge * sys.mu_ge * sys.e0 * sys.e0;

  PopulationTrace tr;
  tr.drive = "quantum";
  tr.times = times;
  tr.p_e.resize(times.size());
  tr.p_f.resize(times.size());
  for (std::size_t k = 0; k < times.size(); ++k) {
    const Eigen::VectorXcd et = phase_vector(g, times[k]);
    const Eigen::VectorXcd b1 = P.transpose() * et;  // over nu_b
    const Eigen::VectorXcd b2 = Q * et;              // over nu_a
    const Eigen::VectorXcd me = M * et;
    double pe = 0.0;
    for (Eigen::Index j = 0; j < b1.size(); ++j)
      pe += g.weights[j] * std::norm(b1[j]);
    for (Eigen::Index i = 0; i < b2.size(); ++i)
      pe += g.weights[i] * std::norm(b2[i]);
    tr.p_e[k] = coup_e2 * pe;
    tr.p_f[k] = std::norm((et.array() * me.array()).sum());
  }
  return tr;
}

double symmetry_metric(const PopulationTrace& trace) {
  const std::size_t n = trace.times.size();
  if (n == 0 || trace.p_f.size() != n)
    throw AsymmetricTimeGrid("trace holds no symmetric time axis");
  double span = 0.0;
  for (double t : trace.times) span = std::max(span, std::abs(t));
  const double tol = 1e-9 * std::max(span, 1.0);
  for (std::size_t k = 0; k < n; ++k)
    if (std::abs(trace.times[k] + trace.times[n - 1 - k]) > tol)
      throw AsymmetricTimeGrid("time samples are not symmetric about 0");

  double peak = 0.0, worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    peak = std::max(peak, trace.p_f[k]);
    worst = std::max(worst, std::abs(trace.p_f[k] - trace.p_f[n - 1 - k]));
  }
  if (peak == 0.0) return 0.0;
  return worst / peak;
}

}  // namespace tpa
