#pragma once

#include <string>
#include <vector>

#include "tpa/optimal.hpp"

// Time-resolved intermediate- and target-state populations p_e(t), p_f(t) for
// optimal classical pulses and optimal two-photon states. All time dependence
// is evaluated in the frequency domain (the second-order amplitudes are exact
// for infinitely extended pulses); no differential-equation propagation.

namespace tpa {

struct PopulationTrace {
  std::vector<double> times;  // units 1/gamma_e
  std::vector<double> p_e;
  std::vector<double> p_f;
  std::string drive;          // "classical" or "quantum"
};

// Uniformly spaced, symmetric-about-zero time window; the default is
// [-30, 30]/gamma_e with 601 samples.
std::vector<double> default_time_window();
std::vector<double> time_window(double t_min, double t_max, int count);

// p_e(t) = |c_e(t)|^2 with c_e = mu_ge*E0 * sum_i w_i [A1+A2](nu_i)
//          * exp(-i*nu_i*t)/(nu_i + i*gamma_e)   (coherent field sum), and
// p_f(t) = |sum_ij w_i w_j T_0(nu_i,nu_j) exp(-i*(nu_i+nu_j)*t) A1_i A2_j|^2.
// Requires Symmetric or SinglePath mode (UnsupportedMode otherwise) and a
// shared axis grid (GridMismatch otherwise).
PopulationTrace classical_populations(const LevelSystem& sys,
                                      const PulsePair& pulses,
                                      const std::vector<double>& times);

// p_f(t) = |sum_ij w_i w_j T_0 exp(-i*(nu_i+nu_j)*t) phi_ij|^2 and
// p_e(t) = sum_j w_j |B1(t,nu_j)|^2 + sum_i w_i |B2(t,nu_i)|^2 with
// B1(t,nu_b) = mu_ge*E0 * sum_i w_i phi(nu_i,nu_b) exp(-i*nu_i*t)/(nu_i+i*g_e)
// and B2 the mirrored assignment: after one absorption the leftover photon
// occupies orthogonal field modes, so the alternatives add incoherently.
PopulationTrace quantum_populations(const LevelSystem& sys,
                                    const TwoPhotonState& state,
                                    const std::vector<double>& times);

// max_t |p_f(t) - p_f(-t)| / max_t p_f(t). Requires the time grid to be
// symmetric about 0 (AsymmetricTimeGrid otherwise).
double symmetry_metric(const PopulationTrace& trace);

}  // namespace tpa
