#pragma once

#include <Eigen/Dense>
#include <span>

#include "tpa/schmidt.hpp"

// Optimal classical pulse pairs, optimal entangled two-photon states, their
// transition probabilities, the enhancement factor, and fixed-point /
// maximality diagnostics.

namespace tpa {

struct PulsePair {
  Eigen::VectorXcd a1;      // A_1 on grid_a nodes
  Eigen::VectorXcd a2;      // A_2 on grid_b nodes
  double photon_number = 1; // N: quadrature norm of each amplitude
  FrequencyGrid grid_a, grid_b;
};

struct TwoPhotonState {
  Eigen::MatrixXcd amplitude; // phi(nu_a, nu_b) on grid_a x grid_b, unit norm
  double norm_constant = 0;   // script-N: squared kernel norm by quadrature
  FrequencyGrid grid_a, grid_b;
};

// A_1 = sqrt(N)*psi_1, A_2 = sqrt(N)*phi_1: direct substitution into the
// transition amplitude yields N*r_1. Throws EmptyDecomposition on rank 0 and
// std::invalid_argument on N <= 0.
PulsePair classical_optimal(const SchmidtDecomposition& sd, double photons = 1.0);

// amplitude = conj(T)/sqrt(script-N) with script-N the quadrature squared
// norm of the kernel. Throws ZeroKernel when the kernel vanishes.
TwoPhotonState quantum_optimal(const KernelMatrix& K);

// |sum_ij w_i w_j T_ij A_1(nu_i) A_2(nu_j)|^2. Throws GridMismatch when the
// pulse grids differ from the kernel grids.
double transition_prob_classical(const KernelMatrix& K, const PulsePair& p);

// |sum_ij w_i w_j T_ij phi_ij|^2; equals sum_k r_k^2 for the optimal state.
double transition_prob_quantum(const KernelMatrix& K, const TwoPhotonState& s);

// E = 1 + sum_{k>=2} r_k^2 / r_1^2. Throws ZeroKernel when r_1 = 0.
double enhancement(const SchmidtDecomposition& sd);

// Relative L2 mismatch between the candidate and the image of the variational
// fixed-point operator that optimal solutions satisfy, after choosing the
// eigen-scale by least squares (the Lagrange multiplier is never fixed a
// priori). Optimal inputs return machine-level residuals; generic normalized
// inputs return order 1.
double fixed_point_residual(const KernelMatrix& K, const PulsePair& p);
double fixed_point_residual(const KernelMatrix& K, const TwoPhotonState& s);

// Transition probability from Schmidt-coefficient expansions.
// Coherent (mixed=false): |N sum_k r_k c_k d_k|^2 with both coefficient sets
// unit-normalized. Mixed (mixed=true): N^2 sum_k p_k r_k^2 with c a real
// nonnegative weight vector summing to 1 (d ignored). Normalization checked
// to 1e-10; violations throw UnnormalizedCoefficients.
double coefficient_prob(const SchmidtDecomposition& sd,
                        std::span<const std::complex<double>> c,
                        std::span<const std::complex<double>> d,
                        double photons, bool mixed);

// Closed-form state normalization 2*pi^2*mu_ge^2*mu_ef^2*E0^4/(gamma_e*gamma_f)
// for the Symmetric kernel; independent of Delta and delta. Throws
// UnsupportedMode for other coupling modes.
double analytic_norm(const LevelSystem& sys);

}  // namespace tpa
