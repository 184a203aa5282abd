#pragma once

#include <Eigen/Dense>
#include <vector>

#include "tpa/response.hpp"

// Continuum Schmidt decomposition of the response kernel via quadrature-
// weighted SVD (Nystrom method):
//
//   M = diag(sqrt(w_a)) * conj(T) * diag(sqrt(w_b)) = U S V^H
//   psi_k(nu_i) = U(i,k)/sqrt(w_a[i]),  phi_k(nu_j) = V^H(k,j)/sqrt(w_b[j])
//
// so that T = sum_k r_k psi_k* phi_k* entrywise and the mode functions are
// orthonormal under the quadrature inner product <f,g> = sum_i w_i f_i* g_i.
// The sqrt(w) weighting on both sides is what makes the r_k approximate the
// singular values of the *integral operator* rather than of one grid sample.
// Note phi is the V^H row itself, not its conjugate; the substitution
// amplitude sum_ij w_i w_j T_ij psi_1,i phi_1,j = r_1 pins the convention.

namespace tpa {

struct SchmidtDecomposition {
  std::vector<double> r;    // descending, nonnegative Schmidt coefficients
  Eigen::MatrixXcd psi;     // column k = psi_k sampled on grid_a nodes
  Eigen::MatrixXcd phi;     // column k = phi_k sampled on grid_b nodes
  FrequencyGrid grid_a, grid_b;
  double t = 0.0;
  LevelSystem system;

  std::size_t rank() const { return r.size(); }
  double sum_r_sq() const;
};

// Full decomposition with modes. Modes with r_k < 1e-12*r_1 are dropped.
// Phases are fixed deterministically: each psi_k's largest-modulus sample
// (first index on ties) is rotated to be real positive, with the inverse
// rotation applied to phi_k. Near-degenerate coefficient pairs
// (|r_k - r_{k+1}| < 1e-10*r_1) are ordered by the first node at which the
// |psi| profiles differ, larger profile first.
// Throws NumericalFailure if the factorization backend does not converge.
SchmidtDecomposition decompose(const KernelMatrix& K);

// Singular values only (no mode recovery); much faster, used by sweeps.
std::vector<double> singular_values(const KernelMatrix& K);

// Weighted Frobenius distance between T and its rank-m reconstruction
// sum_{k<=m} r_k psi_k* phi_k*, relative to ||T||. Throws BadRank unless
// 1 <= m <= rank.
double schmidt_residual(const KernelMatrix& K, const SchmidtDecomposition& sd,
                        int m);

}  // namespace tpa
