#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "tpa/grid.hpp"
#include "tpa/model.hpp"

// The two-photon response kernel T_t(nu_a, nu_b): the second-order transition
// amplitude density for absorbing one photon at omega_e + nu_a and one at
// omega_e + nu_b, evaluated at target time t.

namespace tpa {

struct KernelMatrix {
  Eigen::MatrixXcd values;  // (i, j) = T_t(nu_a[i], nu_b[j])
  FrequencyGrid grid_a, grid_b;
  double t = 0.0;
  LevelSystem system;

  Eigen::Index rows() const { return values.rows(); }
  Eigen::Index cols() const { return values.cols(); }
};

// Pointwise kernel in detuning units (gamma_e = 1 internally, E_0 = 1):
//   Symmetric : mu_ge*mu_ef*E0^2 * [1/(nu_a+i*g_e) + 1/(nu_b+i*g_e)]
//               * 1/(nu_a+nu_b-Delta+i*g_f) * exp(-i*(nu_a+nu_b)*t)
//   SinglePath: same with the second summand dropped
//   TwoAtom   : mu_ge*mu_ef*E0^2 * 1/(nu_a+i*g_e) * 1/(nu_b-d_atoms+i*g_e2)
//               * exp(-i*(nu_a+nu_b)*t)   (exact product form)
// Poles sit off the real axis (gamma > 0), so every real argument is valid.
std::complex<double> response_at(const LevelSystem& sys, double nu_a,
                                 double nu_b, double t);

inline constexpr std::uint64_t kDefaultEntryCap = 25'000'000;

// Dense evaluation of response_at over grid_a x grid_b. Throws BuildTooLarge
// when the matrix would exceed entry_cap entries (predictable failure instead
// of thrashing).
KernelMatrix build_kernel(const LevelSystem& sys, const FrequencyGrid& grid_a,
                          const FrequencyGrid& grid_b, double t,
                          std::uint64_t entry_cap = kDefaultEntryCap);

// Weighted Frobenius norm squared: sum_ij w_a[i]*w_b[j]*|T_ij|^2. This is the
// quadrature analogue of the state normalization integral.
double weighted_frobenius_sq(const KernelMatrix& K);

}  // namespace tpa
