#pragma once

#include <complex>

#include "tpa/grid.hpp"
#include "tpa/model.hpp"
#include "tpa/response.hpp"

// Shared fixtures for the test suites.

namespace tpa::test {

// Degenerate working point: delta = 0, Delta = 0; the kernel factorizes.
inline LevelSystem harmonic_system() { return make_system(2.0, 0.0); }

// Narrow-final-state working point with E = 2.4: Delta = 5, gamma_f = 0.5.
inline LevelSystem narrow_system() { return make_system(0.5, 5.0); }

inline FrequencyGrid narrow_grid(int n = 801) { return uniform_grid(0.0, 40.0, n); }

inline FrequencyGrid harmonic_grid(int n = 801) {
  return graded_grid({{0.0, 1.0, n}}, kDefaultTailCut);
}

// Quadrature inner product sum_i w_i conj(a_i) b_i.
inline std::complex<double> winner(const FrequencyGrid& g,
                                   const Eigen::VectorXcd& a,
                                   const Eigen::VectorXcd& b) {
  std::complex<double> s = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    s += g.weights[i] * std::conj(a[i]) * b[i];
  return s;
}

}  // namespace tpa::test
