#include "tpa/response.hpp"

#include <string>

#include "tpa/errors.hpp"

namespace tpa {

namespace {
using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};
}  // namespace

std::complex<double> response_at(const LevelSystem& sys, double nu_a,
                                 double nu_b, double t) {
  const double coup = sys.mu_ge * sys.mu_ef * sys.e0 * sys.e0;
  const cd phase = std::exp(-kI * ((nu_a + nu_b) * t));
  switch (sys.mode) {
    case CouplingMode::Symmetric:
    case CouplingMode::SinglePath: {
      cd path = 1.0 / (cd(nu_a, sys.gamma_e));
      if (sys.mode == CouplingMode::Symmetric)
        path += 1.0 / (cd(nu_b, sys.gamma_e));
      const cd final_res =
          1.0 / cd(nu_a + nu_b - sys.delta_cap, sys.gamma_f);
      return coup * path * final_res * phase;
    }
    case CouplingMode::TwoAtom: {
      // exact product form: one Lorentzian per atom
      const cd a = 1.0 / cd(nu_a, sys.gamma_e);
      const cd b = 1.0 / cd(nu_b - sys.two_atom.delta_atoms,
                            sys.two_atom.gamma_e2);
      return coup * a * b * phase;
    }
  }
  return {};
}

KernelMatrix build_kernel(const LevelSystem& sys, const FrequencyGrid& grid_a,
                          const FrequencyGrid& grid_b, double t,
                          std::uint64_t entry_cap) {
  const std::uint64_t entries =
      static_cast<std::uint64_t>(grid_a.size()) * grid_b.size();
  if (entries > entry_cap)
    throw BuildTooLarge("kernel would hold " + std::to_string(entries) +
                        " entries, cap is " + std::to_string(entry_cap));

  KernelMatrix K;
  K.grid_a = grid_a;
  K.grid_b = grid_b;
  K.t = t;
  K.system = sys;
  K.values.resize(static_cast<Eigen::Index>(grid_a.size()),
                  static_cast<Eigen::Index>(grid_b.size()));
  for (Eigen::Index j = 0; j < K.values.cols(); ++j)
    for (Eigen::Index i = 0; i < K.values.rows(); ++i)
      K.values(i, j) = response_at(sys, grid_a.nodes[i], grid_b.nodes[j], t);
  return K;
}

double weighted_frobenius_sq(const KernelMatrix& K) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < K.values.cols(); ++j) {
    double col = 0.0;
    for (Eigen::Index i = 0; i < K.values.rows(); ++i)
      col += K.grid_a.weights[i] * std::norm(K.values(i, j));
    sum += K.grid_b.weights[j] * col;
  }
  return sum;
}

}  // namespace tpa
