#include "tpa/schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

#include "tpa/errors.hpp"

namespace tpa {

namespace {

// Economy SVD via LAPACK's divide-and-conquer driver. Input is destroyed.
void zgesdd_econ(Eigen::MatrixXcd& M, Eigen::VectorXd& sigma,
                 Eigen::MatrixXcd& U, Eigen::MatrixXcd& VT) {
  const lapack_int m = static_cast<lapack_int>(M.rows());
  const lapack_int n = static_cast<lapack_int>(M.cols());
  const lapack_int k = std::min(m, n);
  sigma.resize(k);
  U.resize(m, k);
  VT.resize(k, n);
  const lapack_int info = LAPACKE_zgesdd(
      LAPACK_COL_MAJOR, 'S', m, n,
      reinterpret_cast<lapack_complex_double*>(M.data()), m, sigma.data(),
      reinterpret_cast<lapack_complex_double*>(U.data()), m,
      reinterpret_cast<lapack_complex_double*>(VT.data()), k);
  if (info != 0)
    throw NumericalFailure("zgesdd failed to converge (info=" +
                           std::to_string(info) + ")");
}

Eigen::MatrixXcd weighted_matrix(const KernelMatrix& K) {
  Eigen::MatrixXcd M = K.values.conjugate();
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    M.row(i) *= std::sqrt(K.grid_a.weights[i]);
  for (Eigen::Index j = 0; j < M.cols(); ++j)
    M.col(j) *= std::sqrt(K.grid_b.weights[j]);
  return M;
}

// Largest-modulus sample index; the first index wins ties.
Eigen::Index peak_index(const Eigen::VectorXcd& v) {
  Eigen::Index best = 0;
  double best_mod = std::abs(v[0]);
  for (Eigen::Index i = 1; i < v.size(); ++i) {
    const double mod = std::abs(v[i]);
    if (mod > best_mod) {
      best = i;
      best_mod = mod;
    }
  }
  return best;
}

}  // namespace

double SchmidtDecomposition::sum_r_sq() const {
  double s = 0.0;
  for (double v : r) s += v * v;
  return s;
}

SchmidtDecomposition decompose(const KernelMatrix& K) {
  if (!K.values.allFinite())
    throw NumericalFailure("kernel contains non-finite entries");

  Eigen::MatrixXcd M = weighted_matrix(K);
  Eigen::VectorXd sigma;
  Eigen::MatrixXcd U, VT;
  zgesdd_econ(M, sigma, U, VT);

  SchmidtDecomposition sd;
  sd.grid_a = K.grid_a;
  sd.grid_b = K.grid_b;
  sd.t = K.t;
  sd.system = K.system;

  // drop modes below the storage truncation threshold
  const double r1 = sigma.size() ? sigma[0] : 0.0;
  Eigen::Index keep = 0;
  while (keep < sigma.size() && sigma[keep] >= 1e-12 * r1 && sigma[keep] > 0.0)
    ++keep;
  if (keep == 0) keep = sigma.size() ? 1 : 0;

  sd.r.assign(sigma.data(), sigma.data() + keep);
  sd.psi.resize(U.rows(), keep);
  sd.phi.resize(VT.cols(), keep);
  for (Eigen::Index k = 0; k < keep; ++k) {
    for (Eigen::Index i = 0; i < U.rows(); ++i)
      sd.psi(i, k) = U(i, k) / std::sqrt(K.grid_a.weights[i]);
    // phi_k(nu_j) = (V^H)_kj / sqrt(w_b[j]) -- the row itself, unconjugated,
    // so that T = sum_k r_k psi_k* phi_k* holds entrywise
    for (Eigen::Index j = 0; j < VT.cols(); ++j)
      sd.phi(j, k) = VT(k, j) / std::sqrt(K.grid_b.weights[j]);
  }

  // deterministic ordering inside near-degenerate runs: compare |psi|
  // profiles at their first differing node, larger profile first
  for (Eigen::Index k = 0; k + 1 < keep; ++k) {
    if (std::abs(sd.r[k] - sd.r[k + 1]) >= 1e-10 * r1) continue;
    const double sample_tol =
        1e-10 * std::max(sd.psi.col(k).cwiseAbs().maxCoeff(),
                         sd.psi.col(k + 1).cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i < sd.psi.rows(); ++i) {
      const double a = std::abs(sd.psi(i, k));
      const double b = std::abs(sd.psi(i, k + 1));
      if (std::abs(a - b) <= sample_tol) continue;
      if (b > a) {
        sd.psi.col(k).swap(sd.psi.col(k + 1));
        sd.phi.col(k).swap(sd.phi.col(k + 1));
        std::swap(sd.r[k], sd.r[k + 1]);
      }
      break;
    }
  }

  // phase fixing: rotate each pair so psi_k's peak sample is real positive
  for (Eigen::Index k = 0; k < keep; ++k) {
    const Eigen::Index ip = peak_index(sd.psi.col(k));
    const std::complex<double> peak = sd.psi(ip, k);
    if (std::abs(peak) == 0.0) continue;
    const std::complex<double> rot = std::conj(peak) / std::abs(peak);
    sd.psi.col(k) *= rot;             // psi -> psi * e^{-i arg(peak)}
    sd.phi.col(k) *= std::conj(rot);  // phi -> phi * e^{+i arg(peak)}
  }
  return sd;
}

std::vector<double> singular_values(const KernelMatrix& K) {
  if (!K.values.allFinite())
    throw NumericalFailure("kernel contains non-finite entries");
  Eigen::MatrixXcd M = weighted_matrix(K);
  const lapack_int m = static_cast<lapack_int>(M.rows());
  const lapack_int n = static_cast<lapack_int>(M.cols());
  Eigen::VectorXd sigma(std::min(m, n));
  const lapack_int info = LAPACKE_zgesdd(
      LAPACK_COL_MAJOR, 'N', m, n,
      reinterpret_cast<lapack_complex_double*>(M.data()), m, sigma.data(),
      nullptr, 1, nullptr, 1);
  if (info != 0)
    throw NumericalFailure("zgesdd failed to converge (info=" +
                           std::to_string(info) + ")");
  return {sigma.data(), sigma.data() + sigma.size()};
}

double schmidt_residual(const KernelMatrix& K, const SchmidtDecomposition& sd,
                        int m) {
  if (m < 1 || static_cast<std::size_t>(m) > sd.rank())
    throw BadRank("reconstruction rank " + std::to_string(m) +
                  " out of range 1.." + std::to_string(sd.rank()));

  // accumulate sum_{k<=m} r_k psi_k* phi_k* and compare in the weighted norm
  Eigen::MatrixXcd approx =
      sd.psi.leftCols(m).conjugate() *
      Eigen::VectorXd::Map(sd.r.data(), m).asDiagonal() *
      sd.phi.leftCols(m).transpose().conjugate();

  double num = 0.0, den = 0.0;
  for (Eigen::Index j = 0; j < K.values.cols(); ++j) {
    double cn = 0.0, cdn = 0.0;
    for (Eigen::Index i = 0; i < K.values.rows(); ++i) {
      cn += K.grid_a.weights[i] * std::norm(K.values(i, j) - approx(i, j));
      cdn += K.grid_a.weights[i] * std::norm(K.values(i, j));
    }
    num += K.grid_b.weights[j] * cn;
    den += K.grid_b.weights[j] * cdn;
  }
  if (den == 0.0) throw ZeroKernel("kernel norm vanishes");
  return std::sqrt(num / den);
}

}  // namespace tpa
