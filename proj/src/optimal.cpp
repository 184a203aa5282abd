#include "tpa/optimal.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tpa/errors.hpp"

namespace tpa {

namespace {

using std::complex;

bool same_grid(const FrequencyGrid& a, const FrequencyGrid& b) {
  return a.nodes == b.nodes && a.weights == b.weights;
}

void require_pair_grids(const KernelMatrix& K, const PulsePair& p) {
  if (!same_grid(K.grid_a, p.grid_a) || !same_grid(K.grid_b, p.grid_b))
    throw GridMismatch("pulse pair grids do not match kernel grids");
  if (p.a1.size() != K.values.rows() || p.a2.size() != K.values.cols())
    throw GridMismatch("pulse amplitude length does not match kernel");
}

void require_state_grids(const KernelMatrix& K, const TwoPhotonState& s) {
  if (!same_grid(K.grid_a, s.grid_a) || !same_grid(K.grid_b, s.grid_b))
    throw GridMismatch("state grids do not match kernel grids");
  if (s.amplitude.rows() != K.values.rows() ||
      s.amplitude.cols() != K.values.cols())
    throw GridMismatch("state amplitude shape does not match kernel");
}

// transition amplitude sum_ij w_i w_j T_ij A1_i A2_j
complex<double> amplitude_classical(const KernelMatrix& K, const PulsePair& p) {
  complex<double> s = 0.0;
  for (Eigen::Index j = 0; j < K.values.cols(); ++j) {
    complex<double> col = 0.0;
    for (Eigen::Index i = 0; i < K.values.rows(); ++i)
      col += K.grid_a.weights[i] * K.values(i, j) * p.a1[i];
    s += K.grid_b.weights[j] * col * p.a2[j];
  }
  return s;
}

complex<double> amplitude_quantum(const KernelMatrix& K,
                                  const TwoPhotonState& st) {
  complex<double> s = 0.0;
  for (Eigen::Index j = 0; j < K.values.cols(); ++j) {
    complex<double> col = 0.0;
    for (Eigen::Index i = 0; i < K.values.rows(); ++i)
      col += K.grid_a.weights[i] * K.values(i, j) * st.amplitude(i, j);
    s += K.grid_b.weights[j] * col;
  }
  return s;
}

}  // namespace

PulsePair classical_optimal(const SchmidtDecomposition& sd, double photons) {
  if (sd.rank() == 0)
    throw EmptyDecomposition("decomposition holds no Schmidt modes");
  if (!(photons > 0.0))
    throw std::invalid_argument("photon number must be positive");
  PulsePair p;
  p.photon_number = photons;
  p.grid_a = sd.grid_a;
  p.grid_b = sd.grid_b;
  const double amp = std::sqrt(photons);
  p.a1 = amp * sd.psi.col(0);
  p.a2 = amp * sd.phi.col(0);
  return p;
}

TwoPhotonState quantum_optimal(const KernelMatrix& K) {
  const double nrm = weighted_frobenius_sq(K);
  if (nrm <= 0.0) throw ZeroKernel("kernel norm vanishes");
  TwoPhotonState s;
  s.norm_constant = nrm;
  s.grid_a = K.grid_a;
  s.grid_b = K.grid_b;
  s.amplitude = K.values.conjugate() / std::sqrt(nrm);
  return s;
}

double transition_prob_classical(const KernelMatrix& K, const PulsePair& p) {
  require_pair_grids(K, p);
  return std::norm(amplitude_classical(K, p));
}

double transition_prob_quantum(const KernelMatrix& K, const TwoPhotonState& s) {
  require_state_grids(K, s);
  return std::norm(amplitude_quantum(K, s));
}

double enhancement(const SchmidtDecomposition& sd) {
  if (sd.rank() == 0)
    throw EmptyDecomposition("decomposition holds no Schmidt modes");
  if (sd.r[0] <= 0.0) throw ZeroKernel("leading Schmidt coefficient vanishes");
  return sd.sum_r_sq() / (sd.r[0] * sd.r[0]);
}

double fixed_point_residual(const KernelMatrix& K, const PulsePair& p) {
  require_pair_grids(K, p);
  const complex<double> S = amplitude_classical(K, p);

  // stationarity directions: A1 ~ conj(h1)*S, A2 ~ conj(h2)*S with
  // h1_i = sum_j w_j T_ij A2_j and h2_j = sum_i w_i T_ij A1_i
  Eigen::VectorXcd g1 = Eigen::VectorXcd::Zero(p.a1.size());
  Eigen::VectorXcd g2 = Eigen::VectorXcd::Zero(p.a2.size());
  for (Eigen::Index j = 0; j < K.values.cols(); ++j)
    for (Eigen::Index i = 0; i < K.values.rows(); ++i) {
      g1[i] += K.grid_b.weights[j] * K.values(i, j) * p.a2[j];
      g2[j] += K.grid_a.weights[i] * K.values(i, j) * p.a1[i];
    }
  for (Eigen::Index i = 0; i < g1.size(); ++i) g1[i] = std::conj(g1[i]) * S;
  for (Eigen::Index j = 0; j < g2.size(); ++j) g2[j] = std::conj(g2[j]) * S;

  // one common least-squares scale for the stacked system
  complex<double> gx = 0.0;
  double gg = 0.0, xx = 0.0;
  for (Eigen::Index i = 0; i < g1.size(); ++i) {
    const double w = K.grid_a.weights[i];
    gx += w * std::conj(g1[i]) * p.a1[i];
    gg += w * std::norm(g1[i]);
    xx += w * std::norm(p.a1[i]);
  }
  for (Eigen::Index j = 0; j < g2.size(); ++j) {
    const double w = K.grid_b.weights[j];
    gx += w * std::conj(g2[j]) * p.a2[j];
    gg += w * std::norm(g2[j]);
    xx += w * std::norm(p.a2[j]);
  }
  if (xx == 0.0) throw std::invalid_argument("pulse pair has zero norm");
  const complex<double> alpha = gg > 0.0 ? gx / gg : complex<double>(0.0);

  double res = 0.0;
  for (Eigen::Index i = 0; i < g1.size(); ++i)
    res += K.grid_a.weights[i] * std::norm(alpha * g1[i] - p.a1[i]);
  for (Eigen::Index j = 0; j < g2.size(); ++j)
    res += K.grid_b.weights[j] * std::norm(alpha * g2[j] - p.a2[j]);
  return std::sqrt(res / xx);
}

double fixed_point_residual(const KernelMatrix& K, const TwoPhotonState& s) {
  require_state_grids(K, s);
  const complex<double> S = amplitude_quantum(K, s);

  complex<double> gx = 0.0;
  double gg = 0.0, xx = 0.0;
  for (Eigen::Index j = 0; j < K.values.cols(); ++j)
    for (Eigen::Index i = 0; i < K.values.rows(); ++i) {
      const double w = K.grid_a.weights[i] * K.grid_b.weights[j];
      const complex<double> g = std::conj(K.values(i, j)) * S;
      gx += w * std::conj(g) * s.amplitude(i, j);
      gg += w * std::norm(g);
      xx += w * std::norm(s.amplitude(i, j));
    }
  if (xx == 0.0) throw std::invalid_argument("state amplitude has zero norm");
  const complex<double> alpha = gg > 0.0 ? gx / gg : complex<double>(0.0);

  double res = 0.0;
  for (Eigen::Index j = 0; j < K.values.cols(); ++j)
    for (Eigen::Index i = 0; i < K.values.rows(); ++i) {
      const double w = K.grid_a.weights[i] * K.grid_b.weights[j];
      const complex<double> g = std::conj(K.values(i, j)) * S;
      res += w * std::norm(alpha * g - s.amplitude(i, j));
    }
  return std::sqrt(res / xx);
}

double coefficient_prob(const SchmidtDecomposition& sd,
                        std::span<const std::complex<double>> c,
                        std::span<const std::complex<double>> d,
                        double photons, bool mixed) {
  if (sd.rank() == 0)
    throw EmptyDecomposition("decomposition holds no Schmidt modes");
  if (!(photons > 0.0))
    throw std::invalid_argument("photon number must be positive");
  if (c.empty() || c.size() > sd.rank())
    throw BadRank("coefficient count out of range 1.." +
                  std::to_string(sd.rank()));

  if (mixed) {
    double total = 0.0, prob = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (std::abs(c[k].imag()) > 1e-10 || c[k].real() < -1e-12)
        throw UnnormalizedCoefficients(
            "mixed weights must be real and nonnegative");
      total += c[k].real();
      prob += c[k].real() * sd.r[k] * sd.r[k];
    }
    if (std::abs(total - 1.0) > 1e-10)
      throw UnnormalizedCoefficients("mixed weights must sum to 1");
    return photons * photons * prob;
  }

  if (d.empty() || d.size() > sd.rank())
    throw BadRank("coefficient count out of range 1.." +
                  std::to_string(sd.rank()));
  double cn = 0.0, dn = 0.0;
  for (const auto& v : c) cn += std::norm(v);
  for (const auto& v : d) dn += std::norm(v);
  if (std::abs(cn - 1.0) > 1e-10 || std::abs(dn - 1.0) > 1e-10)
    throw UnnormalizedCoefficients("coefficient vectors must have unit norm");

  complex<double> amp = 0.0;
  const std::size_t m = std::min(c.size(), d.size());
  for (std::size_t k = 0; k < m; ++k) amp += sd.r[k] * c[k] * d[k];
  return std::norm(photons * amp);
}

double analytic_norm(const LevelSystem& sys) {
  if (sys.mode != CouplingMode::Symmetric)
    throw UnsupportedMode("closed-form norm requires the symmetric coupling");
  const double mu2 = sys.mu_ge * sys.mu_ge * sys.mu_ef * sys.mu_ef;
  const double e4 = sys.e0 * sys.e0 * sys.e0 * sys.e0;
  return 2.0 * std::numbers::pi * std::numbers::pi * mu2 * e4 /
         (sys.gamma_e * sys.gamma_f);
}

}  // namespace tpa
