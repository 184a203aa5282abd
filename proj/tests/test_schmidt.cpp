#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "helpers.hpp"
#include "tpa/errors.hpp"
#include "tpa/schmidt.hpp"

using namespace tpa;
using tpa::test::narrow_system;
using tpa::test::harmonic_system;
using tpa::test::winner;
using cplx = std::complex<double>;

namespace {

KernelMatrix narrow_kernel(int n) {
  const FrequencyGrid g = uniform_grid(0.0, 40.0, n);
  return build_kernel(narrow_system(), g, g, 0.0);
}

}  // namespace

TEST_CASE("modes are orthonormal under the quadrature inner product") {
  const KernelMatrix K = narrow_kernel(201);
  const SchmidtDecomposition sd = decompose(K);
  REQUIRE(sd.rank() >= 4);
  const Eigen::Index m = std::min<Eigen::Index>(6, sd.rank());
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index k = 0; k < m; ++k) {
      const double expect = (j == k) ? 1.0 : 0.0;
      CHECK(std::abs(winner(sd.grid_a, sd.psi.col(j), sd.psi.col(k)) - expect) <
            1e-8);
      CHECK(std::abs(winner(sd.grid_b, sd.phi.col(j), sd.phi.col(k)) - expect) <
            1e-8);
    }
}

TEST_CASE("coefficients are nonnegative, sorted, and exhaust the kernel norm") {
  const KernelMatrix K = narrow_kernel(201);
  const SchmidtDecomposition sd = decompose(K);
  REQUIRE(sd.rank() >= 2);
  for (std::size_t k = 0; k < sd.rank(); ++k) {
    CHECK(sd.r[k] >= 0.0);
    if (k) CHECK(sd.r[k] <= sd.r[k - 1] * (1.0 + 1e-14));
  }
  const double wfs = weighted_frobenius_sq(K);
  CHECK(std::abs(sd.sum_r_sq() - wfs) <= 1e-10 * wfs);
  CHECK(sd.r.back() >= 1e-12 * sd.r.front());  // storage truncation applied
}

TEST_CASE("narrow-final-state reference point reproduces pinned values") {
  const KernelMatrix K = narrow_kernel(801);
  const SchmidtDecomposition sd = decompose(K);
  const double r1_sq = sd.r[0] * sd.r[0];
  CHECK(r1_sq == doctest::Approx(16.325698).epsilon(1e-6));
  CHECK(sd.sum_r_sq() == doctest::Approx(39.159217).epsilon(1e-6));
  CHECK(sd.sum_r_sq() / r1_sq ==
        doctest::Approx(2.398624447779466).epsilon(1e-9));
}

TEST_CASE("entrywise reconstruction uses conjugated modes") {
  // asymmetric kernel (single path ordering, unequal axis grids) so that no
  // accidental symmetry can mask a conjugation mistake
  const LevelSystem sys =
      make_system(0.5, 5.0, 1.0, 1.0, CouplingMode::SinglePath);
  const FrequencyGrid ga = uniform_grid(0.0, 30.0, 141);
  const FrequencyGrid gb = uniform_grid(2.0, 25.0, 97);
  const KernelMatrix K = build_kernel(sys, ga, gb, 0.0);
  const SchmidtDecomposition sd = decompose(K);
  REQUIRE(sd.rank() >= 2);

  const Eigen::Index m = static_cast<Eigen::Index>(sd.rank());
  const Eigen::MatrixXcd approx =
      sd.psi.leftCols(m).conjugate() *
      Eigen::VectorXd::Map(sd.r.data(), m).asDiagonal() *
      sd.phi.leftCols(m).transpose().conjugate();
  const double scale = K.values.cwiseAbs().maxCoeff();
  CHECK((K.values - approx).cwiseAbs().maxCoeff() <= 1e-10 * scale);
  CHECK(schmidt_residual(K, sd, static_cast<int>(sd.rank())) < 1e-10);

  // substitution amplitude: sum_ij w_i w_j T_ij psi_1,i phi_1,j = r_1, which
  // pins both the conjugation convention and the phase pairing
  cplx amp = 0.0;
  for (Eigen::Index i = 0; i < K.rows(); ++i)
    for (Eigen::Index j = 0; j < K.cols(); ++j)
      amp += ga.weights[i] * gb.weights[j] * K.values(i, j) * sd.psi(i, 0) *
             sd.phi(j, 0);
  CHECK(std::abs(amp - cplx(sd.r[0], 0.0)) <= 1e-8 * sd.r[0]);
}

TEST_CASE("each mode's peak sample is rotated real positive") {
  const KernelMatrix K = narrow_kernel(201);
  const SchmidtDecomposition sd = decompose(K);
  for (std::size_t k = 0; k < std::min<std::size_t>(sd.rank(), 6); ++k) {
    const auto col = sd.psi.col(static_cast<Eigen::Index>(k));
    Eigen::Index ip = 0;
    double best = 0.0;
    for (Eigen::Index i = 0; i < col.size(); ++i)
      if (std::abs(col[i]) > best) {
        best = std::abs(col[i]);
        ip = i;
      }
    CHECK(col[ip].real() > 0.0);
    CHECK(std::abs(col[ip].imag()) <= 1e-12 * best);
  }
}

TEST_CASE("coefficients scale bilinearly with the dipole moments") {
  const FrequencyGrid g = uniform_grid(0.0, 20.0, 101);
  const KernelMatrix K1 = build_kernel(narrow_system(), g, g, 0.0);
  const KernelMatrix K2 =
      build_kernel(make_system(0.5, 5.0, 0.01, 0.01), g, g, 0.0);
  const SchmidtDecomposition s1 = decompose(K1);
  const SchmidtDecomposition s2 = decompose(K2);
  const std::size_t shared = std::min({s1.rank(), s2.rank(), std::size_t{8}});
  REQUIRE(shared >= 2);
  for (std::size_t k = 0; k < shared; ++k)
    CHECK(s2.r[k] == doctest::Approx(1e-4 * s1.r[k]).epsilon(1e-12));
}

TEST_CASE("values-only path agrees with the full decomposition") {
  const KernelMatrix K = narrow_kernel(201);
  const SchmidtDecomposition sd = decompose(K);
  const std::vector<double> sv = singular_values(K);
  REQUIRE(sv.size() >= sd.rank());
  for (std::size_t k = 0; k < sd.rank(); ++k)
    CHECK(sv[k] == doctest::Approx(sd.r[k]).epsilon(1e-12));
}

TEST_CASE("degenerate point is numerically rank one") {
  const FrequencyGrid g = tpa::test::harmonic_grid(401);
  const KernelMatrix K = build_kernel(harmonic_system(), g, g, 0.0);
  const SchmidtDecomposition sd = decompose(K);
  CHECK(sd.r[0] == doctest::Approx(std::numbers::pi).epsilon(1e-3));
  if (sd.rank() >= 2) CHECK(sd.r[1] / sd.r[0] < 1e-6);
  CHECK(sd.sum_r_sq() / (sd.r[0] * sd.r[0]) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("truncation error drops monotonically with reconstruction rank") {
  const KernelMatrix K = narrow_kernel(201);
  const SchmidtDecomposition sd = decompose(K);
  const double total = sd.sum_r_sq();
  double prev = std::numeric_limits<double>::infinity();
  double kept = 0.0;
  for (int m = 1; m <= std::min<int>(6, static_cast<int>(sd.rank())); ++m) {
    const double res = schmidt_residual(K, sd, m);
    CHECK(res <= prev + 1e-14);
    prev = res;
    // residual^2 = (sum of discarded r_k^2) / (sum of all r_k^2)
    kept += sd.r[m - 1] * sd.r[m - 1];
    const double expect = std::sqrt(std::max(0.0, 1.0 - kept / total));
    CHECK(res == doctest::Approx(expect).epsilon(1e-6));
  }
}

TEST_CASE("reconstruction rank is range checked") {
  const KernelMatrix K = narrow_kernel(51);
  const SchmidtDecomposition sd = decompose(K);
  CHECK_THROWS_AS(schmidt_residual(K, sd, 0), BadRank);
  CHECK_THROWS_AS(schmidt_residual(K, sd, static_cast<int>(sd.rank()) + 1),
                  BadRank);
}

TEST_CASE("non-finite kernels are rejected") {
  KernelMatrix K = narrow_kernel(51);
  K.values(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(decompose(K), NumericalFailure);
  CHECK_THROWS_AS(singular_values(K), NumericalFailure);
}

TEST_CASE("exactly degenerate coefficients order deterministically") {
  FrequencyGrid g;
  g.nodes = {0.0, 1.0};
  g.weights = {1.0, 1.0};
  g.meta = {"uniform", false, "handmade"};

  KernelMatrix K;
  K.values = Eigen::MatrixXcd::Zero(2, 2);
  K.values(0, 1) = 1.0;
  K.values(1, 0) = 1.0;
  K.grid_a = g;
  K.grid_b = g;
  K.system = harmonic_system();

  const SchmidtDecomposition a = decompose(K);
  const SchmidtDecomposition b = decompose(K);
  REQUIRE(a.rank() == 2);
  CHECK(a.r[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(a.r[1] == doctest::Approx(1.0).epsilon(1e-14));

  // repeated runs agree bitwise and the pair still reconstructs the kernel
  REQUIRE(b.rank() == 2);
  CHECK((a.psi - b.psi).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a.phi - b.phi).cwiseAbs().maxCoeff() == 0.0);
  CHECK(schmidt_residual(K, a, 2) < 1e-14);
}
