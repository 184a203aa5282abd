#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "tpa/errors.hpp"
#include "tpa/optimal.hpp"

using namespace tpa;
using tpa::test::narrow_system;
using tpa::test::harmonic_system;
using tpa::test::winner;
using cplx = std::complex<double>;

namespace {

struct Fixture {
  KernelMatrix K;
  SchmidtDecomposition sd;
};

const Fixture& narrow_fixture() {
  static const Fixture f = [] {
    const FrequencyGrid g = uniform_grid(0.0, 40.0, 201);
    Fixture x;
    x.K = build_kernel(narrow_system(), g, g, 0.0);
    x.sd = decompose(x.K);
    return x;
  }();
  return f;
}

double pulse_norm_sq(const FrequencyGrid& g, const Eigen::VectorXcd& a) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    s += g.weights[i] * std::norm(a[i]);
  return s;
}

double state_norm_sq(const TwoPhotonState& s) {
  double n = 0.0;
  for (Eigen::Index i = 0; i < s.amplitude.rows(); ++i)
    for (Eigen::Index j = 0; j < s.amplitude.cols(); ++j)
      n += s.grid_a.weights[i] * s.grid_b.weights[j] *
           std::norm(s.amplitude(i, j));
  return n;
}

}  // namespace

TEST_CASE("optimal pulses carry the requested photon number") {
  const auto& [K, sd] = narrow_fixture();
  const PulsePair p = classical_optimal(sd, 2.5);
  CHECK(p.photon_number == 2.5);
  CHECK(pulse_norm_sq(p.grid_a, p.a1) == doctest::Approx(2.5).epsilon(1e-8));
  CHECK(pulse_norm_sq(p.grid_b, p.a2) == doctest::Approx(2.5).epsilon(1e-8));

  const PulsePair unit = classical_optimal(sd);
  CHECK(pulse_norm_sq(unit.grid_a, unit.a1) ==
        doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("optimal pulse construction validates its inputs") {
  const auto& [K, sd] = narrow_fixture();
  CHECK_THROWS_AS(classical_optimal(SchmidtDecomposition{}),
                  EmptyDecomposition);
  CHECK_THROWS_AS(classical_optimal(sd, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(classical_optimal(sd, -1.0), std::invalid_argument);
}

TEST_CASE("the two optimal pulses coincide up to a constant phase") {
  // exchange symmetry of the kernel on a shared axis forces collinearity
  const auto& [K, sd] = narrow_fixture();
  const PulsePair p = classical_optimal(sd);
  const cplx overlap = winner(p.grid_a, p.a1, p.a2);
  const double n1 = pulse_norm_sq(p.grid_a, p.a1);
  const double n2 = pulse_norm_sq(p.grid_b, p.a2);
  CHECK(std::abs(overlap) / std::sqrt(n1 * n2) ==
        doctest::Approx(1.0).epsilon(1e-10));
  for (Eigen::Index i = 0; i < p.a1.size(); ++i)
    CHECK(std::abs(std::abs(p.a1[i]) - std::abs(p.a2[i])) <= 1e-8);
}

TEST_CASE("degenerate-point pulse takes the intermediate line shape") {
  const FrequencyGrid g = tpa::test::harmonic_grid(401);
  const KernelMatrix K = build_kernel(harmonic_system(), g, g, 0.0);
  const PulsePair p = classical_optimal(decompose(K));
  Eigen::Index i0 = 0;
  for (Eigen::Index i = 0; i < p.a1.size(); ++i)
    if (std::abs(g.nodes[i]) < std::abs(g.nodes[i0])) i0 = i;
  const double ref =
      std::abs(p.a1[i0]) * std::hypot(g.nodes[i0], 1.0);  // |A| / Lorentzian
  for (Eigen::Index i = 0; i < p.a1.size(); ++i) {
    const double ratio = std::abs(p.a1[i]) * std::hypot(g.nodes[i], 1.0);
    CHECK(ratio == doctest::Approx(ref).epsilon(1e-2));
  }
}

TEST_CASE("optimal transition probabilities follow the coefficient spectrum") {
  const auto& [K, sd] = narrow_fixture();
  const double r1_sq = sd.r[0] * sd.r[0];

  const PulsePair p = classical_optimal(sd, 3.0);
  CHECK(transition_prob_classical(K, p) ==
        doctest::Approx(9.0 * r1_sq).epsilon(1e-10));

  const TwoPhotonState st = quantum_optimal(K);
  CHECK(state_norm_sq(st) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(st.norm_constant ==
        doctest::Approx(weighted_frobenius_sq(K)).epsilon(1e-13));
  CHECK(transition_prob_quantum(K, st) ==
        doctest::Approx(sd.sum_r_sq()).epsilon(1e-10));

  // per-pair comparison: quantum / (classical / N^2) is the enhancement
  const double per_pair = transition_prob_classical(K, p) / 9.0;
  CHECK(transition_prob_quantum(K, st) / per_pair ==
        doctest::Approx(enhancement(sd)).epsilon(1e-8));
  CHECK(transition_prob_quantum(K, st) >= per_pair);
}

TEST_CASE("enhancement is the normalized coefficient power sum") {
  const auto& [K, sd] = narrow_fixture();
  CHECK(enhancement(sd) ==
        doctest::Approx(sd.sum_r_sq() / (sd.r[0] * sd.r[0])).epsilon(1e-12));
  CHECK_THROWS_AS(enhancement(SchmidtDecomposition{}), EmptyDecomposition);
  SchmidtDecomposition zero;
  zero.r = {0.0};
  CHECK_THROWS_AS(enhancement(zero), ZeroKernel);
}

TEST_CASE("quantum and classical optima coincide at the degenerate point") {
  const FrequencyGrid g = tpa::test::harmonic_grid(401);
  const KernelMatrix K = build_kernel(harmonic_system(), g, g, 0.0);
  const SchmidtDecomposition sd = decompose(K);
  const double p_cl = transition_prob_classical(K, classical_optimal(sd));
  const double p_q = transition_prob_quantum(K, quantum_optimal(K));
  CHECK(p_q / p_cl == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("product-form coupling admits no entanglement advantage") {
  const LevelSystem sys = make_system(0.7, 1.2, 1.0, 1.0,
                                      CouplingMode::TwoAtom, {1.3, -0.8});
  const FrequencyGrid ga = uniform_grid(0.0, 30.0, 201);
  const FrequencyGrid gb = uniform_grid(-0.8, 30.0, 201);
  const KernelMatrix K = build_kernel(sys, ga, gb, 0.0);
  const std::vector<double> sv = singular_values(K);
  REQUIRE(sv.size() >= 2);
  CHECK(sv[1] / sv[0] < 1e-10);
  CHECK(enhancement(decompose(K)) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("secondary modes drive the transition at their own coefficient") {
  const auto& [K, sd] = narrow_fixture();
  REQUIRE(sd.rank() >= 2);
  PulsePair second;
  second.a1 = sd.psi.col(1);
  second.a2 = sd.phi.col(1);
  second.grid_a = sd.grid_a;
  second.grid_b = sd.grid_b;
  CHECK(transition_prob_classical(K, second) ==
        doctest::Approx(sd.r[1] * sd.r[1]).epsilon(1e-8));

  PulsePair crossed;
  crossed.a1 = sd.psi.col(0);
  crossed.a2 = sd.phi.col(1);
  crossed.grid_a = sd.grid_a;
  crossed.grid_b = sd.grid_b;
  CHECK(transition_prob_classical(K, crossed) < 1e-16);
}

TEST_CASE("probability evaluation rejects mismatched grids") {
  const auto& [K, sd] = narrow_fixture();
  const FrequencyGrid other = uniform_grid(0.0, 40.0, 101);
  const KernelMatrix K2 = build_kernel(narrow_system(), other, other, 0.0);
  const PulsePair p = classical_optimal(sd);
  const TwoPhotonState st = quantum_optimal(K);
  CHECK_THROWS_AS(transition_prob_classical(K2, p), GridMismatch);
  CHECK_THROWS_AS(transition_prob_quantum(K2, st), GridMismatch);
  CHECK_THROWS_AS(fixed_point_residual(K2, p), GridMismatch);
  CHECK_THROWS_AS(fixed_point_residual(K2, st), GridMismatch);
}

TEST_CASE("optimal inputs satisfy the stationarity conditions") {
  const auto& [K, sd] = narrow_fixture();
  CHECK(fixed_point_residual(K, classical_optimal(sd, 2.0)) < 1e-10);
  CHECK(fixed_point_residual(K, quantum_optimal(K)) < 1e-12);
}

TEST_CASE("generic inputs are far from stationary") {
  const auto& [K, sd] = narrow_fixture();
  std::mt19937 gen(12345);
  std::normal_distribution<double> dist;

  PulsePair p = classical_optimal(sd);
  for (Eigen::Index i = 0; i < p.a1.size(); ++i) {
    p.a1[i] = cplx(dist(gen), dist(gen));
    p.a2[i] = cplx(dist(gen), dist(gen));
  }
  CHECK(fixed_point_residual(K, p) > 0.1);

  TwoPhotonState st = quantum_optimal(K);
  for (Eigen::Index i = 0; i < st.amplitude.rows(); ++i)
    for (Eigen::Index j = 0; j < st.amplitude.cols(); ++j)
      st.amplitude(i, j) = cplx(dist(gen), dist(gen));
  CHECK(fixed_point_residual(K, st) > 0.1);
}

TEST_CASE("coefficient expansions reproduce closed-form probabilities") {
  const auto& [K, sd] = narrow_fixture();
  const double N = 1.7;
  const double r1 = sd.r[0], r2 = sd.r[1];

  const std::vector<cplx> e1 = {1.0};
  CHECK(coefficient_prob(sd, e1, e1, N, false) ==
        doctest::Approx(N * N * r1 * r1).epsilon(1e-12));

  const double s = 1.0 / std::sqrt(2.0);
  const std::vector<cplx> even = {s, s};
  const double expect = N * N * (r1 + r2) * (r1 + r2) / 4.0;
  CHECK(coefficient_prob(sd, even, even, N, false) ==
        doctest::Approx(expect).epsilon(1e-12));

  const std::vector<cplx> half = {0.5, 0.5};
  CHECK(coefficient_prob(sd, half, {}, N, true) ==
        doctest::Approx(N * N * (r1 * r1 + r2 * r2) / 2.0).epsilon(1e-12));
  CHECK(coefficient_prob(sd, e1, {}, N, true) ==
        doctest::Approx(N * N * r1 * r1).epsilon(1e-12));
}

TEST_CASE("coefficient expansions validate their inputs") {
  const auto& [K, sd] = narrow_fixture();
  const std::vector<cplx> e1 = {1.0};
  const std::vector<cplx> off = {0.9};
  const std::vector<cplx> oversized(sd.rank() + 1, 0.0);
  const std::vector<cplx> unbalanced = {0.6, 0.6};
  const std::vector<cplx> negative = {1.2, -0.2};
  const std::vector<cplx> complex_weight = {cplx(0.5, 0.1), cplx(0.5, -0.1)};

  CHECK_THROWS_AS(coefficient_prob(sd, {}, e1, 1.0, false), BadRank);
  CHECK_THROWS_AS(coefficient_prob(sd, e1, {}, 1.0, false), BadRank);
  CHECK_THROWS_AS(coefficient_prob(sd, oversized, e1, 1.0, false), BadRank);
  CHECK_THROWS_AS(coefficient_prob(sd, off, e1, 1.0, false),
                  UnnormalizedCoefficients);
  CHECK_THROWS_AS(coefficient_prob(sd, e1, off, 1.0, false),
                  UnnormalizedCoefficients);
  CHECK_THROWS_AS(coefficient_prob(sd, unbalanced, {}, 1.0, true),
                  UnnormalizedCoefficients);
  CHECK_THROWS_AS(coefficient_prob(sd, negative, {}, 1.0, true),
                  UnnormalizedCoefficients);
  CHECK_THROWS_AS(coefficient_prob(sd, complex_weight, {}, 1.0, true),
                  UnnormalizedCoefficients);
  CHECK_THROWS_AS(coefficient_prob(sd, e1, e1, 0.0, false),
                  std::invalid_argument);
  CHECK_THROWS_AS(coefficient_prob(SchmidtDecomposition{}, e1, e1, 1.0, false),
                  EmptyDecomposition);
}

TEST_CASE("no coefficient expansion beats the optimal inputs") {
  const auto& [K, sd] = narrow_fixture();
  std::mt19937 gen(777);
  std::normal_distribution<double> dist;
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const std::size_t m = std::min<std::size_t>(sd.rank(), 8);
  const double coherent_bound = sd.r[0] * sd.r[0];
  const double mixed_bound = sd.r[0] * sd.r[0];

  for (int trial = 0; trial < 50; ++trial) {
    std::vector<cplx> c(m), d(m);
    double cn = 0.0, dn = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      c[k] = cplx(dist(gen), dist(gen));
      d[k] = cplx(dist(gen), dist(gen));
      cn += std::norm(c[k]);
      dn += std::norm(d[k]);
    }
    for (auto& v : c) v /= std::sqrt(cn);
    for (auto& v : d) v /= std::sqrt(dn);
    CHECK(coefficient_prob(sd, c, d, 1.0, false) <=
          coherent_bound * (1.0 + 1e-12));
  }

  for (int trial = 0; trial < 10; ++trial) {
    std::vector<cplx> p(m);
    double total = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      p[k] = uni(gen);
      total += p[k].real();
    }
    for (auto& v : p) v /= total;
    CHECK(coefficient_prob(sd, p, {}, 1.0, true) <=
          mixed_bound * (1.0 + 1e-12));
  }
}

TEST_CASE("closed-form normalization matches its quadrature counterpart") {
  const double pi_sq = std::numbers::pi * std::numbers::pi;
  CHECK(analytic_norm(harmonic_system()) ==
        doctest::Approx(pi_sq).epsilon(1e-14));
  CHECK(analytic_norm(narrow_system()) ==
        doctest::Approx(4.0 * pi_sq).epsilon(1e-14));
  CHECK(analytic_norm(make_system(2.0, 0.0, 2.0, 2.0)) ==
        doctest::Approx(16.0 * pi_sq).epsilon(1e-14));

  CHECK_THROWS_AS(
      analytic_norm(make_system(0.5, 5.0, 1.0, 1.0, CouplingMode::SinglePath)),
      UnsupportedMode);
  CHECK_THROWS_AS(
      analytic_norm(make_system(0.5, 5.0, 1.0, 1.0, CouplingMode::TwoAtom)),
      UnsupportedMode);

  // quadrature check on a tail-corrected mesh centered on the ridge
  const FrequencyGrid g = graded_grid({{2.5, 8.0, 801}}, 1.55);
  const KernelMatrix K = build_kernel(narrow_system(), g, g, 0.0);
  const double quad = weighted_frobenius_sq(K);
  const double closed = analytic_norm(narrow_system());
  CHECK(std::abs(quad - closed) / closed < 5e-3);
}

TEST_CASE("zero kernels cannot be normalized into states") {
  KernelMatrix K;
  const FrequencyGrid g = uniform_grid(0.0, 1.0, 4);
  K.values = Eigen::MatrixXcd::Zero(4, 4);
  K.grid_a = g;
  K.grid_b = g;
  K.system = harmonic_system();
  CHECK_THROWS_AS(quantum_optimal(K), ZeroKernel);
}
