#include "tpa/grid.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "tpa/errors.hpp"

namespace tpa {

FrequencyGrid uniform_grid(double center, double halfwidth, int n) {
  if (n < 2)
    throw BadGridSpec("uniform_grid needs n >= 2, got " + std::to_string(n));
  if (!(halfwidth > 0.0))
    throw BadGridSpec("uniform_grid needs halfwidth > 0, got " +
                      std::to_string(halfwidth));

  FrequencyGrid g;
  g.nodes.resize(n);
  g.weights.resize(n);
  const double a = center - halfwidth;
  const double h = 2.0 * halfwidth / (n - 1);
  for (int i = 0; i < n; ++i) {
    g.nodes[i] = a + h * i;
    g.weights[i] = h;
  }
  g.nodes.back() = center + halfwidth;  // exact endpoint
  g.weights.front() *= 0.5;
  g.weights.back() *= 0.5;

  std::ostringstream d;
  d << "uniform(center=" << center << ", halfwidth=" << halfwidth
    << ", n=" << n << ")";
  g.meta = {"uniform", false, d.str()};
  return g;
}

FrequencyGrid graded_grid(const std::vector<GradedCluster>& clusters,
                          double tail_cut) {
  if (clusters.empty()) throw BadGridSpec("graded_grid needs >= 1 cluster");
  if (!(tail_cut > 0.0) || !(tail_cut < std::numbers::pi / 2))
    throw BadGridSpec("tail_cut must lie in (0, pi/2), got " +
                      std::to_string(tail_cut));
  double min_scale = clusters.front().scale;
  for (const auto& c : clusters) {
    if (!(c.scale > 0.0))
      throw BadGridSpec("cluster scale must be > 0, got " +
                        std::to_string(c.scale));
    if (c.n < 8)
      throw BadGridSpec("cluster n must be >= 8, got " + std::to_string(c.n));
    min_scale = std::min(min_scale, c.scale);
  }

  // Tangent map per cluster: nu = center + scale*tan(u), u uniform on
  // [-tail_cut, tail_cut]. The trapezoid weights scale*sec^2(u)*du become
  // uniform in u for a width-matched Lorentzian; the extreme weights gain
  // scale*tan(tail_cut), the exact remaining mass of an A/nu^2 tail sampled
  // at the endpoint.
  struct Tagged { double node, weight; };
  std::vector<Tagged> all;
  bool overlap = false;
  for (std::size_t ci = 0; ci < clusters.size(); ++ci) {
    const auto& c = clusters[ci];
    const double du = 2.0 * tail_cut / (c.n - 1);
    const double tail_mass = c.scale * std::tan(tail_cut);
    for (int i = 0; i < c.n; ++i) {
      const double u = -tail_cut + du * i;
      const double sec = 1.0 / std::cos(u);
      double w = c.scale * sec * sec * du;
      if (i == 0 || i == c.n - 1) w = 0.5 * w + tail_mass;
      all.push_back({c.center + c.scale * std::tan(u), w});
    }
    // overlap check against every other cluster's covered window
    const double lo = c.center - c.scale * std::tan(tail_cut);
    const double hi = c.center + c.scale * std::tan(tail_cut);
    for (std::size_t cj = ci + 1; cj < clusters.size(); ++cj) {
      const auto& o = clusters[cj];
      const double olo = o.center - o.scale * std::tan(tail_cut);
      const double ohi = o.center + o.scale * std::tan(tail_cut);
      if (lo <= ohi && olo <= hi) overlap = true;
    }
  }

  std::sort(all.begin(), all.end(),
            [](const Tagged& a, const Tagged& b) { return a.node < b.node; });

  // merge nodes that coincide within 1e-12 * min(scale); weights are summed,
  // which preserves quadrature exactness of the union
  const double tol = 1e-12 * min_scale;
  FrequencyGrid g;
  for (const auto& p : all) {
    if (!g.nodes.empty() && p.node - g.nodes.back() <= tol) {
      g.weights.back() += p.weight;
    } else {
      g.nodes.push_back(p.node);
      g.weights.push_back(p.weight);
    }
  }
  if (g.nodes.size() < 2)
    throw BadGridSpec("graded_grid produced fewer than 2 distinct nodes");

  std::ostringstream d;
  d << "graded(tail_cut=" << tail_cut;
  for (const auto& c : clusters)
    d << ", cluster(center=" << c.center << ", scale=" << c.scale
      << ", n=" << c.n << ")";
  d << ")";
  g.meta = {"graded", overlap, d.str()};
  return g;
}

double quad_check(const FrequencyGrid& grid, double gamma, double center) {
  if (!(gamma > 0.0))
    throw BadGridSpec("quad_check needs gamma > 0, got " +
                      std::to_string(gamma));
  double sum = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double d = grid.nodes[i] - center;
    sum += grid.weights[i] / (d * d + gamma * gamma);
  }
  return sum;
}

}  // namespace tpa
