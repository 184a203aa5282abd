#pragma once

#include <cstddef>
#include <string>
#include <vector>

// Frequency grids with quadrature weights over a detuning axis. Two builders:
// a trapezoid rule on a uniform window, and a tangent-mapped graded mesh able
// to resolve Lorentzian clusters separated by ~3e5 linewidths.

namespace tpa {

struct GridMeta {
  std::string kind;            // "uniform" or "graded"
  bool overlap_warning = false; // graded clusters overlapped before merging
  std::string detail;          // human-readable construction descriptor
};

struct FrequencyGrid {
  std::vector<double> nodes;   // strictly increasing detunings (units gamma_e)
  std::vector<double> weights; // positive quadrature weights, same length
  GridMeta meta;

  std::size_t size() const { return nodes.size(); }
};

// Trapezoid rule on [center-halfwidth, center+halfwidth]; endpoint weights
// halved. Throws BadGridSpec on n < 2 or halfwidth <= 0.
FrequencyGrid uniform_grid(double center, double halfwidth, int n);

struct GradedCluster {
  double center = 0.0;
  double scale = 1.0;
  int n = 0;
};

// Per cluster, nodes nu = center + scale*tan(u) with u uniform on
// [-tail_cut, tail_cut] and weights scale*sec^2(u)*du (change-of-variables
// trapezoid; endpoint weights halved). Each cluster's extreme weights get an
// extra scale*tan(tail_cut): the exact quadrature mass of an A/nu^2 tail
// sampled at the endpoint, so Lorentzian-decay integrands keep their full
// line integral. Clusters are merged: sorted, de-duplicated within
// 1e-12*min(scale), weights summed on merge; an OverlapWarning is recorded in
// meta when cluster windows intersect.
// Throws BadGridSpec on scale <= 0, n < 8, or tail_cut outside (0, pi/2).
FrequencyGrid graded_grid(const std::vector<GradedCluster>& clusters,
                          double tail_cut);

// Returns sum_i w_i * |1/(nu_i - center + i*gamma)|^2; the caller compares
// against the analytic value pi/gamma. Throws BadGridSpec on gamma <= 0.
double quad_check(const FrequencyGrid& grid, double gamma, double center);

// Default tail_cut used when a graded grid is requested without one.
inline constexpr double kDefaultTailCut = 1.55;

}  // namespace tpa
