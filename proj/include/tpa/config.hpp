#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "tpa/grid.hpp"
#include "tpa/model.hpp"
#include "tpa/sweep.hpp"

// Flat INI-style configuration: [section] headers and key=value lines,
// '#'/';' comments. Unknown sections or keys are rejected (ConfigError), so a
// typo cannot silently fall back to a default.

namespace tpa {

using ConfigSections = std::map<std::string, std::map<std::string, std::string>>;

// Parses INI text. Throws ConfigError on malformed lines or duplicate keys.
ConfigSections parse_ini(const std::string& text);

// Grid request as written in [grid]; resolved lazily because the graded
// default depends on the system's Delta.
struct GridSpec {
  std::string kind = "uniform";             // "uniform" | "graded"
  double center = 0.0, halfwidth = 40.0;    // uniform parameters
  int n = 801;
  std::vector<GradedCluster> clusters;      // graded parameters
  double tail_cut = kDefaultTailCut;

  FrequencyGrid build() const;
};

struct RunConfig {
  LevelSystem system;                 // defaults to the harmonic system
  bool system_from_preset = false;    // [system] preset=rubidium was given
  std::optional<GridSpec> grid;       // absent: command-specific default
  SweepSpec sweep;                    // default window covers the standard map
  double t_min = -30.0, t_max = 30.0; // dynamics window
  int t_count = 601;
  double photon_number = 1.0;
  double kernel_t = 0.0;
  bool kernel_binary = false;
  double preset_band_min = 8.5;   // acceptance band for the preset report
  double preset_band_max = 9.8;

  std::string config_path;            // empty when no --config was given
  std::uint64_t config_hash = 0;      // FNV-1a 64 over the raw file bytes
};

// Loads and validates a config file; path may be empty (all defaults).
// Throws ConfigError on unknown keys, unparsable values, or failed system
// validation.
RunConfig load_config(const std::string& path);

// FNV-1a 64-bit over arbitrary bytes (manifest config hash).
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace tpa
