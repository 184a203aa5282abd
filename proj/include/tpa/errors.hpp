#pragma once

#include <stdexcept>

// Error taxonomy. Construction/argument errors derive from std::invalid_argument
// (the CLI maps them to exit code 1); runtime/numerical errors derive from
// std::runtime_error (exit code 2).

namespace tpa {

struct BadGridSpec : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonPositiveLinewidth : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NegativeDipole : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GridMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EmptyDecomposition : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ZeroKernel : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnnormalizedCoefficients : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedMode : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BadRank : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EmptySweep : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct AsymmetricTimeGrid : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Config file / CLI argument problems (exit code 1).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Kernel build would exceed the configured entry cap.
struct BuildTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Factorization backend failed to converge or produced non-finite output.
struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tpa
