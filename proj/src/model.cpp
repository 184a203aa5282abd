#include "tpa/model.hpp"

#include <cmath>
#include <numbers>

#include "tpa/errors.hpp"

namespace tpa {

std::string to_string(CouplingMode mode) {
  switch (mode) {
    case CouplingMode::Symmetric: return "symmetric";
    case CouplingMode::SinglePath: return "single_path";
    case CouplingMode::TwoAtom: return "two_atom";
  }
  return "unknown";
}

CouplingMode coupling_mode_from_string(const std::string& name) {
  if (name == "symmetric") return CouplingMode::Symmetric;
  if (name == "single_path") return CouplingMode::SinglePath;
  if (name == "two_atom") return CouplingMode::TwoAtom;
  throw ConfigError("unknown coupling mode '" + name +
                    "' (expected symmetric, single_path, or two_atom)");
}

LevelSystem make_system(double gamma_f, double delta_cap, double mu_ge,
                        double mu_ef, CouplingMode mode,
                        TwoAtomParams two_atom) {
  if (!(gamma_f > 0.0))
    throw NonPositiveLinewidth("gamma_f must be > 0, got " +
                               std::to_string(gamma_f));
  if (mode == CouplingMode::TwoAtom && !(two_atom.gamma_e2 > 0.0))
    throw NonPositiveLinewidth("gamma_e2 must be > 0, got " +
                               std::to_string(two_atom.gamma_e2));
  if (mu_ge < 0.0 || mu_ef < 0.0)
    throw NegativeDipole("dipole moments must be >= 0");

  LevelSystem sys;
  sys.gamma_f = gamma_f;
  sys.delta_cap = delta_cap;
  sys.mu_ge = mu_ge;
  sys.mu_ef = mu_ef;
  sys.mode = mode;
  sys.two_atom = two_atom;
  return sys;
}

LevelSystem from_rubidium() {
  constexpr double c = 299'792'458.0;        // m/s
  constexpr double lambda_ge = 780e-9;       // m
  constexpr double lambda_ef = 776e-9;       // m
  constexpr double tau_e = 26e-9;            // s
  constexpr double tau_f = 232e-9;           // s
  constexpr double two_pi = 2.0 * std::numbers::pi;

  const double delta_si = two_pi * c * (1.0 / lambda_ef - 1.0 / lambda_ge);
  LevelSystem sys = make_system(/*gamma_f=*/tau_e / tau_f,
                                /*delta_cap=*/delta_si * tau_e,
                                /*mu_ge=*/1.0, /*mu_ef=*/1.0,
                                CouplingMode::Symmetric);
  sys.omega_e_abs = two_pi * c / lambda_ge;  // rad/s
  return sys;
}

}  // namespace tpa
