#pragma once

#include <string>

// Three-level ladder g -> e -> f in dimensionless internal units:
// hbar = 1, gamma_e = 1, E_0 = 1, and all frequencies stored as detunings
// nu = omega - omega_e. The constant global phase exp(-i*2*omega_e*t) of the
// second-order amplitude is dropped throughout; it cancels in every modulus.

namespace tpa {

enum class CouplingMode { Symmetric, SinglePath, TwoAtom };

std::string to_string(CouplingMode mode);
CouplingMode coupling_mode_from_string(const std::string& name);

// Extra parameters for TwoAtom mode: the second atom's intermediate-state
// linewidth gamma_e' and level offset omega_e' - omega_e (detuning units).
struct TwoAtomParams {
  double gamma_e2 = 1.0;
  double delta_atoms = 0.0;
};

struct LevelSystem {
  double gamma_e = 1.0;   // intermediate linewidth; the internal unit
  double gamma_f = 2.0;   // target linewidth, units of gamma_e
  double delta_cap = 0.0; // capital Delta = omega_f - 2*omega_e
  double mu_ge = 1.0;     // dipole moments (>= 0)
  double mu_ef = 1.0;
  double e0 = 1.0;        // field normalization, fixed to 1 internally
  CouplingMode mode = CouplingMode::Symmetric;
  TwoAtomParams two_atom{};
  double omega_e_abs = 0.0; // absolute anchor in rad/s (0 when not set)

  // Linewidth deviation delta = gamma_f - 2*gamma_e.
  double delta_small() const { return gamma_f - 2.0 * gamma_e; }
};

// Validating constructor. Throws NonPositiveLinewidth if gamma_f <= 0 (or, in
// TwoAtom mode, gamma_e2 <= 0) and NegativeDipole if a dipole moment is < 0.
LevelSystem make_system(double gamma_f, double delta_cap, double mu_ge = 1.0,
                        double mu_ef = 1.0,
                        CouplingMode mode = CouplingMode::Symmetric,
                        TwoAtomParams two_atom = {});

// The 5s -> 5p -> 5d ladder with wavelengths 780 nm / 776 nm and lifetimes
// 26 ns / 232 ns, converted to internal units:
//   delta_cap = 2*pi*c*(1/776nm - 1/780nm) * 26ns  (~3.2365e5)
//   gamma_f   = 26/232                             (~0.11207)
LevelSystem from_rubidium();

}  // namespace tpa
