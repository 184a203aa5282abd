#pragma once

#include <string>
#include <vector>

// Command-line front end. Subcommands:
//   kernel    dump |T| over the grid (optional raw binary dump)
//   schmidt   Schmidt coefficients and mode functions
//   optimize  optimal pulses, optimal state, probabilities, E, residuals
//   sweep     enhancement map over the (Delta, delta) window
//   dynamics  time-resolved populations for both drives
//   preset    end-to-end named report (currently: rubidium)
//   selfcheck invariant suite
// Exit status: 0 success, 1 config error, 2 numerical failure. Results land
// as CSV/JSON under the output directory (--out, default $TPAOPT_OUT or
// ./out); manifest.json records the config hash and versions.

namespace tpa::cli {

int run(const std::vector<std::string>& args);

}  // namespace tpa::cli
