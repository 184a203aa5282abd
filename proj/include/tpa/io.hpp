#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <string>
#include <vector>

#include "tpa/dynamics.hpp"
#include "tpa/response.hpp"
#include "tpa/schmidt.hpp"
#include "tpa/sweep.hpp"

// CSV/JSON/binary writers. All floating-point text output uses %.17g so that
// values round-trip exactly; CSV bodies contain no timestamps, making reruns
// byte-identical (the manifest alone carries the wall-clock stamp).

namespace tpa {

// %.17g formatting of one double.
std::string g17(double v);

void write_text_file(const std::filesystem::path& path, const std::string& body);

// One row per node: nu,weight.
void write_grid_csv(const std::filesystem::path& path, const FrequencyGrid& g);

// |T| as a dense matrix CSV (rows = grid_a nodes) plus axis files alongside.
void write_kernel_abs_csv(const std::filesystem::path& dir, const KernelMatrix& K);

// Raw dump: row-major interleaved re,im little-endian float64, plus a sidecar
// text header describing dimensions, grids, system, and layout.
void write_kernel_binary(const std::filesystem::path& dir, const KernelMatrix& K);

// schmidt_values.csv (k,r) and mode_NNN.csv (nu,re_psi,im_psi,re_phi,im_phi).
void write_schmidt_csv(const std::filesystem::path& dir,
                       const SchmidtDecomposition& sd);

// pulse CSV: nu,re,im.
void write_pulse_csv(const std::filesystem::path& path,
                     const FrequencyGrid& grid, const Eigen::VectorXcd& a);

// |phi| and arg(phi) matrices plus axis files.
void write_state_csv(const std::filesystem::path& dir,
                     const Eigen::MatrixXcd& amplitude,
                     const FrequencyGrid& grid_a, const FrequencyGrid& grid_b);

// Header "delta_cap,delta_small,r1,sum_rk2,E"; failed rows carry nan fields.
void write_sweep_csv(const std::filesystem::path& path, const SweepResult& res);

// Header "t,p_e,p_f,drive".
void write_dynamics_csv(const std::filesystem::path& path,
                        const std::vector<PopulationTrace>& traces);

// manifest.json: command, config path/hash, versions, seed/workers, outputs.
void write_manifest(const std::filesystem::path& dir, const std::string& command,
                    const std::string& config_path, std::uint64_t config_hash,
                    int workers, std::uint64_t seed,
                    const std::vector<std::string>& outputs);

}  // namespace tpa
