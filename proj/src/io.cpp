#include "tpa/io.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "tpa/errors.hpp"
#include "tpa/model.hpp"
#include "tpa/version.hpp"

namespace tpa {

namespace {

namespace fs = std::filesystem;

std::string mode_name(const KernelMatrix& K) { return to_string(K.system.mode); }

void write_axis_files(const fs::path& dir, const FrequencyGrid& ga,
                      const FrequencyGrid& gb, const char* prefix) {
  std::string a, b;
  a.reserve(ga.size() * 24);
  for (double v : ga.nodes) a += g17(v) + "\n";
  for (double v : gb.nodes) b += g17(v) + "\n";
  write_text_file(dir / (std::string(prefix) + "_axis_a.csv"), a);
  write_text_file(dir / (std::string(prefix) + "_axis_b.csv"), b);
}

}  // namespace

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text_file(const fs::path& path, const std::string& body) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open '" + path.string() + "' for writing");
  out << body;
  if (!out) throw ConfigError("write failed for '" + path.string() + "'");
}

void write_grid_csv(const fs::path& path, const FrequencyGrid& g) {
  std::string body = "nu,weight\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    body += g17(g.nodes[i]) + "," + g17(g.weights[i]) + "\n";
  write_text_file(path, body);
}

void write_kernel_abs_csv(const fs::path& dir, const KernelMatrix& K) {
  std::string body;
  body.reserve(static_cast<std::size_t>(K.rows()) * K.cols() * 12);
  for (Eigen::Index i = 0; i < K.rows(); ++i) {
    for (Eigen::Index j = 0; j < K.cols(); ++j) {
      if (j) body += ',';
      body += g17(std::abs(K.values(i, j)));
    }
    body += '\n';
  }
  write_text_file(dir / "kernel_abs.csv", body);
  write_axis_files(dir, K.grid_a, K.grid_b, "kernel");
}

void write_kernel_binary(const fs::path& dir, const KernelMatrix& K) {
  fs::create_directories(dir);
  std::ofstream out(dir / "kernel.bin", std::ios::binary);
  if (!out)
    throw ConfigError("cannot open '" + (dir / "kernel.bin").string() +
                      "' for writing");
  for (Eigen::Index i = 0; i < K.rows(); ++i)
    for (Eigen::Index j = 0; j < K.cols(); ++j) {
      const double re = K.values(i, j).real(), im = K.values(i, j).imag();
      out.write(reinterpret_cast<const char*>(&re), sizeof(double));
      out.write(reinterpret_cast<const char*>(&im), sizeof(double));
    }
  if (!out)
    throw ConfigError("write failed for '" + (dir / "kernel.bin").string() +
                      "'");

  std::string hdr;
  hdr += "layout: row-major interleaved re,im float64 little-endian\n";
  hdr += "rows: " + std::to_string(K.rows()) + "\n";
  hdr += "cols: " + std::to_string(K.cols()) + "\n";
  hdr += "t: " + g17(K.t) + "\n";
  hdr += "mode: " + mode_name(K) + "\n";
  hdr += "gamma_f: " + g17(K.system.gamma_f) + "\n";
  hdr += "delta_cap: " + g17(K.system.delta_cap) + "\n";
  hdr += "grid_a: " + K.grid_a.meta.detail + "\n";
  hdr += "grid_b: " + K.grid_b.meta.detail + "\n";
  write_text_file(dir / "kernel.bin.txt", hdr);
  write_axis_files(dir, K.grid_a, K.grid_b, "kernel");
}

void write_schmidt_csv(const fs::path& dir, const SchmidtDecomposition& sd) {
  std::string values = "k,r\n";
  for (std::size_t k = 0; k < sd.rank(); ++k)
    values += std::to_string(k + 1) + "," + g17(sd.r[k]) + "\n";
  write_text_file(dir / "schmidt_values.csv", values);

  const std::size_t shown = std::min<std::size_t>(sd.rank(), 8);
  for (std::size_t k = 0; k < shown; ++k) {
    std::string body = "nu,re_psi,im_psi,re_phi,im_phi\n";
    for (Eigen::Index i = 0; i < sd.psi.rows(); ++i) {
      body += g17(sd.grid_a.nodes[i]) + "," + g17(sd.psi(i, k).real()) + "," +
              g17(sd.psi(i, k).imag()) + "," + g17(sd.phi(i, k).real()) + "," +
              g17(sd.phi(i, k).imag()) + "\n";
    }
    char name[32];
    std::snprintf(name, sizeof(name), "mode_%03zu.csv", k + 1);
    write_text_file(dir / name, body);
  }
}

void write_pulse_csv(const fs::path& path, const FrequencyGrid& grid,
                     const Eigen::VectorXcd& a) {
  std::string body = "nu,re,im\n";
  for (Eigen::Index i = 0; i < a.size(); ++i)
    body += g17(grid.nodes[i]) + "," + g17(a[i].real()) + "," +
            g17(a[i].imag()) + "\n";
  write_text_file(path, body);
}

void write_state_csv(const fs::path& dir, const Eigen::MatrixXcd& amplitude,
                     const FrequencyGrid& grid_a, const FrequencyGrid& grid_b) {
  std::string mod, arg;
  for (Eigen::Index i = 0; i < amplitude.rows(); ++i) {
    for (Eigen::Index j = 0; j < amplitude.cols(); ++j) {
      if (j) {
        mod += ',';
        arg += ',';
      }
      mod += g17(std::abs(amplitude(i, j)));
      arg += g17(std::arg(amplitude(i, j)));
    }
    mod += '\n';
    arg += '\n';
  }
  write_text_file(dir / "state_abs.csv", mod);
  write_text_file(dir / "state_arg.csv", arg);
  write_axis_files(dir, grid_a, grid_b, "state");
}

void write_sweep_csv(const fs::path& path, const SweepResult& res) {
  std::string body = "delta_cap,delta_small,r1,sum_rk2,E\n";
  for (const SweepRow& row : res.rows) {
    body += g17(row.delta_cap) + "," + g17(row.delta_small) + ",";
    if (row.ok)
      body += g17(row.r1) + "," + g17(row.sum_rk2) + "," +
              g17(row.enhancement) + "\n";
    else
      body += "nan,nan,nan\n";
  }
  write_text_file(path, body);
}

void write_dynamics_csv(const fs::path& path,
                        const std::vector<PopulationTrace>& traces) {
  std::string body = "t,p_e,p_f,drive\n";
  for (const PopulationTrace& tr : traces)
    for (std::size_t k = 0; k < tr.times.size(); ++k)
      body += g17(tr.times[k]) + "," + g17(tr.p_e[k]) + "," + g17(tr.p_f[k]) +
              "," + tr.drive + "\n";
  write_text_file(path, body);
}

void write_manifest(const fs::path& dir, const std::string& command,
                    const std::string& config_path, std::uint64_t config_hash,
                    int workers, std::uint64_t seed,
                    const std::vector<std::string>& outputs) {
  nlohmann::json j;
  j["command"] = command;
  j["config_path"] = config_path;
  {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(config_hash));
    j["config_hash_fnv1a64"] = buf;
  }
  j["version"] = kVersion;
  j["svd_backend"] = kBackend;
  j["workers"] = workers;
  j["seed"] = seed;
  j["outputs"] = outputs;
  j["written_unix_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::system_clock::now().time_since_epoch())
          .count();
  write_text_file(dir / "manifest.json", j.dump(2) + "\n");
}

}  // namespace tpa
