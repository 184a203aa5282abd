#include "tpa/config.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "tpa/errors.hpp"

namespace tpa {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& sec, const std::string& key,
                    const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("[" + sec + "] " + key + ": not a number: '" + value +
                      "'");
  }
}

int parse_int(const std::string& sec, const std::string& key,
              const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("[" + sec + "] " + key + ": not an integer: '" + value +
                      "'");
  }
}

bool parse_bool(const std::string& sec, const std::string& key,
                const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("[" + sec + "] " + key + ": not a boolean: '" + value +
                    "'");
}

std::vector<double> parse_list(const std::string& sec, const std::string& key,
                               const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw ConfigError("[" + sec + "] " + key + ": empty list entry");
    out.push_back(parse_double(sec, key, item));
  }
  if (out.empty()) throw ConfigError("[" + sec + "] " + key + ": empty list");
  return out;
}

void reject_unknown(const std::string& sec,
                    const std::map<std::string, std::string>& kv,
                    const std::set<std::string>& allowed) {
  for (const auto& [key, value] : kv)
    if (!allowed.count(key))
      throw ConfigError("unknown key '" + key + "' in section [" + sec + "]");
}

const std::string* find(const std::map<std::string, std::string>& kv,
                        const std::string& key) {
  const auto it = kv.find(key);
  return it == kv.end() ? nullptr : &it->second;
}

void apply_system(const std::map<std::string, std::string>& kv,
                  RunConfig& cfg) {
  reject_unknown("system", kv,
                 {"preset", "gamma_f", "delta", "delta_cap", "mu_ge", "mu_ef",
                  "mode", "gamma_e2", "delta_atoms"});
  if (const std::string* preset = find(kv, "preset")) {
    if (kv.size() != 1)
      throw ConfigError(
          "[system] preset replaces every other key in the section");
    if (*preset != "rubidium")
      throw ConfigError("unknown preset '" + *preset + "'");
    cfg.system = from_rubidium();
    cfg.system_from_preset = true;
    return;
  }
  const std::string* gamma_f = find(kv, "gamma_f");
  const std::string* delta = find(kv, "delta");
  if (gamma_f && delta)
    throw ConfigError("[system] gamma_f and delta are two spellings of the "
                      "same linewidth; give only one");
  double gf = 2.0;
  if (gamma_f) gf = parse_double("system", "gamma_f", *gamma_f);
  if (delta) gf = 2.0 + parse_double("system", "delta", *delta);
  double dcap = 0.0, mu_ge = 1.0, mu_ef = 1.0;
  CouplingMode mode = CouplingMode::Symmetric;
  TwoAtomParams ta;
  if (const std::string* v = find(kv, "delta_cap"))
    dcap = parse_double("system", "delta_cap", *v);
  if (const std::string* v = find(kv, "mu_ge"))
    mu_ge = parse_double("system", "mu_ge", *v);
  if (const std::string* v = find(kv, "mu_ef"))
    mu_ef = parse_double("system", "mu_ef", *v);
  if (const std::string* v = find(kv, "mode")) mode = coupling_mode_from_string(*v);
  if (const std::string* v = find(kv, "gamma_e2"))
    ta.gamma_e2 = parse_double("system", "gamma_e2", *v);
  if (const std::string* v = find(kv, "delta_atoms"))
    ta.delta_atoms = parse_double("system", "delta_atoms", *v);
  cfg.system = make_system(gf, dcap, mu_ge, mu_ef, mode, ta);
}

void apply_grid(const std::map<std::string, std::string>& kv, RunConfig& cfg) {
  reject_unknown("grid", kv, {"kind", "center", "halfwidth", "n", "centers",
                              "scales", "ns", "tail_cut"});
  GridSpec gs;
  if (const std::string* v = find(kv, "kind")) gs.kind = *v;
  if (gs.kind != "uniform" && gs.kind != "graded")
    throw ConfigError("[grid] kind must be 'uniform' or 'graded', got '" +
                      gs.kind + "'");
  if (const std::string* v = find(kv, "tail_cut"))
    gs.tail_cut = parse_double("grid", "tail_cut", *v);

  if (gs.kind == "uniform") {
    for (const char* key : {"centers", "scales", "ns"})
      if (find(kv, key))
        throw ConfigError(std::string("[grid] '") + key +
                          "' applies to graded grids only");
    if (const std::string* v = find(kv, "center"))
      gs.center = parse_double("grid", "center", *v);
    if (const std::string* v = find(kv, "halfwidth"))
      gs.halfwidth = parse_double("grid", "halfwidth", *v);
    if (const std::string* v = find(kv, "n")) gs.n = parse_int("grid", "n", *v);
  } else {
    for (const char* key : {"center", "halfwidth"})
      if (find(kv, key))
        throw ConfigError(std::string("[grid] '") + key +
                          "' applies to uniform grids only");
    const std::string* cs = find(kv, "centers");
    const std::string* ss = find(kv, "scales");
    if (!cs || !ss)
      throw ConfigError("[grid] graded grids need 'centers' and 'scales'");
    const std::vector<double> centers = parse_list("grid", "centers", *cs);
    const std::vector<double> scales = parse_list("grid", "scales", *ss);
    if (centers.size() != scales.size())
      throw ConfigError("[grid] centers and scales differ in length");
    std::vector<int> counts(centers.size(), 801);
    if (const std::string* v = find(kv, "ns")) {
      const std::vector<double> raw = parse_list("grid", "ns", *v);
      if (raw.size() != centers.size())
        throw ConfigError("[grid] ns and centers differ in length");
      for (std::size_t i = 0; i < raw.size(); ++i)
        counts[i] = static_cast<int>(raw[i]);
    } else if (const std::string* v = find(kv, "n")) {
      counts.assign(centers.size(), parse_int("grid", "n", *v));
    }
    gs.clusters.clear();
    for (std::size_t i = 0; i < centers.size(); ++i)
      gs.clusters.push_back({centers[i], scales[i], counts[i]});
  }
  cfg.grid = gs;
}

void apply_sweep(const std::map<std::string, std::string>& kv, RunConfig& cfg) {
  reject_unknown("sweep", kv,
                 {"dcap_min", "dcap_max", "dcap_count", "dsmall_min",
                  "dsmall_max", "dsmall_count", "t", "grid_n",
                  "grid_halfwidth"});
  SweepSpec& s = cfg.sweep;
  if (const std::string* v = find(kv, "dcap_min"))
    s.dcap_min = parse_double("sweep", "dcap_min", *v);
  if (const std::string* v = find(kv, "dcap_max"))
    s.dcap_max = parse_double("sweep", "dcap_max", *v);
  if (const std::string* v = find(kv, "dcap_count"))
    s.dcap_count = parse_int("sweep", "dcap_count", *v);
  if (const std::string* v = find(kv, "dsmall_min"))
    s.dsmall_min = parse_double("sweep", "dsmall_min", *v);
  if (const std::string* v = find(kv, "dsmall_max"))
    s.dsmall_max = parse_double("sweep", "dsmall_max", *v);
  if (const std::string* v = find(kv, "dsmall_count"))
    s.dsmall_count = parse_int("sweep", "dsmall_count", *v);
  if (const std::string* v = find(kv, "t")) s.t = parse_double("sweep", "t", *v);
  if (const std::string* v = find(kv, "grid_n"))
    s.grid_n = parse_int("sweep", "grid_n", *v);
  if (const std::string* v = find(kv, "grid_halfwidth"))
    s.grid_halfwidth = parse_double("sweep", "grid_halfwidth", *v);
  try {
    s.validate();
  } catch (const std::exception& ex) {
    throw ConfigError(std::string("[sweep] ") + ex.what());
  }
}

void apply_dynamics(const std::map<std::string, std::string>& kv,
                    RunConfig& cfg) {
  reject_unknown("dynamics", kv, {"t_min", "t_max", "t_count"});
  if (const std::string* v = find(kv, "t_min"))
    cfg.t_min = parse_double("dynamics", "t_min", *v);
  if (const std::string* v = find(kv, "t_max"))
    cfg.t_max = parse_double("dynamics", "t_max", *v);
  if (const std::string* v = find(kv, "t_count"))
    cfg.t_count = parse_int("dynamics", "t_count", *v);
  if (cfg.t_count < 1 || cfg.t_max < cfg.t_min)
    throw ConfigError("[dynamics] time window must be ordered with t_count >= 1");
}

void apply_optimize(const std::map<std::string, std::string>& kv,
                    RunConfig& cfg) {
  reject_unknown("optimize", kv, {"photon_number"});
  if (const std::string* v = find(kv, "photon_number"))
    cfg.photon_number = parse_double("optimize", "photon_number", *v);
  if (!(cfg.photon_number > 0.0))
    throw ConfigError("[optimize] photon_number must be positive");
}

void apply_kernel(const std::map<std::string, std::string>& kv,
                  RunConfig& cfg) {
  reject_unknown("kernel", kv, {"t", "binary"});
  if (const std::string* v = find(kv, "t"))
    cfg.kernel_t = parse_double("kernel", "t", *v);
  if (const std::string* v = find(kv, "binary"))
    cfg.kernel_binary = parse_bool("kernel", "binary", *v);
}

void apply_preset(const std::map<std::string, std::string>& kv,
                  RunConfig& cfg) {
  reject_unknown("preset", kv, {"band_min", "band_max"});
  if (const std::string* v = find(kv, "band_min"))
    cfg.preset_band_min = parse_double("preset", "band_min", *v);
  if (const std::string* v = find(kv, "band_max"))
    cfg.preset_band_max = parse_double("preset", "band_max", *v);
  if (cfg.preset_band_max < cfg.preset_band_min)
    throw ConfigError("[preset] acceptance band must be ordered");
}

}  // namespace

ConfigSections parse_ini(const std::string& text) {
  ConfigSections sections;
  std::stringstream ss(text);
  std::string raw;
  std::string current;
  int lineno = 0;
  while (std::getline(ss, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3)
        throw ConfigError("line " + std::to_string(lineno) +
                          ": malformed section header");
      current = trim(line.substr(1, line.size() - 2));
      if (current.empty())
        throw ConfigError("line " + std::to_string(lineno) +
                          ": empty section name");
      sections[current];  // a section may legitimately stay empty
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected key=value, got '" + line + "'");
    if (current.empty())
      throw ConfigError("line " + std::to_string(lineno) +
                        ": key=value before any [section]");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    if (!sections[current].emplace(key, value).second)
      throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" +
                        key + "' in section [" + current + "]");
  }
  return sections;
}

FrequencyGrid GridSpec::build() const {
  if (kind == "uniform") return uniform_grid(center, halfwidth, n);
  if (kind == "graded") return graded_grid(clusters, tail_cut);
  throw ConfigError("unknown grid kind '" + kind + "'");
}

RunConfig load_config(const std::string& path) {
  RunConfig cfg;
  if (path.empty()) return cfg;

  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  cfg.config_path = path;
  cfg.config_hash = fnv1a64(text);

  const ConfigSections sections = parse_ini(text);
  for (const auto& [name, kv] : sections) {
    if (name == "system") apply_system(kv, cfg);
    else if (name == "grid") apply_grid(kv, cfg);
    else if (name == "sweep") apply_sweep(kv, cfg);
    else if (name == "dynamics") apply_dynamics(kv, cfg);
    else if (name == "optimize") apply_optimize(kv, cfg);
    else if (name == "kernel") apply_kernel(kv, cfg);
    else if (name == "preset") apply_preset(kv, cfg);
    else throw ConfigError("unknown section [" + name + "]");
  }
  return cfg;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace tpa
