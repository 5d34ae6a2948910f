#include "alcl/config.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "alcl/errors.h"

namespace alcl {
namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;

void RejectUnknown(const json& obj, const std::set<std::string>& known,
                   const std::string& where, std::vector<std::string>& errors) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!known.count(it.key())) errors.push_back("unknown key " + where + it.key());
  }
}

template <typename T>
void Read(const json& obj, const char* key, T& out, const std::string& where,
          std::vector<std::string>& errors) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception& e) {
    errors.push_back(where + key + ": " + e.what());
  }
}

ChannelSpec ReadChannel(const json& obj, const std::string& where, const std::string& base_dir,
                        std::vector<std::string>& errors) {
  ChannelSpec spec;
  if (!obj.is_object()) {
    errors.push_back(where + " must be an object");
    return spec;
  }
  RejectUnknown(obj, {"kind", "amplitude", "width", "center", "wavenumber", "path"},
                where + ".", errors);
  std::string kind = "gaussian";
  Read(obj, "kind", kind, where + ".", errors);
  try {
    spec.kind = ParseProfileKind(kind);
  } catch (const std::exception& e) {
    errors.push_back(where + ".kind: " + e.what());
  }
  Read(obj, "amplitude", spec.amplitude, where + ".", errors);
  Read(obj, "width", spec.width, where + ".", errors);
  Read(obj, "center", spec.center, where + ".", errors);
  Read(obj, "wavenumber", spec.wavenumber, where + ".", errors);
  Read(obj, "path", spec.path, where + ".", errors);
  if (spec.kind == ProfileKind::kFile && !obj.contains("amplitude")) spec.amplitude = 1.0;
  if (spec.kind == ProfileKind::kFile && !spec.path.empty()) {
    const std::filesystem::path p(spec.path);
    if (p.is_relative()) spec.path = (std::filesystem::path(base_dir) / p).string();
  }
  return spec;
}

json ChannelToJson(const ChannelSpec& c) {
  json j = {{"kind", std::string(ToString(c.kind))},
            {"amplitude", c.amplitude},
            {"width", c.width},
            {"center", c.center},
            {"wavenumber", c.wavenumber}};
  if (c.kind == ProfileKind::kFile) j["path"] = c.path;
  return j;
}

}  // namespace

const std::map<std::string, double>& DefaultTolerances() {
  static const std::map<std::string, double> kDefaults = {
      {"mass_drift", 1e-8},
      {"hamiltonian_drift", 1e-7},
      {"h2_drift", 1e-7},
      {"g_drift", 1e-6},
      {"boundary_mass", 1e-8},
      {"convergence_final_ratio", 0.25},
      {"suppression_fit_residual", 0.5},
      {"strichartz_spread", 2.0},
      {"profile_growth", 2.0},
  };
  return kDefaults;
}

double SimConfig::tolerance(const std::string& name) const {
  const auto it = tolerances.find(name);
  if (it == tolerances.end()) throw PreconditionError("unknown tolerance " + name);
  return it->second;
}

bool operator==(const ChannelSpec& a, const ChannelSpec& b) {
  return a.kind == b.kind && a.amplitude == b.amplitude && a.width == b.width &&
         a.center == b.center && a.wavenumber == b.wavenumber && a.path == b.path;
}

std::vector<std::string> ValidateConfig(const SimConfig& cfg) {
  std::vector<std::string> errors;
  const auto err = [&](const std::string& msg) { errors.push_back(msg); };
  if (!(cfg.gamma > 0.0)) err("gamma must be positive");
  if (cfg.gamma > kMaxGamma && !cfg.override_gamma) {
    std::ostringstream m;
    m << "gamma = " << cfg.gamma
      << " exceeds 13/18, the bound on the power law N = h^{-gamma} (set overrides.gamma to allow)";
    err(m.str());
  }
  if (!(cfg.T > 0.0)) err("T must be positive");
  if (!(cfg.L > 0.0)) err("L must be positive");
  if (!(cfg.dt_lat > 0.0)) err("dt_lat must be positive");
  if (cfg.snapshots < 2 || cfg.snapshots % 2 != 0) err("snapshots must be an even integer >= 2");
  if (cfg.h_list.empty()) err("h_list must not be empty");
  for (std::size_t i = 1; i < cfg.h_list.size(); ++i) {
    if (!(cfg.h_list[i] < cfg.h_list[i - 1])) err("h_list must be strictly decreasing");
  }
  for (const ChannelSpec* c : {&cfg.psi0, &cfg.phi0}) {
    const char* name = c == &cfg.psi0 ? "init.psi" : "init.phi";
    if (c->kind != ProfileKind::kFile && !(c->width > 0.0)) {
      err(std::string(name) + ".width must be positive");
    }
    if (c->kind == ProfileKind::kFile && c->path.empty() && !c->samples) {
      err(std::string(name) + ".path is required for kind file");
    }
  }
  double h0 = 0.0;
  bool have_h0 = false;
  if (errors.empty()) {
    try {
      h0 = SmallMeshThreshold(cfg.psi0, cfg.phi0);
      have_h0 = true;
    } catch (const std::exception& e) {
      err(std::string("initial data: ") + e.what());
    }
  }
  for (double h : cfg.h_list) {
    std::ostringstream tag;
    tag << "h = " << h << ": ";
    if (!(h > 0.0)) {
      err(tag.str() + "must be positive");
      continue;
    }
    try {
      SiteCount(h, cfg.L);
    } catch (const std::exception& e) {
      err(tag.str() + e.what());
    }
    if (cfg.gamma > 0.0 && 2.0 * CutoffFrequency(h, cfg.gamma) * h >= kPi) {
      err(tag.str() + "aliasing, 2 N h >= pi");
    }
    if (have_h0 && h > h0 && !cfg.override_small_h) {
      std::ostringstream m;
      m << tag.str() << "exceeds the small-mesh threshold h_0 = " << h0
        << " = min{1, 1/(100 mass)} with mass |psi_0|^2 + |phi_0|^2 = "
        << cfg.psi0.NormSquared() + cfg.phi0.NormSquared() << " (set overrides.small_h to allow)";
      err(m.str());
    }
  }
  for (double k : cfg.kappa_list) {
    if (!(k > 0.0)) err("kappa_list entries must be positive");
  }
  for (double d : cfg.delta_list) {
    if (!(d > 0.0 && d < 1.0)) err("delta_list entries must lie in (0, 1)");
  }
  for (double r : cfg.R_list) {
    if (!(r >= 1.0 && r < cfg.L)) err("R_list entries must satisfy 1 <= R < L");
  }
  for (const auto& [name, value] : cfg.tolerances) {
    if (!DefaultTolerances().count(name)) err("unknown tolerance " + name);
    if (!(value > 0.0)) err("tolerance " + name + " must be positive");
  }
  return errors;
}

SimConfig ConfigFromJson(const json& doc, const std::string& base_dir) {
  std::vector<std::string> errors;
  SimConfig cfg;
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  RejectUnknown(doc,
                {"sign", "gamma", "T", "h_list", "init", "L", "dt_lat", "snapshots", "kappa_list",
                 "delta_list", "R_list", "tolerances", "overrides", "out_dir"},
                "", errors);
  std::string sign = std::string(ToString(cfg.sign));
  Read(doc, "sign", sign, "", errors);
  try {
    cfg.sign = ParseSign(sign);
  } catch (const std::exception& e) {
    errors.push_back(std::string("sign: ") + e.what());
  }
  Read(doc, "gamma", cfg.gamma, "", errors);
  Read(doc, "T", cfg.T, "", errors);
  Read(doc, "h_list", cfg.h_list, "", errors);
  Read(doc, "L", cfg.L, "", errors);
  Read(doc, "dt_lat", cfg.dt_lat, "", errors);
  Read(doc, "snapshots", cfg.snapshots, "", errors);
  Read(doc, "kappa_list", cfg.kappa_list, "", errors);
  Read(doc, "delta_list", cfg.delta_list, "", errors);
  Read(doc, "R_list", cfg.R_list, "", errors);
  Read(doc, "out_dir", cfg.out_dir, "", errors);
  if (doc.contains("init")) {
    const json& init = doc.at("init");
    if (!init.is_object()) {
      errors.push_back("init must be an object");
    } else {
      RejectUnknown(init, {"psi", "phi"}, "init.", errors);
      if (init.contains("psi")) cfg.psi0 = ReadChannel(init.at("psi"), "init.psi", base_dir, errors);
      if (init.contains("phi")) cfg.phi0 = ReadChannel(init.at("phi"), "init.phi", base_dir, errors);
    }
  }
  if (doc.contains("tolerances")) {
    const json& tol = doc.at("tolerances");
    if (!tol.is_object()) {
      errors.push_back("tolerances must be an object");
    } else {
      for (auto it = tol.begin(); it != tol.end(); ++it) {
        if (!DefaultTolerances().count(it.key())) {
          errors.push_back("unknown key tolerances." + it.key());
          continue;
        }
        Read(tol, it.key().c_str(), cfg.tolerances[it.key()], "tolerances.", errors);
      }
    }
  }
  if (doc.contains("overrides")) {
    const json& ov = doc.at("overrides");
    if (!ov.is_object()) {
      errors.push_back("overrides must be an object");
    } else {
      RejectUnknown(ov, {"gamma", "small_h"}, "overrides.", errors);
      Read(ov, "gamma", cfg.override_gamma, "overrides.", errors);
      Read(ov, "small_h", cfg.override_small_h, "overrides.", errors);
    }
  }
  if (errors.empty()) {
    for (ChannelSpec* c : {&cfg.psi0, &cfg.phi0}) {
      if (c->kind != ProfileKind::kFile) continue;
      try {
        c->samples = LoadSamples(c->path, cfg.L);
      } catch (const std::exception& e) {
        errors.push_back(c->path + ": " + e.what());
      }
    }
  }
  if (errors.empty()) errors = ValidateConfig(cfg);
  if (!errors.empty()) {
    std::ostringstream msg;
    msg << "invalid config:";
    for (const std::string& e : errors) msg << "\n  - " << e;
    throw ConfigError(msg.str());
  }
  return cfg;
}

SimConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("parse error in ") + path + ": " + e.what());
  }
  const std::string base = std::filesystem::path(path).parent_path().string();
  return ConfigFromJson(doc, base.empty() ? "." : base);
}

json ConfigToJson(const SimConfig& cfg) {
  json tol = json::object();
  for (const auto& [k, v] : cfg.tolerances) tol[k] = v;
  return {
      {"sign", std::string(ToString(cfg.sign))},
      {"gamma", cfg.gamma},
      {"T", cfg.T},
      {"h_list", cfg.h_list},
      {"init", {{"psi", ChannelToJson(cfg.psi0)}, {"phi", ChannelToJson(cfg.phi0)}}},
      {"L", cfg.L},
      {"dt_lat", cfg.dt_lat},
      {"snapshots", cfg.snapshots},
      {"kappa_list", cfg.kappa_list},
      {"delta_list", cfg.delta_list},
      {"R_list", cfg.R_list},
      {"tolerances", tol},
      {"overrides", {{"gamma", cfg.override_gamma}, {"small_h", cfg.override_small_h}}},
      {"out_dir", cfg.out_dir},
  };
}

}  // namespace alcl
