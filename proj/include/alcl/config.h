#ifndef ALCL_CONFIG_H_
#define ALCL_CONFIG_H_

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "alcl/fields.h"
#include "alcl/grid_spectral.h"
#include "alcl/initial_data.h"

namespace alcl {

// Parse or validation failure; the message lists every failing field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tolerance names understood by the harness, with defaults.
const std::map<std::string, double>& DefaultTolerances();

struct SimConfig {
  Sign sign = Sign::kDefocusing;
  double gamma = 0.5;
  double T = 0.5;
  std::vector<double> h_list{0.2, 0.1, 0.05, 0.025};
  ChannelSpec psi0 = ChannelSpec::Gaussian(1.0, 1.0, 0.0);
  ChannelSpec phi0 = ChannelSpec::Gaussian(0.5, 1.0, 1.0);
  double L = 32.0;
  double dt_lat = 0.1;
  int snapshots = 32;  // K: snapshots at j T / K, j = -K..K
  std::vector<double> kappa_list{1.0, 2.0, 4.0, 6.0};
  std::vector<double> delta_list{0.75};
  std::vector<double> R_list{5.0, 10.0, 20.0};
  std::map<std::string, double> tolerances = DefaultTolerances();
  bool override_gamma = false;
  bool override_small_h = false;
  std::string out_dir = "out";

  SamplingOptions sampling() const { return {override_gamma, override_small_h}; }
  double tolerance(const std::string& name) const;

  bool operator==(const SimConfig&) const = default;
};

bool operator==(const ChannelSpec& a, const ChannelSpec& b);

// Builds a config from a JSON document, filling defaults. Unknown keys and
// invariant violations raise ConfigError. `base_dir` resolves relative
// sample-file paths.
SimConfig ConfigFromJson(const nlohmann::json& doc, const std::string& base_dir = ".");
SimConfig LoadConfig(const std::string& path);

// Normalized echo that ConfigFromJson maps back to an equal config.
nlohmann::json ConfigToJson(const SimConfig& cfg);

// Every invariant violation, empty when the config is valid.
std::vector<std::string> ValidateConfig(const SimConfig& cfg);

}  // namespace alcl

#endif  // ALCL_CONFIG_H_
