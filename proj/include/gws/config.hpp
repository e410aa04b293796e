#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gws/device.hpp"

namespace gws {

// Run settings shared by the CLI subcommands. Defaults describe the
// reference device: 200 nm wells 50 nm apart, 500 meV barrier, 450 meV
// gates, k1 d = 4.96 pi.
struct RunConfig {
  SpecConfig spec;

  int m = 1;
  int n = 1;

  // Propagation; unset means auto (y_max = 2 L, dy = y_max / 8192).
  std::optional<double> y_max;
  std::optional<double> dy;
  int transfer_order = 0;

  // Sweep axes, inclusive of both ends.
  double d_min = 200.0, d_max = 200.0, d_step = 50.0;
  double D_min = 30.0, D_max = 100.0, D_step = 10.0;
  bool fixed_E = false;

  // Switching axis, meV offsets applied to the drain gate.
  double dV_min = -1.0, dV_max = 1.0, dV_step = 0.05;

  // Mode profile dump grid (0 = no dump).
  int profile_points = 0;

  std::optional<double> override_coupling;  // debugging hook, 1/nm
};

RunConfig default_config();

// Documentation row for one config key; single source of truth for the
// strict parser and for --help.
struct ConfigKeyInfo {
  const char* key;
  const char* type;  // "number", "integer", "boolean"
  const char* def;
  const char* desc;
};

const std::vector<ConfigKeyInfo>& config_keys();

// Strict parse of a flat JSON object: unknown keys, non-flat values, and
// type mismatches all raise ConfigError. Parsed values overwrite cfg.
void apply_config_file(RunConfig& cfg, const std::string& path);

// Applies "key=value" pairs with the same key set and strictness.
void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value);

// Builds inclusive axis {lo, lo+step, ...}; requires step > 0 and hi >= lo.
std::vector<double> build_axis(double lo, double hi, double step, const char* name);

}  // namespace gws
