#include "gws/config.hpp"

#include <charconv>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gws/errors.hpp"

namespace gws {

namespace {

enum class Kind { Number, Integer, Boolean };

struct Entry {
  ConfigKeyInfo info;
  Kind kind;
  void (*set_num)(RunConfig&, double) = nullptr;
  void (*set_int)(RunConfig&, long long) = nullptr;
  void (*set_bool)(RunConfig&, bool) = nullptr;
};

Entry number(const char* key, const char* def, const char* desc,
             void (*set)(RunConfig&, double)) {
  return {{key, "number", def, desc}, Kind::Number, set, nullptr, nullptr};
}

Entry integer(const char* key, const char* def, const char* desc,
              void (*set)(RunConfig&, long long)) {
  return {{key, "integer", def, desc}, Kind::Integer, nullptr, set, nullptr};
}

Entry boolean(const char* key, const char* def, const char* desc,
              void (*set)(RunConfig&, bool)) {
  return {{key, "boolean", def, desc}, Kind::Boolean, nullptr, nullptr, set};
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      number("d", "200", "source well width, nm",
             +[](RunConfig& c, double v) { c.spec.d = v; }),
      number("d2", "(d)", "drain well width, nm",
             +[](RunConfig& c, double v) { c.spec.d2 = v; }),
      number("D", "50", "well separation, nm",
             +[](RunConfig& c, double v) { c.spec.D = v; }),
      number("V0", "500", "barrier gate potential, meV",
             +[](RunConfig& c, double v) { c.spec.V0 = v; }),
      number("V1", "450", "source gate potential, meV",
             +[](RunConfig& c, double v) { c.spec.V1 = v; }),
      number("V2", "(V1)", "drain gate potential, meV",
             +[](RunConfig& c, double v) { c.spec.V2 = v; }),
      number("E", "(from k1d_over_pi)", "electron energy, meV",
             +[](RunConfig& c, double v) { c.spec.E = v; }),
      number("k1d_over_pi", "4.96", "k1 d / pi, alternative energy input",
             +[](RunConfig& c, double v) { c.spec.k1d_over_pi = v; }),
      number("mass_ratio", "0.067", "barrier effective mass ratio",
             +[](RunConfig& c, double v) { c.spec.mass_ratio = v; }),
      integer("m", "1", "source mode index (1-based)",
              +[](RunConfig& c, long long v) { c.m = static_cast<int>(v); }),
      integer("n", "1", "drain mode index (1-based)",
              +[](RunConfig& c, long long v) { c.n = static_cast<int>(v); }),
      number("y_max", "(2 L)", "propagation length, nm",
             +[](RunConfig& c, double v) { c.y_max = v; }),
      number("dy", "(y_max/8192)", "integrator step, nm",
             +[](RunConfig& c, double v) { c.dy = v; }),
      integer("transfer_order", "0", "which transfer maximum to report",
              +[](RunConfig& c, long long v) { c.transfer_order = static_cast<int>(v); }),
      number("d_min", "200", "sweep: first well width, nm",
             +[](RunConfig& c, double v) { c.d_min = v; }),
      number("d_max", "200", "sweep: last well width, nm",
             +[](RunConfig& c, double v) { c.d_max = v; }),
      number("d_step", "50", "sweep: well width step, nm",
             +[](RunConfig& c, double v) { c.d_step = v; }),
      number("D_min", "30", "sweep: first separation, nm",
             +[](RunConfig& c, double v) { c.D_min = v; }),
      number("D_max", "100", "sweep: last separation, nm",
             +[](RunConfig& c, double v) { c.D_max = v; }),
      number("D_step", "10", "sweep: separation step, nm",
             +[](RunConfig& c, double v) { c.D_step = v; }),
      boolean("fixed_E", "false", "sweep: hold E instead of k1 d across widths",
              +[](RunConfig& c, bool v) { c.fixed_E = v; }),
      number("dV_min", "-1", "switching: first drain gate offset, meV",
             +[](RunConfig& c, double v) { c.dV_min = v; }),
      number("dV_max", "1", "switching: last drain gate offset, meV",
             +[](RunConfig& c, double v) { c.dV_max = v; }),
      number("dV_step", "0.05", "switching: gate offset step, meV",
             +[](RunConfig& c, double v) { c.dV_step = v; }),
      integer("profile_points", "0", "modes: profile samples per row (0 = none)",
              +[](RunConfig& c, long long v) { c.profile_points = static_cast<int>(v); }),
      number("override_coupling", "(off)", "debug: replace C12 = C21, 1/nm",
             +[](RunConfig& c, double v) { c.override_coupling = v; }),
  };
  return table;
}

const Entry& find_entry(const std::string& key) {
  for (const Entry& e : entries())
    if (key == e.info.key) return e;
  throw ConfigError("unknown config key: " + key);
}

long long parse_integer(const std::string& key, const std::string& text) {
  long long v = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw ConfigError(key + " expects an integer, got '" + text + "'");
  return v;
}

double parse_number(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw ConfigError(key + " expects a number, got '" + text + "'");
  return v;
}

bool parse_boolean(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw ConfigError(key + " expects true or false, got '" + text + "'");
}

}  // namespace

RunConfig default_config() {
  RunConfig cfg;
  cfg.spec.d = 200.0;
  cfg.spec.D = 50.0;
  cfg.spec.V0 = 500.0;
  cfg.spec.V1 = 450.0;
  cfg.spec.k1d_over_pi = 4.96;
  cfg.spec.mass_ratio = 0.067;
  return cfg;
}

const std::vector<ConfigKeyInfo>& config_keys() {
  static const std::vector<ConfigKeyInfo> keys = [] {
    std::vector<ConfigKeyInfo> v;
    v.reserve(entries().size());
    for (const Entry& e : entries()) v.push_back(e.info);
    return v;
  }();
  return keys;
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config parse error in " + path + ": " + e.what());
  }
  if (!doc.is_object())
    throw ConfigError("config must be a flat object of key/value pairs");
  for (const auto& [key, value] : doc.items()) {
    const Entry& e = find_entry(key);
    switch (e.kind) {
      case Kind::Number:
        if (!value.is_number())
          throw ConfigError(key + " expects a number");
        e.set_num(cfg, value.get<double>());
        break;
      case Kind::Integer:
        if (!value.is_number_integer())
          throw ConfigError(key + " expects an integer");
        e.set_int(cfg, value.get<long long>());
        break;
      case Kind::Boolean:
        if (!value.is_boolean())
          throw ConfigError(key + " expects true or false");
        e.set_bool(cfg, value.get<bool>());
        break;
    }
  }
}

void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value) {
  const Entry& e = find_entry(key);
  switch (e.kind) {
    case Kind::Number:
      e.set_num(cfg, parse_number(key, value));
      break;
    case Kind::Integer:
      e.set_int(cfg, parse_integer(key, value));
      break;
    case Kind::Boolean:
      e.set_bool(cfg, parse_boolean(key, value));
      break;
  }
}

std::vector<double> build_axis(double lo, double hi, double step, const char* name) {
  if (!(step > 0.0))
    throw ConfigError(std::string(name) + "_step must be positive");
  if (!(hi >= lo))
    throw ConfigError(std::string(name) + " axis must be ascending (min <= max)");
  std::vector<double> axis;
  const double tol = 1e-9 * step;
  for (int i = 0;; ++i) {
    const double v = lo + static_cast<double>(i) * step;
    if (v > hi + tol) break;
    axis.push_back(v);
  }
  return axis;
}

}  // namespace gws
