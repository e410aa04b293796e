#include "gws/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gws/cmt.hpp"
#include "gws/config.hpp"
#include "gws/coupling.hpp"
#include "gws/csvio.hpp"
#include "gws/device.hpp"
#include "gws/errors.hpp"
#include "gws/modes.hpp"
#include "gws/sweep.hpp"

namespace gws {

namespace {

struct CliState {
  std::string config_path;
  std::string out_path;
  int threads = 1;
  std::vector<std::string> sets;
};

std::string config_footer() {
  std::ostringstream os;
  os << "Config keys (JSON file via --config, or --set key=value):\n";
  for (const ConfigKeyInfo& k : config_keys()) {
    os << "  " << std::left << std::setw(18) << k.key << std::setw(8) << k.type
       << " default " << std::setw(20) << k.def << " " << k.desc << "\n";
  }
  return os.str();
}

void add_common(CLI::App* sub, CliState& st) {
  sub->add_option("--config", st.config_path, "JSON config file (flat object)");
  sub->add_option("--out", st.out_path, "output path (default: stdout)");
  sub->add_option("--threads", st.threads, "worker threads (sweep only)");
  sub->add_option("--set", st.sets, "override one config key, key=value");
  sub->footer(config_footer());
}

RunConfig load_config(const CliState& st) {
  RunConfig cfg = default_config();
  if (!st.config_path.empty()) apply_config_file(cfg, st.config_path);
  for (const std::string& kv : st.sets) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos)
      throw ConfigError("--set expects key=value, got '" + kv + "'");
    apply_key_value(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  return cfg;
}

// Results are staged in memory and written in one shot, so a failing run
// never leaves a partial output file.
void emit(const CliState& st, const std::string& text) {
  if (st.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(st.out_path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + st.out_path);
  out << text;
}

std::vector<ModeTableRow> solve_both_wells(const CouplerSpec& spec) {
  std::vector<ModeTableRow> rows;
  const double k0sq = barrier_k0_squared(spec);
  for (int well = 1; well <= 2; ++well) {
    const double d =
        well == 1 ? spec.source.width_d_nm : spec.drain.width_d_nm;
    const DispersionContext ctx{d, channel_wavevector(spec, well), k0sq};
    for (const GuidedMode& m : find_modes(ctx)) rows.push_back({well, m});
  }
  return rows;
}

void cmd_modes(const CliState& st) {
  const RunConfig cfg = load_config(st);
  const CouplerSpec spec = build_spec(cfg.spec);
  const std::vector<ModeTableRow> rows = solve_both_wells(spec);
  std::ostringstream os;
  if (cfg.profile_points > 0)
    write_profile_csv(os, spec, rows, cfg.profile_points);
  else
    write_modes_csv(os, spec, rows);
  emit(st, os.str());
}

void cmd_couple(const CliState& st) {
  const RunConfig cfg = load_config(st);
  const CouplerSpec spec = build_spec(cfg.spec);
  const CouplingResult cc = coupling_coefficients(spec, cfg.m, cfg.n);
  std::ostringstream os;
  write_couple_csv(os, cc);
  emit(st, os.str());
}

void cmd_propagate(const CliState& st) {
  const RunConfig cfg = load_config(st);
  const CouplerSpec spec = build_spec(cfg.spec);
  CMTSystem sys;
  if (cfg.override_coupling) {
    sys = {*cfg.override_coupling, *cfg.override_coupling, 0.0};
  } else {
    const CouplingResult cc = coupling_coefficients(spec, cfg.m, cfg.n);
    sys = {cc.C12, cc.C21, cc.delta};
  }
  const double product = sys.C12 * sys.C21;
  if (product <= 0.0) throw ZeroCoupling("symmetrized coupling is not positive");
  const double c_bar = std::sqrt(product);
  const TransferMetrics tm =
      transfer_metrics({c_bar, c_bar, sys.delta}, cfg.transfer_order);
  const double y_max = cfg.y_max.value_or(2.0 * tm.L_nm);
  const double dy = cfg.dy.value_or(y_max / 8192.0);
  const PropagationTrace tr = propagate(sys, {1.0, 0.0}, {0.0, 0.0}, y_max, dy);
  std::ostringstream os;
  write_trace_csv(os, tr, tm.L_nm, tm.fT_hz);
  emit(st, os.str());
}

void cmd_switching(const CliState& st) {
  const RunConfig cfg = load_config(st);
  const CouplerSpec spec = build_spec(cfg.spec);
  const std::vector<double> axis =
      build_axis(cfg.dV_min, cfg.dV_max, cfg.dV_step, "dV");
  const std::vector<SwitchingPoint> pts =
      switching_curve(spec, cfg.m, cfg.n, axis);
  std::ostringstream os;
  write_switching_csv(os, pts);
  emit(st, os.str());
}

SweepResult run_sweep(const RunConfig& cfg, int threads) {
  SweepRequest req;
  req.base = build_spec(cfg.spec);
  req.m = cfg.m;
  req.n = cfg.n;
  req.d_values = build_axis(cfg.d_min, cfg.d_max, cfg.d_step, "d");
  req.D_values = build_axis(cfg.D_min, cfg.D_max, cfg.D_step, "D");
  req.hold_k1d = !cfg.fixed_E;
  return sweep_grid(req, threads);
}

std::optional<ExpFit> fit_single_d(const SweepResult& res) {
  if (res.n_d != 1) return std::nullopt;
  std::vector<double> D, fT;
  for (const SweepCell& c : res.cells) {
    if (c.status != CellStatus::Ok) continue;
    D.push_back(c.D_nm);
    fT.push_back(c.fT_hz);
  }
  if (D.size() < 3) return std::nullopt;
  return fit_exponential(D, fT);
}

void cmd_sweep(const CliState& st) {
  const RunConfig cfg = load_config(st);
  const SweepResult res = run_sweep(cfg, st.threads);
  const std::optional<ExpFit> fit = fit_single_d(res);
  std::ostringstream os;
  write_sweep_csv(os, res, fit ? &*fit : nullptr);
  emit(st, os.str());
}

void cmd_fit(const CliState& st) {
  const RunConfig cfg = load_config(st);
  const SweepResult res = run_sweep(cfg, st.threads);
  if (res.n_d != 1)
    throw ConfigError("fit needs a single well width (set d_min == d_max)");
  std::vector<double> D, fT;
  for (const SweepCell& c : res.cells) {
    if (c.status != CellStatus::Ok) continue;
    D.push_back(c.D_nm);
    fT.push_back(c.fT_hz);
  }
  const ExpFit fit = fit_exponential(D, fT);
  std::ostringstream os;
  write_fit_csv(os, fit);
  emit(st, os.str());
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"coupled graphene electron waveguide switch"};
  app.name("gwswitch");
  app.require_subcommand(1);
  CliState st;

  add_common(app.add_subcommand("modes", "guided transverse mode table (or profiles)"), st);
  add_common(app.add_subcommand("couple", "coupled-mode coefficients for one mode pair"), st);
  add_common(app.add_subcommand("propagate", "two-level amplitude trace along y"), st);
  add_common(app.add_subcommand("switching", "max transfer vs drain gate offset"), st);
  add_common(app.add_subcommand("sweep", "transfer metrics over the (d, D) grid"), st);
  add_common(app.add_subcommand("fit", "exponential distance-law fit of a single-d sweep"), st);

  app.get_subcommand("modes")->callback([&st] { cmd_modes(st); });
  app.get_subcommand("couple")->callback([&st] { cmd_couple(st); });
  app.get_subcommand("propagate")->callback([&st] { cmd_propagate(st); });
  app.get_subcommand("switching")->callback([&st] { cmd_switching(st); });
  app.get_subcommand("sweep")->callback([&st] { cmd_sweep(st); });
  app.get_subcommand("fit")->callback([&st] { cmd_fit(st); });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const PhysicsError& e) {
    std::cerr << "physics error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? static_cast<std::size_t>(argc) - 1 : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args);
}

}  // namespace gws
