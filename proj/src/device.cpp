#include "gws/device.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gws/errors.hpp"
#include "gws/quantities.hpp"

namespace gws {

CouplerSpec build_spec(const SpecConfig& cfg) {
  if (!cfg.d) throw MissingField("d");
  if (!cfg.D) throw MissingField("D");
  if (!cfg.V0) throw MissingField("V0");
  if (!cfg.V1) throw MissingField("V1");
  if (cfg.E && cfg.k1d_over_pi)
    throw ConfigError("give either E or k1d_over_pi, not both");
  if (!cfg.E && !cfg.k1d_over_pi) throw MissingField("E or k1d_over_pi");

  CouplerSpec spec;
  spec.source = {*cfg.d, *cfg.V1, "source"};
  spec.drain = {cfg.d2.value_or(*cfg.d), cfg.V2.value_or(*cfg.V1), "drain"};
  spec.separation_D_nm = *cfg.D;
  spec.barrier_V0_meV = *cfg.V0;
  spec.barrier_mass_ratio = cfg.mass_ratio.value_or(0.067);

  if (cfg.E) {
    spec.energy_E_meV = *cfg.E;
  } else {
    const double k1 = *cfg.k1d_over_pi * std::numbers::pi / spec.source.width_d_nm;
    spec.energy_E_meV = energy_from_wavevector(k1, spec.source.gate_V_meV);
  }

  validate_spec(spec);
  return spec;
}

void validate_spec(CouplerSpec& spec) {
  if (spec.source.width_d_nm <= 0.0 || spec.drain.width_d_nm <= 0.0)
    throw NonPositiveWidth("well widths must be positive");
  if (spec.separation_D_nm < 0.0)
    throw ConfigError("separation D must be non-negative");
  if (spec.barrier_mass_ratio <= 0.0)
    throw ConfigError("mass_ratio must be positive");
  const double v_max = std::max(spec.source.gate_V_meV, spec.drain.gate_V_meV);
  if (spec.energy_E_meV <= v_max)
    throw EnergyBelowGate("E must exceed both gate potentials for guiding");
  spec.weak_barrier_warning = spec.barrier_V0_meV <= v_max;
}

double channel_wavevector(const CouplerSpec& spec, int which) {
  if (which != 1 && which != 2) throw OutOfDomain("well index must be 1 or 2");
  const double V =
      which == 1 ? spec.source.gate_V_meV : spec.drain.gate_V_meV;
  return wavevector_from_energy(spec.energy_E_meV, V);
}

double barrier_k0_squared(const CouplerSpec& spec) {
  return -(spec.energy_E_meV - spec.barrier_V0_meV) * spec.barrier_mass_ratio /
         constants::hbar2_over_2me_meV_nm2;
}

CouplerGeometry geometry(const CouplerSpec& spec) {
  const double half = 0.5 * spec.separation_D_nm;
  CouplerGeometry g;
  g.well1 = {-half - spec.source.width_d_nm, -half};
  g.well2 = {half, half + spec.drain.width_d_nm};
  g.gap_D = spec.separation_D_nm;
  return g;
}

}  // namespace gws
