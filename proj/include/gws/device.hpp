#pragma once

#include <optional>
#include <string>

namespace gws {

// One gated graphene channel acting as an electron waveguide.
struct WaveguideSpec {
  double width_d_nm = 0.0;
  double gate_V_meV = 0.0;
  std::string label;
};

// Two parallel channels separated by a barrier region of width D. The
// electron energy E is a property of the injected carrier, shared by both
// channels.
struct CouplerSpec {
  WaveguideSpec source;               // well 1
  WaveguideSpec drain;                // well 2
  double separation_D_nm = 0.0;
  double barrier_V0_meV = 0.0;
  double barrier_mass_ratio = 0.067;  // m_eff / m_e in the barrier material
  double energy_E_meV = 0.0;
  bool weak_barrier_warning = false;  // set when V0 <= max(V1, V2)
};

// Flat key-value inputs for build_spec. Absent optionals mean the key was
// not supplied.
struct SpecConfig {
  std::optional<double> d;             // source well width, nm
  std::optional<double> d2;            // drain well width, nm (defaults to d)
  std::optional<double> D;             // well separation, nm
  std::optional<double> V0;            // barrier gate potential, meV
  std::optional<double> V1;            // source gate potential, meV
  std::optional<double> V2;            // drain gate potential, meV (defaults to V1)
  std::optional<double> E;             // electron energy, meV
  std::optional<double> k1d_over_pi;   // alternative energy input: k1 d / pi
  std::optional<double> mass_ratio;    // barrier m_eff / m_e (defaults to 0.067)
};

// Validates and assembles a CouplerSpec. Exactly one of E and k1d_over_pi
// must be given; with k1d_over_pi the energy is E = V1 + hbar v_F k1.
CouplerSpec build_spec(const SpecConfig& cfg);

// Revalidates an already-built spec (used after gate detuning) and refreshes
// the weak-barrier warning flag.
void validate_spec(CouplerSpec& spec);

// k_i = (E - V_i) / (hbar v_F) for well 1 or 2.
double channel_wavevector(const CouplerSpec& spec, int which);

// Signed barrier quantity k0^2 = -(E - V0) * mass_ratio / (hbar^2 / 2 m_e).
// Positive when E < V0 (classically forbidden barrier), negative when the
// carrier rides above the barrier potential.
double barrier_k0_squared(const CouplerSpec& spec);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
  double center() const { return 0.5 * (lo + hi); }
};

// Wells placed symmetrically about x = 0: well 1 on [-D/2 - d1, -D/2],
// well 2 on [D/2, D/2 + d2].
struct CouplerGeometry {
  Interval well1;
  Interval well2;
  double gap_D = 0.0;
};

CouplerGeometry geometry(const CouplerSpec& spec);

}  // namespace gws
