#pragma once

#include "gws/device.hpp"
#include "gws/modes.hpp"

namespace gws {

// Coupled-mode quantities for the pair (mode m of well 1, mode n of well 2).
// C12 drives a1 from a2 and vice versa; delta is the phase mismatch
// beta_1m - beta_2n. coupling_energy = hbar v_F sqrt(C12 C21).
struct CouplingResult {
  int m = 0;
  int n = 0;
  double overlap = 0.0;
  double C12 = 0.0;   // 1/nm
  double C21 = 0.0;   // 1/nm
  double delta = 0.0; // 1/nm
  double coupling_energy_meV = 0.0;
};

// Closed-form overlap of two unit-norm profiles on arbitrary wells. The x
// axis splits at the well edges; every segment integrand is elementary
// (trig x trig, trig x exp, exp x exp) and is evaluated in a form with only
// decaying exponentials, so widely separated wells underflow to 0 instead of
// overflowing.
double overlap_profiles(const GuidedMode& m1, const Interval& well1, bool mirrored1,
                        const GuidedMode& m2, const Interval& well2, bool mirrored2);

// Overlap of mode m1 of the source well with mode m2 of the drain well.
// Drain profiles are mirrored; see profile_value.
double overlap_integral(const GuidedMode& m1, const GuidedMode& m2,
                        const CouplerGeometry& geom);

// Solves both wells and assembles the coupled-mode coefficients
//   C12 = (k2^2 - k0^2) / (2 beta_1m) * overlap
//   C21 = (k1^2 - k0^2) / (2 beta_2n) * overlap
// with the signed k0^2. Throws ModeNotFound when either index exceeds the
// well's mode count; propagates NoModesFound.
CouplingResult coupling_coefficients(const CouplerSpec& spec, int m, int n);

double coupling_energy_meV(double C12, double C21);

}  // namespace gws
